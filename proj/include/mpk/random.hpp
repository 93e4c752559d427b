#pragma once

#include <mpk/graph.hpp>

#include <cstdint>

namespace mpk {

// G(n, p) over std::mt19937_64 seeded with `seed`. Pairs (u, v), u < v, are
// visited in lexicographic order; each draws one 64-bit word w and the edge
// is present iff (w >> 11) * 2^-53 < p.
auto generate_random(int n, double p, std::uint64_t seed) -> Graph;

}
