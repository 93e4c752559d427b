#include <mpk/random.hpp>

#include <random>
#include <stdexcept>

namespace mpk {

auto generate_random(int n, double p, std::uint64_t seed) -> Graph
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    if (! (p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability outside [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
                edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

}
