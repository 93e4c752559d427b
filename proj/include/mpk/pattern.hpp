#pragma once

#include <mpk/graph.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mpk {

inline constexpr int max_pattern_order = 8;

class PatternTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A hereditary class given by connected forbidden induced subgraphs and an
// optional maximum degree.
struct PiSpec {
    std::vector<Graph> patterns;
    std::optional<int> max_degree;

    auto max_order() const -> int;
};

auto parse_pi_spec(std::string_view text) -> PiSpec;
auto serialize_pi_spec(const PiSpec & pi) -> std::string;

namespace classes {
    auto cluster() -> PiSpec;
    auto universal() -> PiSpec;
    auto edgeless() -> PiSpec;
    auto max_degree(int delta) -> PiSpec;
}

auto is_isomorphic(const Graph & a, const Graph & b) -> bool;

// Vertex subsets S with G[S] isomorphic to the pattern, sorted
// lexicographically and truncated to limit entries.
auto enumerate_induced_embeddings(const Graph & g, const Graph & pattern,
        std::optional<std::size_t> limit = std::nullopt) -> std::vector<VertexSet>;

auto satisfies_pi(const Graph & g, const PiSpec & pi) -> bool;

// Membership test for G[S] where S = { v : inside[v] }.
auto satisfies_pi_within(const Graph & g, const PiSpec & pi, const std::vector<char> & inside) -> bool;

// Whether G[S + v] has an induced copy of the connected pattern that uses v,
// where S = { u : inside[u] }.
auto has_induced_copy_through(const Graph & g, const Graph & pattern, Vertex v,
        const std::vector<char> & inside) -> bool;

}
