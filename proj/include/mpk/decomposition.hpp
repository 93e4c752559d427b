#pragma once

#include <mpk/graph.hpp>

#include <string_view>
#include <vector>

namespace mpk {

enum class CliqueKind { large, edge, vertex };

auto kind_name(CliqueKind k) -> std::string_view;

struct Clique {
    CliqueKind kind;
    VertexSet members;
};

struct CliqueDecomposition {
    std::vector<Clique> cliques;

    auto count(CliqueKind k) const -> int;
    auto members_of(CliqueKind k) const -> VertexSet;
    // clique index per vertex, -1 for vertices not covered
    auto index_of(int n) const -> std::vector<int>;
};

// Large cliques grown from triangles, then a greedy matching, then singletons;
// vertices in excluded are left out.
auto nice_clique_decomposition(const Graph & g, const VertexSet & excluded = {}) -> CliqueDecomposition;

// Checks partition, clique-ness, ordering, maximality and triangle-freeness of
// the edge and vertex part, reporting the first violated property.
auto verify_decomposition(const Graph & g, const CliqueDecomposition & dec, const VertexSet & excluded = {}) -> Verdict;

auto vertex_cliques_independent(const Graph & g, const CliqueDecomposition & dec) -> bool;

auto format_decomposition(const CliqueDecomposition & dec) -> std::string;

}
