#pragma once

// Reference answers computed by plain enumeration over adjacency bitmasks.
// Nothing here calls into the solvers or kernels under test.

#include <mpk/composition.hpp>
#include <mpk/graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

inline auto masks(const mpk::Graph & g) -> std::vector<Mask>
{
    if (g.order() > 24)
        throw std::invalid_argument("oracle limited to 24 vertices");
    std::vector<Mask> adj(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }
    return adj;
}

// Number of cliques when G[s] is a cluster graph, -1 otherwise.
inline auto cluster_count(const std::vector<Mask> & adj, Mask s) -> int
{
    int count = 0;
    Mask seen = 0;
    for (Mask rest = s; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        Mask closed = (adj[v] & s) | (Mask{1} << v);
        for (Mask m = closed; m; m &= m - 1) {
            int u = std::countr_zero(m);
            if (((adj[u] & s) | (Mask{1} << u)) != closed)
                return -1;
        }
        if (! (seen >> v & 1)) {
            ++count;
            seen |= closed;
        }
    }
    return count;
}

inline auto independent(const std::vector<Mask> & adj, Mask s) -> bool
{
    for (Mask rest = s; rest; rest &= rest - 1)
        if (adj[std::countr_zero(rest)] & s)
            return false;
    return true;
}

inline auto max_degree_within(const std::vector<Mask> & adj, Mask s) -> int
{
    int best = 0;
    for (Mask rest = s; rest; rest &= rest - 1)
        best = std::max(best, std::popcount(adj[std::countr_zero(rest)] & s));
    return best;
}

// A cluster graph with at most k cliques plus an independent set.
inline auto monopolar(const mpk::Graph & g, int k) -> bool
{
    auto adj = masks(g);
    Mask all = (Mask{1} << g.order()) - 1;
    for (Mask b = 0; b <= all; ++b) {
        if (! independent(adj, b))
            continue;
        int c = cluster_count(adj, all & ~b);
        if (c >= 0 && c <= k)
            return true;
    }
    return false;
}

// Some B with |B| <= k, G - B a cluster graph and G[B] accepted by in_b.
inline auto cluster_with_small_b(const mpk::Graph & g, int k,
        const std::function<bool(const std::vector<Mask> &, Mask)> & in_b) -> bool
{
    auto adj = masks(g);
    Mask all = (Mask{1} << g.order()) - 1;
    for (Mask b = 0; b <= all; ++b)
        if (std::popcount(b) <= k && in_b(adj, b) && cluster_count(adj, all & ~b) >= 0)
            return true;
    return false;
}

inline auto isomorphic(const mpk::Graph & a, const mpk::Graph & b) -> bool
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (! b.adjacent(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Every |V(pattern)|-subset checked directly.
inline auto embeddings(const mpk::Graph & g, const mpk::Graph & pattern) -> std::vector<mpk::VertexSet>
{
    std::vector<mpk::VertexSet> out;
    int n = g.order(), p = pattern.order();
    if (p > n)
        return out;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (std::popcount(s) != p)
            continue;
        std::vector<mpk::Vertex> ids;
        for (Mask m = s; m; m &= m - 1)
            ids.push_back(std::countr_zero(m));
        auto sub = mpk::induced_subgraph(g, mpk::VertexSet(ids));
        if (isomorphic(sub.graph, pattern))
            out.push_back(mpk::VertexSet(ids));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Inclusion-minimal hitting sets of size at most k, as bitmasks over the universe.
inline auto minimal_hitting_sets(const std::vector<mpk::VertexSet> & family, int universe, int k) -> std::set<Mask>
{
    std::vector<Mask> sets;
    for (auto & s : family) {
        Mask m = 0;
        for (auto v : s)
            m |= Mask{1} << v;
        sets.push_back(m);
    }
    auto hits = [&](Mask h) {
        return std::all_of(sets.begin(), sets.end(), [&](Mask s) { return (s & h) != 0; });
    };
    std::set<Mask> out;
    for (Mask h = 0; h < (Mask{1} << universe); ++h) {
        if (std::popcount(h) > k || ! hits(h))
            continue;
        bool minimal = true;
        for (Mask rest = h; rest; rest &= rest - 1)
            if (hits(h & ~(Mask{1} << std::countr_zero(rest)))) {
                minimal = false;
                break;
            }
        if (minimal)
            out.insert(h);
    }
    return out;
}

// One vertex per color, pairwise nonadjacent.
inline auto colorful_independent_set(const mpk::CISInstance & inst) -> std::optional<mpk::VertexSet>
{
    std::vector<mpk::Vertex> pick;
    std::function<bool(int)> go = [&](int c) {
        if (c == inst.k)
            return true;
        for (mpk::Vertex v = 0; v < inst.graph.order(); ++v) {
            if (inst.color[v] != c)
                continue;
            bool ok = std::none_of(pick.begin(), pick.end(), [&](mpk::Vertex u) { return inst.graph.adjacent(u, v); });
            if (! ok)
                continue;
            pick.push_back(v);
            if (go(c + 1))
                return true;
            pick.pop_back();
        }
        return false;
    };
    if (! go(0))
        return std::nullopt;
    return mpk::VertexSet(pick);
}

}
