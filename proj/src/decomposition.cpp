#include <mpk/decomposition.hpp>

#include <algorithm>
#include <array>
#include <string>
#include <sstream>

namespace mpk {

auto kind_name(CliqueKind k) -> std::string_view
{
    switch (k) {
        case CliqueKind::large: return "large";
        case CliqueKind::edge: return "edge";
        case CliqueKind::vertex: return "vertex";
    }
    return "?";
}

auto CliqueDecomposition::count(CliqueKind k) const -> int
{
    return static_cast<int>(std::count_if(cliques.begin(), cliques.end(), [&](auto & c) { return c.kind == k; }));
}

auto CliqueDecomposition::members_of(CliqueKind k) const -> VertexSet
{
    std::vector<Vertex> all;
    for (auto & c : cliques)
        if (c.kind == k)
            all.insert(all.end(), c.members.begin(), c.members.end());
    return VertexSet(std::move(all));
}

auto CliqueDecomposition::index_of(int n) const -> std::vector<int>
{
    std::vector<int> idx(n, -1);
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (auto v : cliques[i].members)
            if (v >= 0 && v < n)
                idx[v] = static_cast<int>(i);
    return idx;
}

auto nice_clique_decomposition(const Graph & g, const VertexSet & excluded) -> CliqueDecomposition
{
    int n = g.order();
    std::vector<char> free(n, 1);
    for (auto v : excluded)
        free[v] = 0;

    CliqueDecomposition dec;

    // triangles a < b < c in lexicographic order
    std::vector<std::array<Vertex, 3>> triangles;
    for (auto [a, b] : g.edges()) {
        if (! free[a] || ! free[b])
            continue;
        auto & na = g.neighbors(a);
        auto & nb = g.neighbors(b);
        std::vector<Vertex> common;
        std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(common));
        for (auto c : common)
            if (c > b && free[c])
                triangles.push_back({a, b, c});
    }
    std::sort(triangles.begin(), triangles.end());

    for (auto & t : triangles) {
        if (! free[t[0]] || ! free[t[1]] || ! free[t[2]])
            continue;
        std::vector<Vertex> clique(t.begin(), t.end());
        for (;;) {
            Vertex pick = -1;
            for (auto c : g.neighbors(clique.front())) {
                if (! free[c] || std::find(clique.begin(), clique.end(), c) != clique.end())
                    continue;
                if (std::all_of(clique.begin(), clique.end(), [&](Vertex x) { return g.adjacent(x, c); })) {
                    pick = c;
                    break;
                }
            }
            if (pick < 0)
                break;
            clique.push_back(pick);
        }
        for (auto v : clique)
            free[v] = 0;
        dec.cliques.push_back({CliqueKind::large, VertexSet(std::move(clique))});
    }

    for (auto [u, v] : g.edges())
        if (free[u] && free[v]) {
            free[u] = free[v] = 0;
            dec.cliques.push_back({CliqueKind::edge, VertexSet{u, v}});
        }

    for (Vertex v = 0; v < n; ++v)
        if (free[v])
            dec.cliques.push_back({CliqueKind::vertex, VertexSet{v}});

    return dec;
}

auto verify_decomposition(const Graph & g, const CliqueDecomposition & dec, const VertexSet & excluded) -> Verdict
{
    int n = g.order();
    std::vector<int> hits(n, 0);
    for (auto & c : dec.cliques)
        for (auto v : c.members) {
            if (v < 0 || v >= n)
                return Verdict::fail("partition: vertex id out of range");
            ++hits[v];
        }
    for (Vertex v = 0; v < n; ++v) {
        int want = excluded.contains(v) ? 0 : 1;
        if (hits[v] != want)
            return Verdict::fail("partition: vertex " + std::to_string(v) + " covered " + std::to_string(hits[v])
                    + " times");
    }

    for (std::size_t i = 0; i < dec.cliques.size(); ++i) {
        auto & c = dec.cliques[i];
        if (! is_clique(g, c.members))
            return Verdict::fail("clique: C" + std::to_string(i) + " is not a clique");
        auto size = c.members.size();
        bool kind_ok = (c.kind == CliqueKind::large && size >= 3) || (c.kind == CliqueKind::edge && size == 2)
            || (c.kind == CliqueKind::vertex && size == 1);
        if (! kind_ok)
            return Verdict::fail("clique: C" + std::to_string(i) + " has size " + std::to_string(size)
                    + " but kind " + std::string(kind_name(c.kind)));
    }

    for (std::size_t i = 1; i < dec.cliques.size(); ++i)
        if (static_cast<int>(dec.cliques[i].kind) < static_cast<int>(dec.cliques[i - 1].kind))
            return Verdict::fail("ordering: " + std::string(kind_name(dec.cliques[i].kind)) + " clique C"
                    + std::to_string(i) + " follows " + std::string(kind_name(dec.cliques[i - 1].kind)) + " clique");

    // C_i maximal within the union of C_j, j >= i
    auto index = dec.index_of(n);
    for (std::size_t i = 0; i < dec.cliques.size(); ++i) {
        auto & c = dec.cliques[i].members;
        for (Vertex x = 0; x < n; ++x) {
            if (index[x] < static_cast<int>(i) || c.contains(x))
                continue;
            bool all = std::all_of(c.begin(), c.end(), [&](Vertex y) { return g.adjacent(x, y); });
            if (all)
                return Verdict::fail("maximality: C" + std::to_string(i) + " extends by vertex " + std::to_string(x));
        }
    }

    auto tail = set_union(dec.members_of(CliqueKind::edge), dec.members_of(CliqueKind::vertex));
    for (auto a : tail)
        for (auto b : g.neighbors(a))
            if (b > a && tail.contains(b))
                for (auto c : g.neighbors(b))
                    if (c > b && tail.contains(c) && g.adjacent(a, c))
                        return Verdict::fail("triangle-free: " + std::to_string(a) + " " + std::to_string(b) + " "
                                + std::to_string(c) + " among edge and vertex cliques");

    return Verdict::pass();
}

auto vertex_cliques_independent(const Graph & g, const CliqueDecomposition & dec) -> bool
{
    return is_independent(g, dec.members_of(CliqueKind::vertex));
}

auto format_decomposition(const CliqueDecomposition & dec) -> std::string
{
    std::ostringstream out;
    for (auto & c : dec.cliques)
        out << kind_name(c.kind) << ": " << to_string(c.members) << '\n';
    return out.str();
}

}
