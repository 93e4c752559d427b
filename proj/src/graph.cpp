#include <mpk/graph.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mpk {

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

auto VertexSet::contains(Vertex v) const -> bool
{
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(Vertex v)
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v)
        ids_.insert(it, v);
}

void VertexSet::insert(const VertexSet & other)
{
    *this = set_union(*this, other);
}

void VertexSet::erase(Vertex v)
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v)
        ids_.erase(it);
}

auto set_union(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    std::vector<Vertex> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

auto set_intersection(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

auto set_difference(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

auto to_string(const VertexSet & s) -> std::string
{
    std::ostringstream out;
    bool first = true;
    for (auto v : s) {
        if (! first)
            out << ' ';
        out << v;
        first = false;
    }
    return out.str();
}

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(n > 0 ? n : 0)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    for (auto & e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw GraphError("vertex id out of range");
        if (e.u == e.v)
            throw GraphError("self-loop");
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw GraphError("duplicate edge");
    for (auto & e : edges) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto & a : adj_)
        std::sort(a.begin(), a.end());
    edges_ = std::move(edges);
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    if (adj_[u].size() > adj_[v].size())
        std::swap(u, v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

auto Graph::max_degree() const -> int
{
    int best = 0;
    for (auto & a : adj_)
        best = std::max(best, static_cast<int>(a.size()));
    return best;
}

auto Graph::vertices() const -> VertexSet
{
    std::vector<Vertex> all(n_);
    std::iota(all.begin(), all.end(), 0);
    return VertexSet(std::move(all));
}

auto GraphBuilder::add_vertex() -> Vertex
{
    adj_.emplace_back();
    return order() - 1;
}

void GraphBuilder::connect(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw GraphError("vertex id out of range");
    if (u == v)
        throw GraphError("self-loop");
    if (adjacent(u, v))
        return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

auto GraphBuilder::adjacent(Vertex u, Vertex v) const -> bool
{
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

auto GraphBuilder::build() const -> Graph
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < order(); ++u)
        for (auto v : adj_[u])
            if (u < v)
                edges.push_back({u, v});
    return Graph(order(), std::move(edges));
}

auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph
{
    std::vector<Vertex> local(g.order(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.order())
            throw GraphError("vertex id out of range");
        local[s[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (auto u : s)
        for (auto v : g.neighbors(u))
            if (u < v && local[v] >= 0)
                edges.push_back({local[u], local[v]});
    return {Graph(static_cast<int>(s.size()), std::move(edges)), s.ids()};
}

auto connected_components(const Graph & g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    std::vector<char> seen(g.order(), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s}, stack{s};
        seen[s] = 1;
        while (! stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto v : g.neighbors(u))
                if (! seen[v]) {
                    seen[v] = 1;
                    comp.push_back(v);
                    stack.push_back(v);
                }
        }
        out.emplace_back(std::move(comp));
    }
    return out;
}

auto is_connected(const Graph & g) -> bool
{
    return connected_components(g).size() <= 1;
}

auto is_cluster_graph(const Graph & g) -> ClusterTest
{
    auto comps = connected_components(g);
    bool cluster = true;
    for (auto & c : comps)
        for (auto v : c)
            if (g.degree(v) != static_cast<int>(c.size()) - 1)
                cluster = false;
    return {cluster, static_cast<int>(comps.size())};
}

auto is_independent(const Graph & g, const VertexSet & s) -> bool
{
    for (auto u : s)
        for (auto v : g.neighbors(u))
            if (s.contains(v))
                return false;
    return true;
}

auto is_clique(const Graph & g, const VertexSet & s) -> bool
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (! g.adjacent(s[i], s[j]))
                return false;
    return true;
}

namespace graphs {
    auto path(int n) -> Graph
    {
        std::vector<Edge> e;
        for (int i = 0; i + 1 < n; ++i)
            e.push_back({i, i + 1});
        return Graph(n, e);
    }

    auto cycle(int n) -> Graph
    {
        auto e = path(n).edges();
        if (n >= 3)
            e.push_back({0, n - 1});
        return Graph(n, e);
    }

    auto complete(int n) -> Graph
    {
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                e.push_back({i, j});
        return Graph(n, e);
    }

    auto star(int leaves) -> Graph
    {
        std::vector<Edge> e;
        for (int i = 1; i <= leaves; ++i)
            e.push_back({0, i});
        return Graph(leaves + 1, e);
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        auto e = a.edges();
        for (auto [u, v] : b.edges())
            e.push_back({u + a.order(), v + a.order()});
        return Graph(a.order() + b.order(), e);
    }
}

}
