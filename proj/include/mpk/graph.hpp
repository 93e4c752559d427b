#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mpk {

using Vertex = int;

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids);
    explicit VertexSet(std::vector<Vertex> ids);

    auto contains(Vertex v) const -> bool;
    auto size() const -> std::size_t { return ids_.size(); }
    auto empty() const -> bool { return ids_.empty(); }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    auto operator[](std::size_t i) const -> Vertex { return ids_[i]; }
    auto ids() const -> const std::vector<Vertex> & { return ids_; }
    auto front() const -> Vertex { return ids_.front(); }
    auto back() const -> Vertex { return ids_.back(); }

    void insert(Vertex v);
    void insert(const VertexSet & other);
    void erase(Vertex v);

    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;
    friend auto operator<=>(const VertexSet &, const VertexSet &) = default;

private:
    std::vector<Vertex> ids_;
};

auto set_union(const VertexSet & a, const VertexSet & b) -> VertexSet;
auto set_intersection(const VertexSet & a, const VertexSet & b) -> VertexSet;
auto set_difference(const VertexSet & a, const VertexSet & b) -> VertexSet;
auto to_string(const VertexSet & s) -> std::string;

struct Edge {
    Vertex u;
    Vertex v;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<Edge> edges);

    auto order() const -> int { return n_; }
    auto size() const -> std::size_t { return edges_.size(); }
    auto neighbors(Vertex v) const -> const std::vector<Vertex> & { return adj_[v]; }
    auto degree(Vertex v) const -> int { return static_cast<int>(adj_[v].size()); }
    auto adjacent(Vertex u, Vertex v) const -> bool;
    auto edges() const -> const std::vector<Edge> & { return edges_; }
    auto max_degree() const -> int;
    auto vertices() const -> VertexSet;

    friend auto operator==(const Graph & a, const Graph & b) -> bool
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

// Incremental construction; connect() ignores edges that already exist.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(int n) : adj_(n) {}

    auto add_vertex() -> Vertex;
    auto order() const -> int { return static_cast<int>(adj_.size()); }
    void connect(Vertex u, Vertex v);
    auto adjacent(Vertex u, Vertex v) const -> bool;
    auto neighbors(Vertex v) const -> const std::vector<Vertex> & { return adj_[v]; }
    auto build() const -> Graph;

private:
    std::vector<std::vector<Vertex>> adj_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;
};

auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph;

struct ClusterTest {
    bool cluster;
    int count;
};

auto is_cluster_graph(const Graph & g) -> ClusterTest;
auto connected_components(const Graph & g) -> std::vector<VertexSet>;
auto is_connected(const Graph & g) -> bool;
auto is_independent(const Graph & g, const VertexSet & s) -> bool;
auto is_clique(const Graph & g, const VertexSet & s) -> bool;

struct Verdict {
    bool ok = true;
    std::string reason;

    static auto pass() -> Verdict { return {}; }
    static auto fail(std::string why) -> Verdict { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

namespace graphs {
    auto path(int n) -> Graph;
    auto cycle(int n) -> Graph;
    auto complete(int n) -> Graph;
    auto star(int leaves) -> Graph;
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
}

}
