#pragma once

#include <mpk/graph.hpp>
#include <mpk/solvers.hpp>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mpk {

// Colorful independent set instance; colors are 0-based in memory and
// 1-based in the file format.
struct CISInstance {
    Graph graph;
    int k = 0;
    std::vector<int> color;

    auto color_class(int c) const -> VertexSet;
};

auto parse_cis(std::string_view text) -> CISInstance;
auto serialize_cis(const CISInstance & inst) -> std::string;
// Throws std::invalid_argument unless the coloring is proper and complete.
void validate_cis(const CISInstance & inst);
auto is_colorful_independent(const CISInstance & inst, const VertexSet & s) -> bool;

struct PaddedBatch {
    std::vector<CISInstance> instances;
    int k = 0;
    int n = 0;
    int t = 0;
    int m = 0;
    // per instance, m edge slots; repeated entries stand in for duplicated
    // edges, and an edgeless instance has no slots
    std::vector<std::vector<Edge>> slots;
};

auto log2_exact(int x) -> int;
auto pad_instances(std::vector<CISInstance> raw) -> PaddedBatch;

enum class RoleKind { anchor, helper, dial, volatile_vertex, activator, choice };

struct ExclusiveTuple {
    Vertex u;
    Vertex v;
    Vertex w;
    bool two_vertex;
    std::size_t copy;
};

struct MCopy {
    std::vector<Vertex> image; // pattern vertex -> graph vertex
    bool anchor_fixing;
};

// Tree nodes in heap order: root 1, children 2x and 2x+1, leaves q..2q-1.
struct SelectionGadget {
    int p = 0;
    int q = 0;
    Vertex activator = -1;
    std::vector<Vertex> alpha;
    std::vector<Vertex> beta;
    std::vector<Vertex> choices;
};

struct CompositionBuilder {
    // group_sizes[g-1] anchors are created for group g.
    CompositionBuilder(Graph pattern, const std::vector<int> & group_sizes);

    auto anchor(int group, int index) const -> Vertex;
    auto add_vertex(RoleKind role) -> Vertex;
    void connect(Vertex u, Vertex v);
    void join_dial(Vertex v, Vertex anchor);
    void fix_anchors(int copies);
    void make_exclusive(Vertex u, Vertex v, Vertex w);
    auto make_exclusive(Vertex u, Vertex v) -> Vertex;
    auto selection(int p, int q) -> SelectionGadget;

    auto is_dial_vertex(Vertex v) const -> bool { return dial_flag[v] != 0; }
    auto order() const -> int { return graph.order(); }

    GraphBuilder graph;
    Graph pattern;
    std::vector<RoleKind> role;
    std::vector<Vertex> dial_of;
    std::vector<char> dial_flag;
    std::vector<std::vector<Vertex>> anchors;
    std::map<Vertex, std::pair<int, int>> anchor_pos;
    std::map<Vertex, VertexSet> dials;
    std::vector<MCopy> copies;
    std::vector<ExclusiveTuple> exclusive;
};

struct EdgeGadget {
    int r;
    int j;
    Vertex u;
    Vertex v;
    Vertex w_u;
    Vertex w_v;
};

struct CompositionOutput {
    Graph g;
    int d = 0;
    Graph pattern;
    PaddedBatch batch;
    std::vector<RoleKind> roles;
    std::vector<Vertex> dial_of;
    std::vector<std::vector<Vertex>> anchors;
    std::map<Vertex, std::pair<int, int>> anchor_pos;
    std::map<Vertex, VertexSet> dials;
    std::vector<MCopy> copies;
    std::vector<ExclusiveTuple> exclusive;
    SelectionGadget instance_selection;
    std::vector<std::vector<SelectionGadget>> vertex_selection; // [r][i]
    std::vector<Vertex> phi;
    std::vector<std::vector<std::map<Vertex, Vertex>>> psi; // [r][i]: instance vertex -> choice
    std::vector<Vertex> v_r;
    std::vector<std::vector<std::map<Vertex, Vertex>>> x; // [r][i]: instance vertex -> x vertex
    std::vector<EdgeGadget> edge_gadgets;

    auto anchor(int group, int index) const -> Vertex { return anchors[group - 1][index - 1]; }
};

auto composition_budget(int t, int k, int n, int m) -> int;
auto compose(const PaddedBatch & batch, const Graph & pattern) -> CompositionOutput;

auto role_name(const CompositionOutput & out, Vertex v) -> std::string;
auto format_roles(const CompositionOutput & out) -> std::string;
auto seed_assignment(const CompositionOutput & out) -> PartialAssignment;
auto format_seed(const CompositionOutput & out) -> std::string;

auto build_witness_partition(const CompositionOutput & out, int s, const VertexSet & iset) -> ClusterPiPartition;

struct AuditItem {
    std::string name;
    Verdict verdict;
};

// One entry per structural property of the construction.
auto audit_composition(const CompositionOutput & out) -> std::vector<AuditItem>;

}
