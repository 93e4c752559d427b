#pragma once

#include <mpk/decomposition.hpp>
#include <mpk/graph.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mpk {

enum class Rule { r0, r0_1, r0_5, r3, r4, r5, r6, r8, r1, r7, r9 };

// Priority order in which the driver scans the rules.
inline constexpr std::array<Rule, 11> rule_order{
    Rule::r0, Rule::r0_1, Rule::r0_5, Rule::r3, Rule::r4, Rule::r5, Rule::r6, Rule::r8, Rule::r1, Rule::r7, Rule::r9};

auto rule_name(Rule r) -> std::string_view;
auto parse_rule(std::string_view name) -> Rule;

enum class Side { a, b, shrink, reject };

auto side_name(Side s) -> std::string_view;

struct TraceEntry {
    Rule rule;
    VertexSet moved;
    Side side;
    // old id -> new id (-1 when dropped); filled for graph rebuilds only
    std::vector<Vertex> remap;
};

auto format_trace_line(const TraceEntry & e) -> std::string;

enum class Status { running, rejected, done };

struct KernelState {
    Graph g;
    int k = 0;
    VertexSet a_true;
    VertexSet b_true;
    CliqueDecomposition dec;
    std::vector<TraceEntry> trace;
    Status status = Status::running;

    static auto initial(Graph g, int k) -> KernelState;
    void refresh_decomposition();
    auto free_vertices() const -> VertexSet;
};

struct AuxGraph {
    VertexSet v_c;
    VertexSet v_i;
    std::vector<std::vector<Vertex>> adj;

    auto contains(Vertex v) const -> bool { return v_c.contains(v) || v_i.contains(v); }
    auto vertices() const -> VertexSet { return set_union(v_c, v_i); }
    auto max_degree() const -> int;
    auto edges() const -> std::vector<Edge>;
};

auto build_aux_graph(const KernelState & state) -> AuxGraph;

struct ParityClosure {
    Vertex source;
    VertexSet even;
    VertexSet odd;
};

auto parity_closure(const AuxGraph & aux, Vertex v) -> ParityClosure;

// Vertices reachable in the auxiliary graph from any of the sources.
auto aux_reach(const AuxGraph & aux, const VertexSet & sources) -> VertexSet;

auto compute_v_rep(const KernelState & state, const AuxGraph & aux) -> VertexSet;

struct RuleAction {
    enum class Kind { to_a, to_b, reject, rebuild, shrink };
    Kind kind;
    VertexSet vertices;
};

// Side-effect free test of a single rule against the current state.
auto find_rule_action(const KernelState & state, Rule rule) -> std::optional<RuleAction>;
auto rule_applicable(const KernelState & state, Rule rule) -> bool;

enum class RuleOutcome { applied, reject, inapplicable };

auto apply_rule(KernelState & state, Rule rule) -> RuleOutcome;

struct KernelObserver {
    std::function<void(const KernelState &, Rule)> before_apply;
    std::function<void(const KernelState &, const AuxGraph &)> before_rule7;
};

enum class Outcome { reject, kernel };

struct KernelStats {
    int before = 0;
    int after = 0;
    std::uint64_t bound = 0;
};

auto format_stats(const KernelStats & s) -> std::string;

struct KernelResult {
    Outcome outcome = Outcome::kernel;
    Graph graph;
    int k = 0;
    KernelStats stats;

    auto rejected() const -> bool { return outcome == Outcome::reject; }
};

struct MonopolarKernelResult : KernelResult {
    std::vector<TraceEntry> trace;
    KernelState final_state;
};

auto monopolar_kernel_bound(int k) -> std::uint64_t;

auto kernelize_monopolar(const Graph & g, int k, const KernelObserver * observer = nullptr) -> MonopolarKernelResult;

}
