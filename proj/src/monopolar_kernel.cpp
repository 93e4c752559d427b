#include <mpk/monopolar_kernel.hpp>

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace mpk {

auto rule_name(Rule r) -> std::string_view
{
    switch (r) {
        case Rule::r0: return "0";
        case Rule::r0_1: return "0.1";
        case Rule::r0_5: return "0.5";
        case Rule::r3: return "3";
        case Rule::r4: return "4";
        case Rule::r5: return "5";
        case Rule::r6: return "6";
        case Rule::r8: return "8";
        case Rule::r1: return "1";
        case Rule::r7: return "7";
        case Rule::r9: return "9";
    }
    return "?";
}

auto parse_rule(std::string_view name) -> Rule
{
    for (auto r : rule_order)
        if (rule_name(r) == name)
            return r;
    throw std::invalid_argument("unknown rule id '" + std::string(name) + "'");
}

auto side_name(Side s) -> std::string_view
{
    switch (s) {
        case Side::a: return "A";
        case Side::b: return "B";
        case Side::shrink: return "shrink";
        case Side::reject: return "reject";
    }
    return "?";
}

auto format_trace_line(const TraceEntry & e) -> std::string
{
    std::ostringstream out;
    out << "rule=" << rule_name(e.rule) << " moved=";
    bool first = true;
    for (auto v : e.moved) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    out << " side=" << side_name(e.side);
    return out.str();
}

auto format_stats(const KernelStats & s) -> std::string
{
    std::ostringstream out;
    out << "stats-v1 before=" << s.before << " after=" << s.after << " bound=" << s.bound;
    return out.str();
}

auto KernelState::initial(Graph g, int k) -> KernelState
{
    if (k < 0)
        throw std::invalid_argument("negative cluster budget");
    KernelState s;
    s.g = std::move(g);
    s.k = k;
    s.refresh_decomposition();
    return s;
}

void KernelState::refresh_decomposition()
{
    dec = nice_clique_decomposition(g, set_union(a_true, b_true));
}

auto KernelState::free_vertices() const -> VertexSet
{
    return set_difference(g.vertices(), set_union(a_true, b_true));
}

auto AuxGraph::max_degree() const -> int
{
    int best = 0;
    for (auto & a : adj)
        best = std::max(best, static_cast<int>(a.size()));
    return best;
}

auto AuxGraph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < static_cast<Vertex>(adj.size()); ++u)
        for (auto v : adj[u])
            if (u < v)
                out.push_back({u, v});
    return out;
}

auto build_aux_graph(const KernelState & state) -> AuxGraph
{
    AuxGraph aux;
    aux.v_c = state.dec.members_of(CliqueKind::large);
    aux.v_i = state.dec.members_of(CliqueKind::vertex);
    aux.adj.assign(state.g.order(), {});
    for (auto u : aux.v_c)
        for (auto v : state.g.neighbors(u))
            if (aux.v_i.contains(v)) {
                aux.adj[u].push_back(v);
                aux.adj[v].push_back(u);
            }
    for (auto & a : aux.adj)
        std::sort(a.begin(), a.end());
    return aux;
}

auto parity_closure(const AuxGraph & aux, Vertex v) -> ParityClosure
{
    if (! aux.contains(v))
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the auxiliary graph");
    std::vector<int> dist(aux.adj.size(), -1);
    std::deque<Vertex> queue{v};
    dist[v] = 0;
    std::vector<Vertex> even, odd;
    while (! queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        (dist[u] % 2 == 0 ? even : odd).push_back(u);
        for (auto w : aux.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return {v, VertexSet(std::move(even)), VertexSet(std::move(odd))};
}

auto aux_reach(const AuxGraph & aux, const VertexSet & sources) -> VertexSet
{
    std::vector<char> seen(aux.adj.size(), 0);
    std::vector<Vertex> stack, out;
    for (auto s : sources)
        if (aux.contains(s) && ! seen[s]) {
            seen[s] = 1;
            stack.push_back(s);
        }
    while (! stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (auto w : aux.adj[u])
            if (! seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return VertexSet(std::move(out));
}

auto compute_v_rep(const KernelState & state, const AuxGraph & aux) -> VertexSet
{
    auto & g = state.g;
    auto index = state.dec.index_of(g.order());
    std::vector<Vertex> fixed, inter;
    for (auto & c : state.dec.cliques)
        if (c.kind == CliqueKind::large)
            fixed.insert(fixed.end(), c.members.begin(), c.members.begin() + 3);
    for (auto [u, v] : g.edges())
        if (aux.v_c.contains(u) && aux.v_c.contains(v) && index[u] != index[v]) {
            inter.push_back(u);
            inter.push_back(v);
        }

    auto v_edge = state.dec.members_of(CliqueKind::edge);
    std::vector<Vertex> n_edge;
    for (auto u : v_edge)
        for (auto w : g.neighbors(u))
            if (aux.contains(w))
                n_edge.push_back(w);

    auto rep = set_union(state.a_true, state.b_true);
    rep = set_union(rep, VertexSet(std::move(fixed)));
    rep = set_union(rep, aux_reach(aux, VertexSet(std::move(inter))));
    rep = set_union(rep, v_edge);
    rep = set_union(rep, aux_reach(aux, VertexSet(std::move(n_edge))));
    return rep;
}

namespace {
    // Connected components of G[s], ordered by lowest member.
    auto clusters_in(const Graph & g, const VertexSet & s) -> std::vector<VertexSet>
    {
        auto sub = induced_subgraph(g, s);
        std::vector<VertexSet> out;
        for (auto & comp : connected_components(sub.graph)) {
            std::vector<Vertex> orig;
            for (auto v : comp)
                orig.push_back(sub.to_original[v]);
            out.emplace_back(std::move(orig));
        }
        return out;
    }

    auto touches(const Graph & g, Vertex v, const VertexSet & s) -> bool
    {
        return std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex u) { return s.contains(u); });
    }

    auto neighbors_in(const Graph & g, Vertex v, const VertexSet & s) -> VertexSet
    {
        std::vector<Vertex> out;
        for (auto u : g.neighbors(v))
            if (s.contains(u))
                out.push_back(u);
        return VertexSet(std::move(out));
    }

    auto has_adjacent_pair(const Graph & g, const VertexSet & s) -> bool
    {
        for (auto u : s)
            for (auto w : g.neighbors(u))
                if (w > u && s.contains(w))
                    return true;
        return false;
    }

    using Kind = RuleAction::Kind;

    auto rule0(const KernelState & s) -> std::optional<RuleAction>
    {
        auto a = is_cluster_graph(induced_subgraph(s.g, s.a_true).graph);
        if (! a.cluster || a.count > s.k || ! is_independent(s.g, s.b_true))
            return RuleAction{Kind::reject, {}};
        return std::nullopt;
    }

    auto rule0_1(const KernelState & s) -> std::optional<RuleAction>
    {
        for (auto v : s.free_vertices())
            if (touches(s.g, v, s.b_true))
                return RuleAction{Kind::to_a, {v}};
        return std::nullopt;
    }

    auto rule0_5(const KernelState & s) -> std::optional<RuleAction>
    {
        for (auto v : s.free_vertices()) {
            auto with_v = s.a_true;
            with_v.insert(v);
            if (! is_cluster_graph(induced_subgraph(s.g, with_v).graph).cluster)
                return RuleAction{Kind::to_b, {v}};
        }
        return std::nullopt;
    }

    auto rule3(const KernelState & s) -> std::optional<RuleAction>
    {
        for (auto v : s.free_vertices())
            for (auto & c : s.dec.cliques) {
                if (c.kind != CliqueKind::large || c.members.contains(v))
                    continue;
                auto hit = neighbors_in(s.g, v, c.members);
                if (hit.size() > 1 && hit.size() <= c.members.size() - 1)
                    return RuleAction{Kind::to_a, hit};
            }
        return std::nullopt;
    }

    auto rule4(const KernelState & s) -> std::optional<RuleAction>
    {
        auto & cl = s.dec.cliques;
        for (std::size_t i = 0; i < cl.size(); ++i) {
            if (cl[i].kind != CliqueKind::large)
                continue;
            for (std::size_t j = i + 1; j < cl.size(); ++j) {
                if (cl[j].kind == CliqueKind::vertex)
                    continue;
                std::vector<Edge> between;
                for (auto u : cl[i].members)
                    for (auto w : s.g.neighbors(u))
                        if (cl[j].members.contains(w))
                            between.push_back({u, w});
                if (between.size() < 2)
                    continue;
                for (std::size_t x = 0; x < between.size(); ++x)
                    for (std::size_t y = x + 1; y < between.size(); ++y)
                        if (between[x].u != between[y].u && between[x].v != between[y].v) {
                            for (auto w : cl[i].members)
                                if (w != between[x].u && w != between[y].u)
                                    return RuleAction{Kind::to_a, {w}};
                        }
                std::vector<Vertex> ends;
                for (auto & e : between)
                    ends.push_back(e.u);
                VertexSet touched(std::move(ends));
                if (touched.size() == 1)
                    return RuleAction{Kind::to_b, touched};
            }
        }
        return std::nullopt;
    }

    auto rule5(const KernelState & s) -> std::optional<RuleAction>
    {
        int large = s.dec.count(CliqueKind::large), edge = s.dec.count(CliqueKind::edge);
        if (large > s.k || large + edge > 2 * s.k)
            return RuleAction{Kind::reject, {}};
        return std::nullopt;
    }

    auto rule6(const KernelState & s) -> std::optional<RuleAction>
    {
        auto clusters = clusters_in(s.g, s.a_true);
        for (auto & c : s.dec.cliques) {
            if (c.kind != CliqueKind::large)
                continue;
            for (auto & cluster : clusters) {
                std::vector<Vertex> adj, non;
                for (auto v : c.members)
                    (touches(s.g, v, cluster) ? adj : non).push_back(v);
                if (adj.size() == 1)
                    return RuleAction{Kind::to_b, {adj.front()}};
                if (non.size() == 1)
                    return RuleAction{Kind::to_b, {non.front()}};
            }
        }
        // with both cases exhausted, a cluster touching a large clique must
        // merge with it into one clique in any yes-instance
        for (auto & c : s.dec.cliques) {
            if (c.kind != CliqueKind::large)
                continue;
            for (auto & cluster : clusters)
                if (std::any_of(c.members.begin(), c.members.end(), [&](Vertex v) { return touches(s.g, v, cluster); })
                        && ! is_clique(s.g, set_union(c.members, cluster)))
                    return RuleAction{Kind::reject, {}};
        }
        return std::nullopt;
    }

    auto rule8(const KernelState & s) -> std::optional<RuleAction>
    {
        if (static_cast<int>(s.b_true.size()) > s.k + 1)
            return RuleAction{Kind::rebuild, {}};
        for (auto & cluster : clusters_in(s.g, s.a_true))
            if (cluster.size() > 1)
                return RuleAction{Kind::rebuild, {}};
        // a singleton of A_true not yet pinned by k+1 vertices of B_true
        for (auto u : s.a_true)
            if (static_cast<int>(neighbors_in(s.g, u, s.b_true).size()) < s.k + 1)
                return RuleAction{Kind::rebuild, {}};
        return std::nullopt;
    }

    auto rule1(const KernelState & s) -> std::optional<RuleAction>
    {
        auto singles = s.dec.members_of(CliqueKind::vertex);
        for (auto v : s.free_vertices())
            if (static_cast<int>(neighbors_in(s.g, v, singles).size()) > s.k)
                return RuleAction{Kind::to_a, {v}};
        return std::nullopt;
    }

    auto rule7(const KernelState & s, const AuxGraph & aux) -> std::optional<RuleAction>
    {
        for (auto v : aux.vertices()) {
            auto pc = parity_closure(aux, v);
            if (aux.v_c.contains(v)) {
                if (has_adjacent_pair(s.g, pc.even) || static_cast<int>(pc.odd.size()) > s.k)
                    return RuleAction{Kind::to_a, {v}};
            }
            else if (static_cast<int>(pc.even.size()) > s.k || has_adjacent_pair(s.g, pc.odd))
                return RuleAction{Kind::to_b, {v}};
        }
        return std::nullopt;
    }

    auto rule9(const KernelState & s, const AuxGraph & aux) -> std::optional<RuleAction>
    {
        auto rep = compute_v_rep(s, aux);
        if (static_cast<int>(rep.size()) < s.g.order())
            return RuleAction{Kind::shrink, rep};
        return std::nullopt;
    }

    auto remap_set(const VertexSet & s, const std::vector<Vertex> & remap) -> VertexSet
    {
        std::vector<Vertex> out;
        for (auto v : s)
            if (remap[v] >= 0)
                out.push_back(remap[v]);
        return VertexSet(std::move(out));
    }

    void rebuild_rule8(KernelState & s)
    {
        auto & g = s.g;
        auto clusters = clusters_in(g, s.a_true);
        auto v3 = s.free_vertices();

        // slots ordered by key: cluster at its lowest member, others at their own id
        struct Slot {
            Vertex key;
            int cluster;
        };
        std::vector<Slot> slots;
        for (std::size_t c = 0; c < clusters.size(); ++c)
            slots.push_back({clusters[c].front(), static_cast<int>(c)});
        for (auto v : v3)
            slots.push_back({v, -1});
        std::sort(slots.begin(), slots.end(), [](auto & x, auto & y) { return x.key < y.key; });

        std::vector<Vertex> remap(g.order(), -1), cluster_id(clusters.size());
        for (std::size_t i = 0; i < slots.size(); ++i) {
            auto id = static_cast<Vertex>(i);
            if (slots[i].cluster >= 0) {
                cluster_id[slots[i].cluster] = id;
                for (auto v : clusters[slots[i].cluster])
                    remap[v] = id;
            }
            else
                remap[slots[i].key] = id;
        }

        int base = static_cast<int>(slots.size());
        int n = base + s.k + 1;
        std::vector<Edge> edges;
        for (auto u : cluster_id)
            for (int j = 0; j <= s.k; ++j)
                edges.push_back({u, base + j});
        for (std::size_t c = 0; c < clusters.size(); ++c)
            for (auto v : v3)
                if (touches(g, v, clusters[c]))
                    edges.push_back({remap[v], cluster_id[c]});
        for (auto [u, v] : g.edges())
            if (v3.contains(u) && v3.contains(v))
                edges.push_back({remap[u], remap[v]});

        TraceEntry entry{Rule::r8, set_union(s.a_true, s.b_true), Side::shrink, remap};
        s.g = Graph(n, std::move(edges));
        s.a_true = VertexSet(std::vector<Vertex>(cluster_id.begin(), cluster_id.end()));
        std::vector<Vertex> fresh;
        for (int j = 0; j <= s.k; ++j)
            fresh.push_back(base + j);
        s.b_true = VertexSet(std::move(fresh));
        s.trace.push_back(std::move(entry));
    }

    void shrink_rule9(KernelState & s, const VertexSet & keep)
    {
        auto sub = induced_subgraph(s.g, keep);
        std::vector<Vertex> remap(s.g.order(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i)
            remap[keep[i]] = static_cast<Vertex>(i);
        TraceEntry entry{Rule::r9, set_difference(s.g.vertices(), keep), Side::shrink, remap};
        s.a_true = remap_set(s.a_true, remap);
        s.b_true = remap_set(s.b_true, remap);
        s.g = std::move(sub.graph);
        s.trace.push_back(std::move(entry));
    }
}

auto find_rule_action(const KernelState & state, Rule rule) -> std::optional<RuleAction>
{
    switch (rule) {
        case Rule::r0: return rule0(state);
        case Rule::r0_1: return rule0_1(state);
        case Rule::r0_5: return rule0_5(state);
        case Rule::r3: return rule3(state);
        case Rule::r4: return rule4(state);
        case Rule::r5: return rule5(state);
        case Rule::r6: return rule6(state);
        case Rule::r8: return rule8(state);
        case Rule::r1: return rule1(state);
        case Rule::r7: return rule7(state, build_aux_graph(state));
        case Rule::r9: return rule9(state, build_aux_graph(state));
    }
    throw std::invalid_argument("unknown rule id");
}

auto rule_applicable(const KernelState & state, Rule rule) -> bool
{
    return find_rule_action(state, rule).has_value();
}

namespace {
    auto perform(KernelState & state, Rule rule, const RuleAction & act) -> RuleOutcome
    {
        switch (act.kind) {
            case Kind::reject:
                state.status = Status::rejected;
                state.trace.push_back({rule, {}, Side::reject, {}});
                return RuleOutcome::reject;
            case Kind::to_a:
                state.a_true.insert(act.vertices);
                state.trace.push_back({rule, act.vertices, Side::a, {}});
                break;
            case Kind::to_b:
                state.b_true.insert(act.vertices);
                state.trace.push_back({rule, act.vertices, Side::b, {}});
                break;
            case Kind::rebuild:
                rebuild_rule8(state);
                break;
            case Kind::shrink:
                shrink_rule9(state, act.vertices);
                break;
        }
        state.refresh_decomposition();
        return RuleOutcome::applied;
    }
}

auto apply_rule(KernelState & state, Rule rule) -> RuleOutcome
{
    if (state.status != Status::running)
        throw std::logic_error("kernel state is not running");
    auto act = find_rule_action(state, rule);
    if (! act)
        return RuleOutcome::inapplicable;
    return perform(state, rule, *act);
}

auto monopolar_kernel_bound(int k) -> std::uint64_t
{
    auto kk = static_cast<std::uint64_t>(k);
    return 9 * kk * kk * kk * kk + 9 * kk + 1;
}

auto kernelize_monopolar(const Graph & g, int k, const KernelObserver * observer) -> MonopolarKernelResult
{
    auto state = KernelState::initial(g, k);
    while (state.status == Status::running) {
        bool applied = false;
        for (auto rule : rule_order) {
            if (rule == Rule::r7 && observer && observer->before_rule7)
                observer->before_rule7(state, build_aux_graph(state));
            auto act = find_rule_action(state, rule);
            if (! act)
                continue;
            if (observer && observer->before_apply)
                observer->before_apply(state, rule);
            perform(state, rule, *act);
            applied = true;
            break;
        }
        if (! applied)
            state.status = Status::done;
    }

    MonopolarKernelResult result;
    result.k = k;
    result.stats.before = g.order();
    result.stats.bound = monopolar_kernel_bound(k);
    if (state.status == Status::rejected) {
        result.outcome = Outcome::reject;
        result.stats.after = 0;
    }
    else {
        result.outcome = Outcome::kernel;
        result.graph = state.g;
        result.stats.after = state.g.order();
    }
    result.trace = state.trace;
    result.final_state = std::move(state);
    return result;
}

}
