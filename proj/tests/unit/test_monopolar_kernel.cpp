#include "../oracles.hpp"

#include <mpk/io.hpp>
#include <mpk/monopolar_kernel.hpp>
#include <mpk/random.hpp>

#include <doctest.h>

#include <random>

using namespace mpk;

namespace {

auto state_of(Graph g, int k, VertexSet a = {}, VertexSet b = {}) -> KernelState
{
    auto s = KernelState::initial(std::move(g), k);
    s.a_true = std::move(a);
    s.b_true = std::move(b);
    s.refresh_decomposition();
    return s;
}

auto action(const KernelState & s, Rule r) -> std::optional<RuleAction>
{
    return find_rule_action(s, r);
}

auto join(Graph a, const Graph & b, std::vector<Edge> extra) -> Graph
{
    auto u = graphs::disjoint_union(a, b);
    auto edges = u.edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    return Graph(u.order(), edges);
}

}

TEST_CASE("rule names round-trip in priority order")
{
    std::vector<std::string> names;
    for (auto r : rule_order) {
        names.emplace_back(rule_name(r));
        CHECK(parse_rule(rule_name(r)) == r);
    }
    CHECK(names == std::vector<std::string>{"0", "0.1", "0.5", "3", "4", "5", "6", "8", "1", "7", "9"});
    CHECK_THROWS(parse_rule("2"));
}

TEST_CASE("rule 0 rejects a broken A_true or B_true")
{
    CHECK(action(state_of(graphs::path(3), 2, {0, 1, 2}), Rule::r0)->kind == RuleAction::Kind::reject);
    CHECK(action(state_of(graphs::path(3), 2, {}, {0, 1}), Rule::r0)->kind == RuleAction::Kind::reject);
    CHECK(action(state_of(Graph(4, {{0, 1}, {2, 3}}), 1, {0, 1, 2, 3}), Rule::r0)->kind == RuleAction::Kind::reject);
    CHECK_FALSE(action(state_of(Graph(4, {{0, 1}, {2, 3}}), 2, {0, 1, 2, 3}), Rule::r0));
}

TEST_CASE("rule 0.1 sends neighbours of B_true to A")
{
    auto act = action(state_of(graphs::path(3), 1, {}, {0}), Rule::r0_1);
    REQUIRE(act);
    CHECK(act->kind == RuleAction::Kind::to_a);
    CHECK(act->vertices == VertexSet{1});
}

TEST_CASE("rule 0.5 sends vertices that would create a P3 in A_true to B")
{
    auto act = action(state_of(graphs::path(3), 1, {0, 2}), Rule::r0_5);
    REQUIRE(act);
    CHECK(act->kind == RuleAction::Kind::to_b);
    CHECK(act->vertices == VertexSet{1});
    CHECK_FALSE(action(state_of(graphs::complete(3), 1, {0, 1}), Rule::r0_5));
}

TEST_CASE("rule 3 moves a partial neighbourhood of a large clique into A")
{
    auto g = Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}});
    auto s = state_of(g, 1);
    REQUIRE(s.dec.cliques.front().members == VertexSet{0, 1, 2, 3});
    auto act = action(s, Rule::r3);
    REQUIRE(act);
    CHECK(act->kind == RuleAction::Kind::to_a);
    CHECK(act->vertices == VertexSet{0, 1});

    auto single = Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}});
    CHECK_FALSE(action(state_of(single, 1), Rule::r3));
}

TEST_CASE("rule 4 on two large cliques")
{
    auto k3 = graphs::complete(3);
    auto matched = state_of(join(k3, k3, {{0, 3}, {1, 4}}), 2);
    REQUIRE(matched.dec.count(CliqueKind::large) == 2);
    auto act = action(matched, Rule::r4);
    REQUIRE(act);
    CHECK(act->kind == RuleAction::Kind::to_a);
    CHECK(act->vertices == VertexSet{2});

    auto fan = action(state_of(join(k3, k3, {{0, 3}, {0, 4}}), 2), Rule::r4);
    REQUIRE(fan);
    CHECK(fan->kind == RuleAction::Kind::to_b);
    CHECK(fan->vertices == VertexSet{0});

    CHECK_FALSE(action(state_of(join(k3, k3, {{0, 3}}), 2), Rule::r4));
}

TEST_CASE("rule 5 counts large and edge cliques")
{
    auto k3 = graphs::complete(3);
    CHECK(action(state_of(join(k3, k3, {}), 1), Rule::r5)->kind == RuleAction::Kind::reject);
    CHECK_FALSE(action(state_of(join(k3, k3, {}), 2), Rule::r5));
    auto three_edges = Graph(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(action(state_of(three_edges, 1), Rule::r5)->kind == RuleAction::Kind::reject);
    CHECK_FALSE(action(state_of(three_edges, 2), Rule::r5));
}

TEST_CASE("rule 6 on a large clique next to an A_true cluster")
{
    auto k3 = graphs::complete(3);
    auto one = action(state_of(join(k3, Graph(1), {{3, 0}}), 2, {3}), Rule::r6);
    REQUIRE(one);
    CHECK(one->kind == RuleAction::Kind::to_b);
    CHECK(one->vertices == VertexSet{0});

    auto all_but_one = action(state_of(join(k3, Graph(1), {{3, 0}, {3, 1}}), 2, {3}), Rule::r6);
    REQUIRE(all_but_one);
    CHECK(all_but_one->vertices == VertexSet{2});

    // the cluster {4,5} sees the whole clique through 4 only, so it cannot merge with it
    auto k4 = graphs::complete(4);
    auto bad = action(state_of(join(k4, graphs::path(2), {{4, 0}, {4, 1}, {4, 2}, {4, 3}}), 2, {4, 5}), Rule::r6);
    REQUIRE(bad);
    CHECK(bad->kind == RuleAction::Kind::reject);

    CHECK_FALSE(action(state_of(join(k4, Graph(1), {{4, 0}, {4, 1}, {4, 2}, {4, 3}}), 2, {4}), Rule::r6));
}

TEST_CASE("rule 8 rebuilds around A_true and B_true")
{
    auto s = state_of(graphs::path(4), 1, {1}, {0});
    REQUIRE(action(s, Rule::r8));
    REQUIRE(apply_rule(s, Rule::r8) == RuleOutcome::applied);
    CHECK(s.g == Graph(5, {{0, 1}, {0, 3}, {0, 4}, {1, 2}}));
    CHECK(s.a_true == VertexSet{0});
    CHECK(s.b_true == VertexSet{3, 4});
    CHECK(s.trace.back().remap == std::vector<Vertex>{-1, 0, 1, 2});
    CHECK_FALSE(action(s, Rule::r8));

    CHECK(action(state_of(Graph(4), 1, {}, {0, 1, 2}), Rule::r8));
    CHECK(action(state_of(graphs::path(2), 1, {0, 1}), Rule::r8));
    CHECK_FALSE(action(state_of(Graph(3), 1), Rule::r8));
}

TEST_CASE("rule 1 moves vertices with many singleton neighbours into A")
{
    auto s = state_of(graphs::star(3), 1);
    REQUIRE(s.dec.count(CliqueKind::vertex) == 2);
    auto act = action(s, Rule::r1);
    REQUIRE(act);
    CHECK(act->kind == RuleAction::Kind::to_a);
    CHECK(act->vertices == VertexSet{0});
    CHECK_FALSE(action(state_of(graphs::star(3), 2), Rule::r1));
}

TEST_CASE("auxiliary graph and parity closures")
{
    // large clique {0,1,2}; 3 and 4 are singletons hanging off 0
    auto g = Graph(5, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {4, 0}});
    auto s = state_of(g, 1);
    auto aux = build_aux_graph(s);
    CHECK(aux.v_c == VertexSet{0, 1, 2});
    CHECK(aux.v_i == VertexSet{3, 4});
    CHECK(aux.edges() == std::vector<Edge>{{0, 3}, {0, 4}});
    CHECK(aux.max_degree() == 2);

    auto pc = parity_closure(aux, 3);
    CHECK(pc.even == VertexSet{3, 4});
    CHECK(pc.odd == VertexSet{0});
    CHECK(aux_reach(aux, {1}) == VertexSet{1});
    CHECK(aux_reach(aux, {4}) == VertexSet{0, 3, 4});
    CHECK_THROWS(parity_closure(aux, 10));

    auto act = action(s, Rule::r7);
    REQUIRE(act);
    CHECK(act->kind == RuleAction::Kind::to_a);
    CHECK(act->vertices == VertexSet{0});
}

TEST_CASE("rule 7 sends a singleton whose odd layer has an edge to B")
{
    // cliques {1,2,3} and {4,5,6}; singletons 0, 7, 8 form the path 0-1-7-4-8-2 in the auxiliary graph
    auto g = Graph(9, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {0, 1}, {7, 1}, {7, 4}, {8, 4}, {8, 2}});
    auto s = state_of(g, 3);
    REQUIRE(s.dec.members_of(CliqueKind::vertex) == VertexSet{0, 7, 8});
    auto pc = parity_closure(build_aux_graph(s), 0);
    CHECK(pc.odd == VertexSet{1, 2, 4});
    auto act = action(s, Rule::r7);
    REQUIRE(act);
    CHECK(act->kind == RuleAction::Kind::to_b);
    CHECK(act->vertices == VertexSet{0});
}

TEST_CASE("v_rep keeps three vertices per large clique and what edge cliques reach")
{
    auto k4 = Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto s = state_of(k4, 1);
    CHECK(compute_v_rep(s, build_aux_graph(s)) == VertexSet{0, 1, 2});

    // edge clique {4,5}; 5 touches singleton 6, which touches large vertex 3
    auto g = join(k4, Graph(3, {{0, 1}}), {{5, 6}, {6, 3}});
    auto t = state_of(g, 2);
    REQUIRE(t.dec.members_of(CliqueKind::edge) == VertexSet{4, 5});
    CHECK(compute_v_rep(t, build_aux_graph(t)) == VertexSet{0, 1, 2, 3, 4, 5, 6});

    auto apart = join(k4, Graph(1), {});
    auto u = state_of(apart, 1);
    CHECK(compute_v_rep(u, build_aux_graph(u)) == VertexSet{0, 1, 2});
    auto act = action(u, Rule::r9);
    REQUIRE(act);
    CHECK(act->kind == RuleAction::Kind::shrink);
}

TEST_CASE("kernel of small cliques")
{
    auto r = kernelize_monopolar(graphs::complete(6), 1);
    REQUIRE_FALSE(r.rejected());
    CHECK(r.graph == graphs::complete(3));
    CHECK(r.stats.before == 6);
    CHECK(r.stats.after == 3);
    CHECK(format_stats(r.stats) == "stats-v1 before=6 after=3 bound=19");
    CHECK(monopolar_kernel_bound(2) == 9 * 16 + 18 + 1);

    CHECK(kernelize_monopolar(graphs::disjoint_union(graphs::complete(3), graphs::complete(3)), 1).rejected());
    CHECK_THROWS(kernelize_monopolar(graphs::path(2), -1));
}

TEST_CASE("regression graphs keep their no answer")
{
    for (auto text : {"6 4\n0 3\n0 4\n0 5\n1 2\n",
                 "7 14\n0 2\n0 3\n0 4\n0 5\n0 6\n1 3\n1 4\n1 5\n2 5\n2 6\n3 4\n3 5\n4 5\n5 6\n"}) {
        auto g = parse_graph(text);
        REQUIRE_FALSE(oracle::monopolar(g, 1));
        auto r = kernelize_monopolar(g, 1);
        CHECK((r.rejected() || ! oracle::monopolar(r.graph, 1)));
    }
}

TEST_CASE("trace lines")
{
    CHECK(format_trace_line({Rule::r0_1, {1, 4}, Side::a, {}}) == "rule=0.1 moved=1,4 side=A");
    CHECK(format_trace_line({Rule::r5, {}, Side::reject, {}}) == "rule=5 moved= side=reject");

    auto r = kernelize_monopolar(graphs::star(3), 1);
    REQUIRE_FALSE(r.trace.empty());
    CHECK(format_trace_line(r.trace.front()) == "rule=1 moved=0 side=A");
}

TEST_CASE("planted monopolar graphs keep their answer")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 300; ++round) {
        int k = 1 + round % 3;
        int n = 6 + round % 8;
        std::vector<int> where(n);
        for (auto & w : where)
            w = static_cast<int>(rng() % (k + 1)) - 1; // -1 = B, otherwise cluster id
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                bool same = where[u] >= 0 && where[u] == where[v];
                bool cross = (where[u] < 0) != (where[v] < 0);
                if (same || (cross && rng() % 3 == 0))
                    edges.push_back({u, v});
            }
        Graph g(n, edges);
        REQUIRE(oracle::monopolar(g, k));
        auto r = kernelize_monopolar(g, k);
        CHECK_FALSE(r.rejected());
        if (! r.rejected() && r.graph.order() <= 20)
            CHECK(oracle::monopolar(r.graph, k));
    }
}

TEST_CASE("random graphs: equivalence, bound and number of steps")
{
    for (std::uint64_t seed = 0; seed < 600; ++seed) {
        int n = 4 + static_cast<int>(seed % 9);
        int k = static_cast<int>(seed % 4);
        auto g = generate_random(n, 0.2 + 0.1 * (seed % 7), seed);
        auto r = kernelize_monopolar(g, k);
        bool expected = oracle::monopolar(g, k);
        if (r.rejected())
            CHECK_FALSE(expected);
        else {
            CHECK(r.graph.order() <= static_cast<int>(monopolar_kernel_bound(k)));
            if (r.graph.order() <= 20)
                CHECK(oracle::monopolar(r.graph, k) == expected);
        }
        CHECK(r.trace.size() <= static_cast<std::size_t>(4 * n + 4));
    }
}
