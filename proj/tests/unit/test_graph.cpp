#include "../oracles.hpp"

#include <mpk/io.hpp>
#include <mpk/pattern.hpp>
#include <mpk/random.hpp>

#include <doctest.h>

using namespace mpk;

TEST_CASE("parse_graph reads the edge list format")
{
    auto p3 = parse_graph("3 2\n0 1\n1 2");
    CHECK(p3 == graphs::path(3));

    auto single = parse_graph("1 0\n");
    CHECK(single.order() == 1);
    CHECK(single.size() == 0);

    auto commented = parse_graph("# header follows\n4 1\n\n# edge\n2 3\n");
    CHECK(commented.adjacent(2, 3));
    CHECK(commented.order() == 4);
}

TEST_CASE("parse_graph reports errors with line numbers")
{
    auto message = [](std::string_view text) {
        try {
            parse_graph(text);
        }
        catch (const ParseError & e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("2 1\n0 2") == "vertex id out of range, line 2");
    CHECK(message("3 1\n1 1\n") == "self-loop, line 2");
    CHECK(message("3 2\n0 1\n1 0\n") == "duplicate edge, line 3");
    CHECK(message("x 2\n") == "malformed header, line 1");
    CHECK(message("3 0 7\n") == "malformed header, line 1");
    CHECK(message("3 2\n0 1\n") == "expected 2 edges, found 1, line 2");
}

TEST_CASE("serialization round-trips and sorts edges")
{
    auto g = Graph(4, {{2, 3}, {0, 1}, {1, 3}});
    CHECK(serialize_graph(g) == "4 3\n0 1\n1 3\n2 3\n");
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto r = generate_random(static_cast<int>(seed % 15), 0.4, seed);
        CHECK(parse_graph(serialize_graph(r)) == r);
    }
}

TEST_CASE("induced_subgraph keeps exactly the internal edges")
{
    auto sub = induced_subgraph(graphs::path(3), {0, 2});
    CHECK(sub.graph.order() == 2);
    CHECK(sub.graph.size() == 0);
    CHECK(sub.to_original == std::vector<Vertex>{0, 2});

    auto edge = induced_subgraph(graphs::complete(3), {0, 1});
    CHECK(edge.graph.size() == 1);

    CHECK(induced_subgraph(graphs::cycle(5), {}).graph.order() == 0);
    CHECK_THROWS_AS(induced_subgraph(graphs::path(3), {5}), GraphError);
}

TEST_CASE("enumerate_induced_embeddings on small fixtures")
{
    auto p3 = graphs::path(3);
    CHECK(enumerate_induced_embeddings(graphs::path(4), p3) == std::vector<VertexSet>{{0, 1, 2}, {1, 2, 3}});
    CHECK(enumerate_induced_embeddings(graphs::complete(3), p3).empty());
    CHECK(enumerate_induced_embeddings(graphs::star(3), p3) == std::vector<VertexSet>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    CHECK(enumerate_induced_embeddings(graphs::path(4), p3, 1).size() == 1);
    CHECK_THROWS_AS(enumerate_induced_embeddings(graphs::path(12), graphs::path(9)), PatternTooLarge);
}

TEST_CASE("enumerate_induced_embeddings agrees with subset enumeration")
{
    std::vector<Graph> patterns{graphs::path(3), graphs::complete(3), graphs::path(4), graphs::cycle(4),
            graphs::star(3), Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}), graphs::path(2), Graph(1)};
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto g = generate_random(static_cast<int>(seed % 9), 0.15 + 0.1 * (seed % 7), seed);
        for (auto & p : patterns)
            CHECK(enumerate_induced_embeddings(g, p) == oracle::embeddings(g, p));
    }
}

TEST_CASE("disconnected patterns are enumerated too")
{
    auto two_edges = Graph(4, {{0, 1}, {2, 3}});
    auto g = graphs::path(5);
    CHECK(enumerate_induced_embeddings(g, two_edges) == oracle::embeddings(g, two_edges));
}

TEST_CASE("is_cluster_graph")
{
    CHECK_FALSE(is_cluster_graph(graphs::path(3)).cluster);
    auto k3 = is_cluster_graph(graphs::complete(3));
    CHECK(k3.cluster);
    CHECK(k3.count == 1);
    auto two = is_cluster_graph(Graph(4, {{0, 1}, {2, 3}}));
    CHECK(two.cluster);
    CHECK(two.count == 2);
    CHECK(is_cluster_graph(Graph(0)).count == 0);

    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto g = generate_random(static_cast<int>(seed % 10), 0.3, seed);
        CHECK(is_cluster_graph(g).cluster == enumerate_induced_embeddings(g, graphs::path(3)).empty());
    }
}

TEST_CASE("satisfies_pi")
{
    CHECK(satisfies_pi(Graph(4), classes::cluster()));
    CHECK_FALSE(satisfies_pi(graphs::path(3), PiSpec{{graphs::path(2)}, std::nullopt}));
    CHECK_FALSE(satisfies_pi(graphs::complete(3), PiSpec{{}, 1}));
    CHECK(satisfies_pi(graphs::path(2), classes::max_degree(1)));
    CHECK_FALSE(satisfies_pi(graphs::path(2), classes::edgeless()));
    CHECK(satisfies_pi(graphs::complete(6), classes::universal()));
}

TEST_CASE("PiSpec file format round-trips")
{
    auto text = "delta 2\npatterns 2\npattern\n3 2\n0 1\n1 2\npattern\n2 1\n0 1\n";
    auto pi = parse_pi_spec(text);
    CHECK(pi.max_degree == 2);
    REQUIRE(pi.patterns.size() == 2);
    CHECK(pi.patterns[0] == graphs::path(3));
    CHECK(serialize_pi_spec(pi) == text);

    auto none = parse_pi_spec("delta none\npatterns 0\n");
    CHECK_FALSE(none.max_degree.has_value());
    CHECK_THROWS_AS(parse_pi_spec("delta none\npatterns 1\npattern\n2 0\n"), std::exception);
}

TEST_CASE("has_induced_copy_through matches a direct search")
{
    auto p3 = graphs::path(3);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = generate_random(8, 0.35, seed);
        std::vector<char> inside(g.order(), 0);
        for (Vertex v = 0; v < g.order(); ++v)
            inside[v] = (seed >> (v % 6)) & 1;
        for (Vertex v = 0; v < g.order(); ++v) {
            bool expected = false;
            for (auto & s : oracle::embeddings(g, p3))
                if (s.contains(v)
                        && std::all_of(s.begin(), s.end(), [&](Vertex u) { return u == v || inside[u]; }))
                    expected = true;
            CHECK(has_induced_copy_through(g, p3, v, inside) == expected);
        }
    }
}

TEST_CASE("generate_random is deterministic and honours the extremes")
{
    CHECK(generate_random(5, 0.0, 3).size() == 0);
    CHECK(generate_random(5, 1.0, 3) == graphs::complete(5));
    CHECK(generate_random(9, 0.5, 42) == generate_random(9, 0.5, 42));
    CHECK_THROWS(generate_random(3, 1.5, 1));
}
