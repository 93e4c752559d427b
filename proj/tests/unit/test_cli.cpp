#include <mpk/cli.hpp>
#include <mpk/composition.hpp>
#include <mpk/io.hpp>
#include <mpk/solvers.hpp>

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace mpk;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

auto cli(std::vector<std::string> args) -> Run
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

struct Scratch {
    fs::path dir;

    Scratch()
    {
        dir = fs::temp_directory_path() / ("mpk-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }

    auto file(const std::string & name, const std::string & content) const -> std::string
    {
        auto p = (dir / name).string();
        write_file(p, content);
        return p;
    }
    auto path(const std::string & name) const -> std::string { return (dir / name).string(); }
};

}

TEST_CASE("usage errors exit with 2")
{
    CHECK(cli({}).code == exit_usage);
    CHECK(cli({"frobnicate"}).code == exit_usage);
    CHECK(cli({"solve", "monopolar", "g.graph"}).code == exit_usage);
    CHECK(cli({"generate", "random", "--n", "3", "--p", "1.5"}).code == exit_usage);
    auto missing = cli({"decompose", "/nonexistent/graph"});
    CHECK(missing.code == exit_usage);
    CHECK(missing.err.starts_with("error: "));
    CHECK(cli({"--help"}).code == exit_yes);
}

TEST_CASE("solve monopolar")
{
    Scratch s;
    auto p4 = s.file("p4.graph", "4 3\n0 1\n1 2\n2 3\n");
    auto yes = cli({"solve", "monopolar", "--k", "1", p4});
    CHECK(yes.code == exit_yes);
    CHECK(yes.out == "A: 1 2\nB: 0 3\n");

    auto c5 = s.file("c5.graph", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    auto no = cli({"solve", "monopolar", "--k", "1", c5});
    CHECK(no.code == exit_no);
    CHECK(no.out == "no\n");

    auto big = s.file("big.graph", "25 0\n");
    CHECK(cli({"solve", "monopolar", "--k", "1", big}).code == exit_usage);

    auto bad = s.file("bad.graph", "3 1\n0 7\n");
    auto parse = cli({"solve", "monopolar", "--k", "1", bad});
    CHECK(parse.code == exit_usage);
    CHECK(parse.err == "error: vertex id out of range, line 2\n");
}

TEST_CASE("verify partition")
{
    Scratch s;
    auto p4 = s.file("p4.graph", "4 3\n0 1\n1 2\n2 3\n");
    auto good = s.file("good.part", "A: 1 2\nB: 0 3\n");
    auto bad = s.file("bad.part", "A: 0 1 2\nB: 3\n");
    CHECK(cli({"verify", "partition", "--partition", good, "--k", "1", p4}).out == "valid\n");
    auto r = cli({"verify", "partition", "--partition", bad, "--k", "1", p4});
    CHECK(r.code == exit_no);
    CHECK(r.out == "invalid: A contains induced P3 (0 1 2)\n");

    auto pi = s.file("edgeless.pi", "delta 0\npatterns 0\n");
    CHECK(cli({"verify", "partition", "--partition", good, "--d", "1", "--pi", pi, p4}).code == exit_yes);
    auto broken = s.file("broken.part", "A: 1 2\n");
    CHECK(cli({"verify", "partition", "--partition", broken, "--k", "1", p4}).code == exit_usage);
}

TEST_CASE("kernelize writes stats and the kernel graph")
{
    Scratch s;
    auto k6 = s.file("k6.graph", serialize_graph(graphs::complete(6)));
    auto r = cli({"kernelize", "monopolar", "--k", "1", "--trace", s.path("trace"), k6});
    CHECK(r.code == exit_yes);
    CHECK(r.out == "# stats-v1 before=6 after=3 bound=19\n# k 1\n3 3\n0 1\n0 2\n1 2\n");
    CHECK(read_file(s.path("trace")) == "rule=9 moved=3,4,5 side=shrink\n");
    CHECK(parse_graph(r.out) == graphs::complete(3));

    auto two = s.file("two.graph", serialize_graph(graphs::disjoint_union(graphs::complete(3), graphs::complete(3))));
    auto rej = cli({"kernelize", "monopolar", "--k", "1", two});
    CHECK(rej.code == exit_no);
    CHECK(rej.out.starts_with("reject\nstats-v1 "));

    auto cd = cli({"kernelize", "cluster-delta", "--k", "0", "--delta", "0", "--out", s.path("cd.graph"), two});
    CHECK(cd.code == exit_yes);
    CHECK(cd.out == "stats-v1 before=6 after=0 bound=0\n");
    CHECK(read_file(s.path("cd.graph")).find("# phases is-packing-size label is-unimportant-clique is-many-unimportant\n")
            != std::string::npos);

    auto b = cli({"kernelize", "bsize", "--k", "1", two});
    CHECK(b.code == exit_yes);
    CHECK(parse_graph(b.out).order() == 0);
}

TEST_CASE("generate random is deterministic")
{
    auto a = cli({"generate", "random", "--n", "12", "--p", "0.3", "--seed", "9"});
    auto b = cli({"generate", "random", "--n", "12", "--p", "0.3", "--seed", "9"});
    CHECK(a.code == exit_yes);
    CHECK(a.out == b.out);
    CHECK(parse_graph(a.out).order() == 12);
    CHECK(cli({"generate", "random", "--n", "12", "--p", "0.3", "--seed", "10"}).out != a.out);
}

TEST_CASE("generate compose writes a consistent instance")
{
    Scratch s;
    auto pattern = s.file("p3.graph", "3 2\n0 1\n1 2\n");
    auto yes = s.file("yes.cis", "4 3\n0 2\n0 3\n1 2\ncolors 2\ncolor 0 1\ncolor 1 1\ncolor 2 2\ncolor 3 2\n");
    auto no = s.file("no.cis", "4 4\n0 2\n0 3\n1 2\n1 3\ncolors 2\ncolor 0 1\ncolor 1 1\ncolor 2 2\ncolor 3 2\n");
    auto prefix = s.path("out");
    auto r = cli({"generate", "compose", "--pattern", pattern, "--out", prefix, yes, no});
    REQUIRE(r.code == exit_yes);

    auto g = parse_graph(read_file(prefix + ".graph"));
    CHECK(read_file(prefix + ".d") == "21\n");
    CHECK(r.out == "n " + std::to_string(g.order()) + " m " + std::to_string(g.size()) + " d 21\n");
    auto seed = parse_seed(read_file(prefix + ".seed"), g.order());
    CHECK(seed.free_count() < g.order());

    std::istringstream roles(read_file(prefix + ".roles"));
    std::string line;
    int count = 0;
    while (std::getline(roles, line)) {
        CHECK(line.starts_with(std::to_string(count) + " "));
        ++count;
    }
    CHECK(count == g.order());

    auto again = s.path("again");
    cli({"generate", "compose", "--pattern", pattern, "--out", again, yes, no});
    CHECK(read_file(again + ".graph") == read_file(prefix + ".graph"));

    auto c4 = s.file("c4.graph", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    CHECK(cli({"generate", "compose", "--pattern", c4, "--out", s.path("c4"), yes, no}).code == exit_yes);
    auto two = s.file("two.graph", "2 1\n0 1\n");
    CHECK(cli({"generate", "compose", "--pattern", two, "--out", s.path("bad"), yes}).code == exit_usage);
}

TEST_CASE("selftest passes")
{
    auto r = cli({"selftest"});
    CHECK(r.code == exit_yes);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("ok   monopolar-kernel") != std::string::npos);
}
