#include <mpk/cli.hpp>
#include <mpk/composition.hpp>
#include <mpk/decomposition.hpp>
#include <mpk/io.hpp>
#include <mpk/monopolar_kernel.hpp>
#include <mpk/pattern.hpp>
#include <mpk/random.hpp>
#include <mpk/size_kernels.hpp>
#include <mpk/solvers.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace mpk {

namespace {
    class Failure : public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

    auto load_graph(const std::string & path) -> Graph
    {
        return parse_graph(read_file(path));
    }

    // "A: ids" / "B: ids" as written by format_partition
    auto parse_partition_file(const std::string & text, int n) -> std::pair<VertexSet, VertexSet>
    {
        std::istringstream in(text);
        LineReader reader(in);
        std::vector<std::string> tok;
        std::vector<Vertex> a, b;
        bool seen_a = false, seen_b = false;
        while (reader.next(tok)) {
            if (tok[0] != "A:" && tok[0] != "B:")
                reader.fail("expected 'A:' or 'B:'");
            auto & dest = tok[0] == "A:" ? a : b;
            auto & seen = tok[0] == "A:" ? seen_a : seen_b;
            if (seen)
                reader.fail("side listed twice");
            seen = true;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                auto v = parse_int(tok[i], reader);
                if (v < 0 || v >= n)
                    reader.fail("vertex id out of range");
                dest.push_back(static_cast<Vertex>(v));
            }
        }
        if (! seen_a || ! seen_b)
            throw ParseError("partition needs both 'A:' and 'B:' lines", reader.line());
        return {VertexSet(std::move(a)), VertexSet(std::move(b))};
    }

    void emit(const std::string & path, const std::string & content, std::ostream & out)
    {
        if (path.empty())
            out << content;
        else
            write_file(path, content);
    }

    struct Check {
        std::string name;
        std::function<Verdict()> run;
    };

    auto selftest_checks() -> std::vector<Check>
    {
        std::vector<Graph> fixtures{graphs::path(3), graphs::complete(3), graphs::cycle(5), graphs::star(4),
                graphs::disjoint_union(graphs::complete(3), graphs::complete(3)), graphs::complete(5)};
        for (std::uint64_t s = 1; s <= 30; ++s)
            fixtures.push_back(generate_random(7 + static_cast<int>(s % 4), 0.45, s));

        std::vector<Check> checks;
        checks.push_back({"graph-round-trip", [=] {
            for (auto & g : fixtures)
                if (parse_graph(serialize_graph(g)) != g)
                    return Verdict::fail("round trip changed a graph");
            return Verdict::pass();
        }});
        checks.push_back({"cluster-iff-p3-free", [=] {
            for (auto & g : fixtures)
                if (is_cluster_graph(g).cluster != enumerate_induced_embeddings(g, graphs::path(3), 1).empty())
                    return Verdict::fail("cluster test disagrees with P3 enumeration");
            return Verdict::pass();
        }});
        checks.push_back({"decomposition", [=] {
            for (auto & g : fixtures) {
                auto dec = nice_clique_decomposition(g);
                if (auto v = verify_decomposition(g, dec); ! v)
                    return v;
                if (! vertex_cliques_independent(g, dec))
                    return Verdict::fail("vertex cliques not independent");
            }
            return Verdict::pass();
        }});
        checks.push_back({"monopolar-kernel", [=] {
            for (auto & g : fixtures)
                for (int k = 0; k <= 3; ++k) {
                    auto res = kernelize_monopolar(g, k);
                    bool before = solve_monopolar_bruteforce(g, k).has_value();
                    bool after = ! res.rejected() && solve_monopolar_bruteforce(res.graph, res.k).has_value();
                    if (before != after)
                        return Verdict::fail("answer changed for k = " + std::to_string(k));
                    if (! res.rejected() && static_cast<std::uint64_t>(res.graph.order()) > monopolar_kernel_bound(k))
                        return Verdict::fail("kernel exceeds bound");
                }
            return Verdict::pass();
        }});
        checks.push_back({"cluster-delta-kernel", [=] {
            for (auto & g : fixtures)
                for (int k = 0; k <= 2; ++k) {
                    auto res = kernelize_cluster_delta(g, k, 0);
                    auto pi = classes::edgeless();
                    bool before = solve_bounded_b_bruteforce(g, k, classes::cluster(), pi).has_value();
                    bool after = ! res.rejected()
                            && solve_bounded_b_bruteforce(res.graph, k, classes::cluster(), pi).has_value();
                    if (before != after)
                        return Verdict::fail("answer changed for k = " + std::to_string(k));
                }
            return Verdict::pass();
        }});
        return checks;
    }

    auto pi_or_default(const std::string & path, PiSpec fallback) -> PiSpec
    {
        return path.empty() ? fallback : parse_pi_spec(read_file(path));
    }
}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Kernels, exact solvers and instance generators for graph partition recognition", "mpk"};
    app.require_subcommand(1);
    int status = exit_yes;
    std::function<void()> action;

    // decompose
    auto * decompose = app.add_subcommand("decompose", "Nice clique decomposition of a graph");
    std::string graph_path;
    decompose->add_option("graph", graph_path, "graph file")->required();
    decompose->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto dec = nice_clique_decomposition(g);
            out << format_decomposition(dec);
            if (auto v = verify_decomposition(g, dec); ! v)
                throw Failure("decomposition check failed: " + v.reason);
        };
    });

    // solve
    auto * solve = app.add_subcommand("solve", "Exact solvers");
    solve->require_subcommand(1);
    int k = -1, d = -1, delta = -1, max_free = propagation_max_free, max_n = bruteforce_max_n;
    std::string pi_path, seed_path, out_path;

    auto * solve_mono = solve->add_subcommand("monopolar", "Monopolar partition with at most k clusters");
    solve_mono->add_option("--k", k, "cluster budget")->required()->check(CLI::NonNegativeNumber);
    solve_mono->add_option("--max-n", max_n, "vertex guard")->check(CLI::NonNegativeNumber);
    solve_mono->add_option("graph", graph_path, "graph file")->required();
    solve_mono->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto p = solve_monopolar_bruteforce(g, k, max_n);
            if (! p) {
                out << "no\n";
                status = exit_no;
                return;
            }
            out << format_partition(p->a, p->b);
        };
    });

    auto * solve_pi = solve->add_subcommand("cluster-pi", "Cluster-Pi partition with at most d clusters");
    solve_pi->add_option("--d", d, "cluster budget")->required()->check(CLI::NonNegativeNumber);
    solve_pi->add_option("--pi", pi_path, "class of B (PiSpec file)")->required();
    solve_pi->add_option("--seed", seed_path, "partial assignment file");
    solve_pi->add_option("--max-free", max_free, "guard on unseeded vertices")->check(CLI::NonNegativeNumber);
    solve_pi->add_option("graph", graph_path, "graph file")->required();
    solve_pi->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto pi = parse_pi_spec(read_file(pi_path));
            auto seed = seed_path.empty() ? PartialAssignment(g.order()) : parse_seed(read_file(seed_path), g.order());
            SolverStats stats;
            auto p = solve_cluster_pi(g, d, pi, seed, {max_free}, &stats);
            if (! p) {
                out << "no\n";
                status = exit_no;
                return;
            }
            out << format_partition(p->a, p->b);
        };
    });

    // kernelize
    auto * kernelize = app.add_subcommand("kernelize", "Kernelization");
    kernelize->require_subcommand(1);
    std::string trace_path;

    auto report = [&](const KernelResult & res, const std::string & extra) {
        if (res.rejected()) {
            out << "reject\n" << format_stats(res.stats) << "\n";
            status = exit_no;
            return;
        }
        auto body = "# " + format_stats(res.stats) + "\n" + extra + serialize_graph(res.graph);
        emit(out_path, body, out);
        if (! out_path.empty())
            out << format_stats(res.stats) << "\n";
    };

    auto * k_mono = kernelize->add_subcommand("monopolar", "Kernel for monopolar recognition");
    k_mono->add_option("--k", k, "cluster budget")->required()->check(CLI::NonNegativeNumber);
    k_mono->add_option("--out", out_path, "kernel graph file (default stdout)");
    k_mono->add_option("--trace", trace_path, "rule trace file");
    k_mono->add_option("graph", graph_path, "graph file")->required();
    k_mono->callback([&] {
        action = [&] {
            auto res = kernelize_monopolar(load_graph(graph_path), k);
            if (! trace_path.empty()) {
                std::string lines;
                for (auto & e : res.trace)
                    lines += format_trace_line(e) + "\n";
                write_file(trace_path, lines);
            }
            report(res, "# k " + std::to_string(res.k) + "\n");
        };
    });

    auto * k_bsize = kernelize->add_subcommand("bsize", "Kernel parameterized by |B|");
    std::string forbidden_path;
    k_bsize->add_option("--k", k, "bound on |B|")->required()->check(CLI::NonNegativeNumber);
    k_bsize->add_option("--forbidden", forbidden_path, "forbidden patterns of the A side (PiSpec file, default P3)");
    k_bsize->add_option("--out", out_path, "kernel graph file (default stdout)");
    k_bsize->add_option("graph", graph_path, "graph file")->required();
    k_bsize->callback([&] {
        action = [&] {
            auto forbidden = pi_or_default(forbidden_path, classes::cluster());
            auto res = kernelize_by_b_size(load_graph(graph_path), k, forbidden.patterns);
            if (res.forced_no) {
                out << "reject\n" << format_stats(res.stats) << "\n";
                status = exit_no;
                return;
            }
            report(res, "");
        };
    });

    auto * k_cd = kernelize->add_subcommand("cluster-delta", "Kernel for cluster / max-degree partitions");
    k_cd->add_option("--k", k, "bound on |B|")->required()->check(CLI::NonNegativeNumber);
    k_cd->add_option("--delta", delta, "maximum degree inside B")->required()->check(CLI::NonNegativeNumber);
    k_cd->add_option("--out", out_path, "kernel graph file (default stdout)");
    k_cd->add_option("graph", graph_path, "graph file")->required();
    k_cd->callback([&] {
        action = [&] {
            auto res = kernelize_cluster_delta(load_graph(graph_path), k, delta);
            std::string phases = "# phases";
            for (auto & p : res.phases)
                phases += " " + p;
            report(res, phases + "\n");
        };
    });

    // verify
    auto * verify = app.add_subcommand("verify", "Certificate checks");
    verify->require_subcommand(1);
    std::string partition_path;
    auto * v_part = verify->add_subcommand("partition", "Check a partition file");
    v_part->add_option("--partition", partition_path, "partition file")->required();
    auto * k_opt = v_part->add_option("--k", k, "monopolar cluster budget")->check(CLI::NonNegativeNumber);
    v_part->add_option("--d", d, "cluster budget for cluster-Pi partitions")->check(CLI::NonNegativeNumber);
    v_part->add_option("--pi", pi_path, "class of B (PiSpec file)")->excludes(k_opt);
    v_part->add_option("graph", graph_path, "graph file")->required();
    v_part->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto [a, b] = parse_partition_file(read_file(partition_path), g.order());
            Verdict v;
            if (k >= 0)
                v = validate_monopolar(g, {a, b}, k);
            else
                v = validate_cluster_pi(g, {a, b, d}, pi_or_default(pi_path, classes::universal()));
            if (v) {
                out << "valid\n";
            }
            else {
                out << "invalid: " << v.reason << "\n";
                status = exit_no;
            }
        };
    });

    // generate
    auto * generate = app.add_subcommand("generate", "Instance generators");
    generate->require_subcommand(1);
    int n = 0;
    double p = 0.5;
    std::uint64_t rng_seed = 1;
    auto * g_rand = generate->add_subcommand("random", "G(n, p) over mt19937_64");
    g_rand->add_option("--n", n, "vertex count")->required()->check(CLI::NonNegativeNumber);
    g_rand->add_option("--p", p, "edge probability")->check(CLI::Range(0.0, 1.0));
    g_rand->add_option("--seed", rng_seed, "RNG seed");
    g_rand->add_option("--out", out_path, "graph file (default stdout)");
    g_rand->callback([&] { action = [&] { emit(out_path, serialize_graph(generate_random(n, p, rng_seed)), out); }; });

    std::string pattern_path;
    std::vector<std::string> cis_paths;
    auto * g_comp = generate->add_subcommand("compose", "Cluster-Pi instance from colorful independent set instances");
    g_comp->add_option("--pattern", pattern_path, "graph file for the forbidden pattern M")->required();
    g_comp->add_option("--out", out_path, "output prefix")->required();
    g_comp->add_option("cis", cis_paths, "instance files")->required();
    g_comp->callback([&] {
        action = [&] {
            auto pattern = load_graph(pattern_path);
            std::vector<CISInstance> raw;
            for (auto & path : cis_paths)
                raw.push_back(parse_cis(read_file(path)));
            auto comp = compose(pad_instances(std::move(raw)), pattern);
            for (auto & item : audit_composition(comp))
                if (! item.verdict)
                    throw Failure("audit " + item.name + " failed: " + item.verdict.reason);
            write_file(out_path + ".graph", serialize_graph(comp.g));
            write_file(out_path + ".d", std::to_string(comp.d) + "\n");
            write_file(out_path + ".roles", format_roles(comp));
            write_file(out_path + ".seed", format_seed(comp));
            out << "n " << comp.g.order() << " m " << comp.g.size() << " d " << comp.d << "\n";
        };
    });

    auto * selftest = app.add_subcommand("selftest", "Invariant checks on built-in fixtures");
    selftest->callback([&] {
        action = [&] {
            for (auto & c : selftest_checks()) {
                auto v = c.run();
                out << (v ? "ok   " : "FAIL ") << c.name << (v ? "" : ": " + v.reason) << "\n";
                if (! v)
                    status = exit_no;
            }
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp & e) {
        out << app.help();
        return exit_yes;
    }
    catch (const CLI::CallForAllHelp & e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_yes;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (action)
            action();
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return status;
}

}
