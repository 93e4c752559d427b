#include <mpk/io.hpp>
#include <mpk/solvers.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mpk {

void PartialAssignment::seed(Vertex v, Label l)
{
    if (v < 0 || v >= order())
        throw InconsistentSeed("seed vertex " + std::to_string(v) + " out of range");
    if (labels_[v] != Label::free && labels_[v] != l)
        throw InconsistentSeed("vertex " + std::to_string(v) + " seeded to both sides");
    labels_[v] = l;
}

auto PartialAssignment::free_count() const -> int
{
    return static_cast<int>(std::count(labels_.begin(), labels_.end(), Label::free));
}

auto parse_seed(std::string_view text, int n) -> PartialAssignment
{
    std::istringstream in{std::string(text)};
    LineReader reader(in);
    PartialAssignment seed(n);
    std::vector<std::string> tok;
    while (reader.next(tok)) {
        if (tok.size() != 2 || (tok[0] != "A" && tok[0] != "B"))
            reader.fail("expected 'A <id>' or 'B <id>'");
        auto v = parse_int(tok[1], reader);
        if (v < 0 || v >= n)
            reader.fail("vertex id out of range");
        try {
            seed.seed(static_cast<Vertex>(v), tok[0] == "A" ? Label::a : Label::b);
        }
        catch (const InconsistentSeed & e) {
            reader.fail(e.what());
        }
    }
    return seed;
}

namespace {
    using Mask = std::uint32_t;

    auto mask_to_set(Mask m, int n) -> VertexSet
    {
        std::vector<Vertex> out;
        for (int v = 0; v < n; ++v)
            if (m >> v & 1U)
                out.push_back(v);
        return VertexSet(std::move(out));
    }

    // Cluster count of G[a] or -1 when G[a] is not a cluster graph.
    auto mask_clusters(const std::vector<Mask> & closed, Mask a) -> int
    {
        int count = 0;
        for (Mask rest = a; rest; rest &= rest - 1) {
            int v = __builtin_ctz(rest);
            Mask mine = closed[v] & a;
            for (Mask m = mine; m; m &= m - 1)
                if ((closed[__builtin_ctz(m)] & a) != mine)
                    return -1;
            if (__builtin_ctz(mine) == v)
                ++count;
        }
        return count;
    }

    template <typename Visit>
    void enumerate_monopolar(const Graph & g, int k, int max_n, Visit && visit)
    {
        int n = g.order();
        if (n > max_n)
            throw GuardExceeded("brute force limited to " + std::to_string(max_n) + " vertices, got "
                    + std::to_string(n));
        std::vector<Mask> adj(n), closed(n);
        for (int v = 0; v < n; ++v) {
            for (auto u : g.neighbors(v))
                adj[v] |= Mask{1} << u;
            closed[v] = adj[v] | Mask{1} << v;
        }
        Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
        bool stop = false;

        auto rec = [&](auto & self, int v, Mask b) -> void {
            if (stop)
                return;
            if (v < 0) {
                int c = mask_clusters(closed, all & ~b);
                if (c >= 0 && c <= k)
                    stop = ! visit(all & ~b, b);
                return;
            }
            self(self, v - 1, b);
            if (! (adj[v] & b))
                self(self, v - 1, b | Mask{1} << v);
        };
        rec(rec, n - 1, 0);
    }
}

auto solve_monopolar_bruteforce(const Graph & g, int k, int max_n) -> std::optional<MonopolarPartition>
{
    std::optional<MonopolarPartition> found;
    int n = g.order();
    enumerate_monopolar(g, k, max_n, [&](Mask a, Mask b) {
        found = MonopolarPartition{mask_to_set(a, n), mask_to_set(b, n)};
        return false;
    });
    return found;
}

void for_each_monopolar_partition(const Graph & g, int k,
        const std::function<bool(const MonopolarPartition &)> & visit, int max_n)
{
    int n = g.order();
    enumerate_monopolar(g, k, max_n,
            [&](Mask a, Mask b) { return visit(MonopolarPartition{mask_to_set(a, n), mask_to_set(b, n)}); });
}

namespace {
    class PropagationSearch {
    public:
        PropagationSearch(const Graph & g, int d, const PiSpec & pi, SolverStats * stats) :
            g_(g), d_(d), pi_(pi), stats_(stats), label_(g.order(), Label::free), in_b_(g.order(), 0),
            b_deg_(g.order(), 0), cluster_(g.order(), -1)
        {
        }

        auto place(Vertex v, Label l) -> bool
        {
            if (l == Label::a ? ! fits_a(v) : ! fits_b(v))
                return false;
            l == Label::a ? put_a(v) : put_b(v);
            return true;
        }

        auto run(std::vector<Vertex> order) -> bool
        {
            order_ = std::move(order);
            return search();
        }

        auto label(Vertex v) const -> Label { return label_[v]; }

    private:
        const Graph & g_;
        int d_;
        const PiSpec & pi_;
        SolverStats * stats_;
        std::vector<Label> label_;
        std::vector<char> in_b_;
        std::vector<int> b_deg_;
        std::vector<int> cluster_;
        std::vector<int> cluster_size_;
        int clusters_ = 0;
        std::vector<Vertex> trail_;
        std::vector<Vertex> order_;

        auto fits_a(Vertex v) const -> bool
        {
            int cid = -1, seen = 0;
            for (auto u : g_.neighbors(v)) {
                if (label_[u] != Label::a)
                    continue;
                if (cid >= 0 && cluster_[u] != cid)
                    return false;
                cid = cluster_[u];
                ++seen;
            }
            if (cid < 0)
                return d_ < 0 || clusters_ < d_;
            return seen == cluster_size_[cid];
        }

        auto fits_b(Vertex v) const -> bool
        {
            if (pi_.max_degree) {
                if (b_deg_[v] > *pi_.max_degree)
                    return false;
                for (auto u : g_.neighbors(v))
                    if (in_b_[u] && b_deg_[u] + 1 > *pi_.max_degree)
                        return false;
            }
            for (auto & pattern : pi_.patterns)
                if (has_induced_copy_through(g_, pattern, v, in_b_))
                    return false;
            return true;
        }

        void put_a(Vertex v)
        {
            int cid = -1;
            for (auto u : g_.neighbors(v))
                if (label_[u] == Label::a) {
                    cid = cluster_[u];
                    break;
                }
            if (cid < 0) {
                cid = static_cast<int>(cluster_size_.size());
                cluster_size_.push_back(0);
                ++clusters_;
            }
            cluster_[v] = cid;
            ++cluster_size_[cid];
            label_[v] = Label::a;
            trail_.push_back(v);
        }

        void put_b(Vertex v)
        {
            label_[v] = Label::b;
            in_b_[v] = 1;
            for (auto u : g_.neighbors(v)) {
                ++b_deg_[u];
            }
            trail_.push_back(v);
        }

        void undo_to(std::size_t mark)
        {
            while (trail_.size() > mark) {
                auto v = trail_.back();
                trail_.pop_back();
                if (label_[v] == Label::a) {
                    auto cid = cluster_[v];
                    if (--cluster_size_[cid] == 0) {
                        cluster_size_.pop_back();
                        --clusters_;
                    }
                    cluster_[v] = -1;
                }
                else {
                    in_b_[v] = 0;
                    for (auto u : g_.neighbors(v))
                        --b_deg_[u];
                }
                label_[v] = Label::free;
            }
        }

        auto propagate() -> bool
        {
            for (bool changed = true; changed;) {
                changed = false;
                for (auto v : order_) {
                    if (label_[v] != Label::free)
                        continue;
                    bool a = fits_a(v), b = fits_b(v);
                    if (! a && ! b)
                        return false;
                    if (a != b) {
                        a ? put_a(v) : put_b(v);
                        changed = true;
                    }
                }
            }
            return true;
        }

        auto search() -> bool
        {
            if (stats_)
                ++stats_->nodes;
            auto mark = trail_.size();
            if (! propagate()) {
                undo_to(mark);
                return false;
            }
            auto next = std::find_if(order_.begin(), order_.end(), [&](Vertex v) { return label_[v] == Label::free; });
            if (next == order_.end())
                return true;
            for (auto l : {Label::a, Label::b}) {
                auto inner = trail_.size();
                l == Label::a ? put_a(*next) : put_b(*next);
                if (search())
                    return true;
                undo_to(inner);
            }
            undo_to(mark);
            return false;
        }
    };
}

auto solve_cluster_pi(const Graph & g, int d, const PiSpec & pi, const PartialAssignment & seed, SolverOptions options,
        SolverStats * stats) -> std::optional<ClusterPiPartition>
{
    int n = g.order();
    if (seed.order() != n)
        throw InconsistentSeed("seed covers " + std::to_string(seed.order()) + " vertices, graph has "
                + std::to_string(n));
    if (seed.free_count() > options.max_free)
        throw GuardExceeded("propagation solver limited to " + std::to_string(options.max_free)
                + " free vertices, got " + std::to_string(seed.free_count()));

    PropagationSearch search(g, d, pi, stats);
    for (Vertex v = 0; v < n; ++v)
        if (seed[v] != Label::free && ! search.place(v, seed[v]))
            return std::nullopt;

    std::vector<Vertex> order;
    for (Vertex v = 0; v < n; ++v)
        if (seed[v] == Label::free)
            order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
    if (! search.run(std::move(order)))
        return std::nullopt;

    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < n; ++v)
        (search.label(v) == Label::a ? a : b).push_back(v);
    return ClusterPiPartition{VertexSet(std::move(a)), VertexSet(std::move(b)), d};
}

namespace {
    auto partition_check(const Graph & g, const VertexSet & a, const VertexSet & b) -> Verdict
    {
        std::vector<int> hits(g.order(), 0);
        for (auto s : {&a, &b})
            for (auto v : *s) {
                if (v < 0 || v >= g.order())
                    return Verdict::fail("vertex " + std::to_string(v) + " out of range");
                ++hits[v];
            }
        for (Vertex v = 0; v < g.order(); ++v)
            if (hits[v] != 1)
                return Verdict::fail("A and B do not partition V (vertex " + std::to_string(v) + ")");
        return Verdict::pass();
    }

    auto cluster_check(const Graph & g, const VertexSet & a, int limit) -> Verdict
    {
        auto sub = induced_subgraph(g, a);
        for (Vertex v = 0; v < sub.graph.order(); ++v) {
            auto & nv = sub.graph.neighbors(v);
            for (std::size_t i = 0; i < nv.size(); ++i)
                for (std::size_t j = i + 1; j < nv.size(); ++j)
                    if (! sub.graph.adjacent(nv[i], nv[j]))
                        return Verdict::fail("A contains induced P3 (" + std::to_string(sub.to_original[nv[i]]) + " "
                                + std::to_string(sub.to_original[v]) + " " + std::to_string(sub.to_original[nv[j]])
                                + ")");
        }
        auto count = static_cast<int>(connected_components(sub.graph).size());
        if (limit >= 0 && count > limit)
            return Verdict::fail("cluster count " + std::to_string(count) + " > " + std::to_string(limit));
        return Verdict::pass();
    }
}

auto validate_monopolar(const Graph & g, const MonopolarPartition & p, int k) -> Verdict
{
    if (auto v = partition_check(g, p.a, p.b); ! v)
        return v;
    if (auto v = cluster_check(g, p.a, k); ! v)
        return v;
    if (! is_independent(g, p.b))
        return Verdict::fail("B is not independent");
    return Verdict::pass();
}

auto validate_cluster_pi(const Graph & g, const ClusterPiPartition & p, const PiSpec & pi) -> Verdict
{
    if (auto v = partition_check(g, p.a, p.b); ! v)
        return v;
    if (auto v = cluster_check(g, p.a, p.d); ! v)
        return v;
    std::vector<char> inside(g.order(), 0);
    for (auto v : p.b)
        inside[v] = 1;
    if (! satisfies_pi_within(g, pi, inside))
        return Verdict::fail("B violates the class");
    return Verdict::pass();
}

auto solve_bounded_b_bruteforce(const Graph & g, int k, const PiSpec & pi_a, const PiSpec & pi_b)
    -> std::optional<VertexSet>
{
    int n = g.order();
    std::vector<Vertex> pick;
    std::vector<char> in_b(n, 0), in_a(n, 1);
    std::optional<VertexSet> found;

    auto rec = [&](auto & self, Vertex from, int left) -> bool {
        if (left == 0) {
            if (satisfies_pi_within(g, pi_b, in_b) && satisfies_pi_within(g, pi_a, in_a)) {
                found = VertexSet(pick);
                return true;
            }
            return false;
        }
        for (Vertex v = from; v < n; ++v) {
            pick.push_back(v);
            in_b[v] = 1;
            in_a[v] = 0;
            bool hit = self(self, v + 1, left - 1);
            in_b[v] = 0;
            in_a[v] = 1;
            pick.pop_back();
            if (hit)
                return true;
        }
        return false;
    };
    for (int size = 0; size <= std::min(k, n); ++size)
        if (rec(rec, 0, size))
            return found;
    return std::nullopt;
}

auto format_partition(const VertexSet & a, const VertexSet & b) -> std::string
{
    return "A: " + to_string(a) + "\nB: " + to_string(b) + "\n";
}

}
