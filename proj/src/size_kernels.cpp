#include <mpk/size_kernels.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace mpk {

auto saturating_mul(std::uint64_t a, std::uint64_t b) -> std::uint64_t
{
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

auto sunflower_bound(int d, int k) -> std::uint64_t
{
    std::uint64_t out = 1;
    for (int i = 2; i <= d; ++i)
        out = saturating_mul(out, static_cast<std::uint64_t>(i));
    for (int i = 0; i < d; ++i)
        out = saturating_mul(out, static_cast<std::uint64_t>(k) + 1);
    return out;
}

auto find_sunflower(const std::vector<VertexSet> & sets, int petals) -> std::optional<Sunflower>
{
    if (petals <= 0)
        return Sunflower{};
    if (sets.empty())
        return std::nullopt;
    if (petals == 1)
        return Sunflower{sets.front(), {0}};

    // greedy maximal subfamily of pairwise disjoint sets
    std::vector<std::size_t> disjoint;
    VertexSet used;
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (set_intersection(sets[i], used).empty()) {
            disjoint.push_back(i);
            used.insert(sets[i]);
        }
    if (static_cast<int>(disjoint.size()) >= petals) {
        disjoint.resize(petals);
        return Sunflower{{}, disjoint};
    }

    std::map<Vertex, int> freq;
    for (auto & s : sets)
        for (auto v : s)
            if (used.contains(v))
                ++freq[v];
    // most frequent element of the union, lowest id on ties
    std::vector<std::pair<int, Vertex>> ranked;
    for (auto [v, f] : freq)
        ranked.push_back({-f, v});
    std::sort(ranked.begin(), ranked.end());

    auto x = ranked.front().second;
    std::vector<VertexSet> link;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i].contains(x)) {
            auto rest = sets[i];
            rest.erase(x);
            link.push_back(std::move(rest));
            origin.push_back(i);
        }
    if (static_cast<int>(link.size()) >= petals)
        if (auto inner = find_sunflower(link, petals)) {
            Sunflower out;
            out.core = inner->core;
            out.core.insert(x);
            for (auto m : inner->members)
                out.members.push_back(origin[m]);
            return out;
        }
    return std::nullopt;
}

auto sunflower_reduce(const SetFamily & f, int k) -> SunflowerReduction
{
    // dedupe, then drop strict supersets: both keep the hitting sets unchanged
    std::set<VertexSet> unique(f.sets.begin(), f.sets.end());
    std::vector<VertexSet> sets(unique.begin(), unique.end());
    std::stable_sort(sets.begin(), sets.end(), [](auto & a, auto & b) { return a.size() < b.size(); });
    std::vector<VertexSet> minimal;
    for (auto & s : sets) {
        bool super = std::any_of(minimal.begin(), minimal.end(), [&](const VertexSet & m) {
            return std::includes(s.begin(), s.end(), m.begin(), m.end());
        });
        if (! super)
            minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end());

    SunflowerReduction out;
    auto bound = sunflower_bound(f.d, k);
    while (minimal.size() > bound) {
        auto flower = find_sunflower(minimal, k + 2);
        if (! flower)
            throw std::logic_error("sunflower lemma violated: no sunflower in an oversized family");
        if (flower->core.empty())
            out.forced_no = true;
        minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(flower->members.back()));
    }
    out.family = SetFamily{f.universe, f.d, std::move(minimal)};
    return out;
}

auto enumerate_forbidden_sets(const Graph & g, const std::vector<Graph> & patterns) -> SetFamily
{
    SetFamily f;
    f.universe = g.order();
    std::set<VertexSet> all;
    for (auto & p : patterns) {
        if (p.order() > max_forbidden_order)
            throw PatternTooLarge("forbidden pattern order " + std::to_string(p.order()) + " exceeds "
                    + std::to_string(max_forbidden_order));
        f.d = std::max(f.d, p.order());
        for (auto & s : enumerate_induced_embeddings(g, p))
            all.insert(s);
    }
    f.sets.assign(all.begin(), all.end());
    return f;
}

auto b_size_kernel_bound(int d, int k) -> std::uint64_t
{
    return saturating_mul(static_cast<std::uint64_t>(d), sunflower_bound(d, k));
}

auto kernelize_by_b_size(const Graph & g, int k, const std::vector<Graph> & forbidden) -> BSizeKernelResult
{
    if (k < 0)
        throw std::invalid_argument("negative budget");
    auto family = enumerate_forbidden_sets(g, forbidden);
    auto reduced = sunflower_reduce(family, k);
    VertexSet t;
    for (auto & s : reduced.family.sets)
        t.insert(s);
    auto sub = induced_subgraph(g, t);

    BSizeKernelResult out;
    out.outcome = Outcome::kernel;
    out.graph = std::move(sub.graph);
    out.k = k;
    out.forced_no = reduced.forced_no;
    out.to_original = std::move(sub.to_original);
    out.stats = {g.order(), out.graph.order(), b_size_kernel_bound(family.d, k)};
    return out;
}

auto greedy_p3_packing(const Graph & g) -> P3Packing
{
    std::vector<VertexSet> candidates;
    for (Vertex c = 0; c < g.order(); ++c) {
        auto & nc = g.neighbors(c);
        for (std::size_t i = 0; i < nc.size(); ++i)
            for (std::size_t j = i + 1; j < nc.size(); ++j)
                if (! g.adjacent(nc[i], nc[j]))
                    candidates.push_back(VertexSet{nc[i], c, nc[j]});
    }
    std::sort(candidates.begin(), candidates.end());

    P3Packing p;
    for (auto & t : candidates)
        if (set_intersection(t, p.v_p).empty()) {
            p.triples.push_back(t);
            p.v_p.insert(t);
        }
    return p;
}

auto LabelState::important_set() const -> VertexSet
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<Vertex>(important.size()); ++v)
        if (important[v])
            out.push_back(v);
    return VertexSet(std::move(out));
}

auto classify_and_label(const Graph & g, const P3Packing & p, int k, int delta) -> LabelState
{
    int n = g.order();
    LabelState ls;
    ls.cluster_of.assign(n, -1);
    ls.classification.assign(n, std::nullopt);
    ls.important.assign(n, 0);

    auto rest = induced_subgraph(g, set_difference(g.vertices(), p.v_p));
    for (auto & comp : connected_components(rest.graph)) {
        std::vector<Vertex> orig;
        for (auto v : comp)
            orig.push_back(rest.to_original[v]);
        for (auto v : orig)
            ls.cluster_of[v] = static_cast<int>(ls.clusters.size());
        ls.clusters.emplace_back(std::move(orig));
    }

    auto need = static_cast<std::size_t>(delta) + 2;
    for (auto u : p.v_p) {
        std::map<int, std::vector<Vertex>> hits;
        for (auto v : g.neighbors(u))
            if (ls.cluster_of[v] >= 0)
                hits[ls.cluster_of[v]].push_back(v);

        auto nonneighbors = [&](int c) {
            std::vector<Vertex> out;
            for (auto v : ls.clusters[c])
                if (! g.adjacent(u, v))
                    out.push_back(v);
            return out;
        };

        if (static_cast<int>(hits.size()) >= k + 2) {
            ls.classification[u] = PackingClass::heavy;
            // one neighbor from each of k+2 clusters, scanning neighbors by id
            std::set<int> taken;
            for (auto v : g.neighbors(u)) {
                int c = ls.cluster_of[v];
                if (c < 0 || taken.count(c) || static_cast<int>(taken.size()) == k + 2)
                    continue;
                taken.insert(c);
                ls.important[v] = 1;
            }
            continue;
        }

        std::optional<int> witness;
        for (auto & [c, nb] : hits)
            if (nb.size() >= need && nonneighbors(c).size() >= need) {
                witness = c;
                break;
            }
        if (witness) {
            ls.classification[u] = PackingClass::nonheavy_fixed;
            auto & nb = hits[*witness];
            auto non = nonneighbors(*witness);
            for (std::size_t i = 0; i < need; ++i) {
                ls.important[nb[i]] = 1;
                ls.important[non[i]] = 1;
            }
            continue;
        }

        ls.classification[u] = PackingClass::nonfixed;
        for (auto & [c, nb] : hits) {
            auto non = nonneighbors(c);
            for (std::size_t i = 0; i < std::min(need, nb.size()); ++i)
                ls.important[nb[i]] = 1;
            for (std::size_t i = 0; i < std::min(need, non.size()); ++i)
                ls.important[non[i]] = 1;
        }
    }
    return ls;
}

auto important_bound(int k, int delta) -> std::uint64_t
{
    std::uint64_t kk = static_cast<std::uint64_t>(k), w = 2 * static_cast<std::uint64_t>(delta) + 4;
    return 3 * kk * (kk + 2) + 3 * kk * w + 3 * kk * (kk + 1) * w;
}

auto cluster_delta_bound(int k, int delta) -> std::uint64_t
{
    auto i = important_bound(k, delta);
    return 3 * static_cast<std::uint64_t>(k) + i + (static_cast<std::uint64_t>(delta) + 2) * i;
}

auto kernelize_cluster_delta(const Graph & g, int k, int delta) -> ClusterDeltaKernelResult
{
    if (k < 0 || delta < 0)
        throw std::invalid_argument("negative budget or degree bound");
    ClusterDeltaKernelResult out;
    out.k = k;
    out.stats.before = g.order();
    out.stats.bound = cluster_delta_bound(k, delta);

    out.packing = greedy_p3_packing(g);
    out.phases.push_back("is-packing-size");
    if (static_cast<int>(out.packing.triples.size()) > k) {
        out.outcome = Outcome::reject;
        return out;
    }

    out.labels = classify_and_label(g, out.packing, k, delta);
    out.phases.push_back("label");
    auto & ls = out.labels;

    std::vector<char> keep(g.order(), 1);
    std::vector<char> dropped_cluster(ls.clusters.size(), 0);
    for (std::size_t c = 0; c < ls.clusters.size(); ++c) {
        auto & cl = ls.clusters[c];
        if (std::none_of(cl.begin(), cl.end(), [&](Vertex v) { return ls.important[v]; })) {
            dropped_cluster[c] = 1;
            for (auto v : cl)
                keep[v] = 0;
        }
    }
    out.phases.push_back("is-unimportant-clique");

    auto limit = static_cast<std::size_t>(delta) + 2;
    for (std::size_t c = 0; c < ls.clusters.size(); ++c) {
        if (dropped_cluster[c])
            continue;
        std::vector<Vertex> unimportant;
        for (auto v : ls.clusters[c])
            if (! ls.important[v])
                unimportant.push_back(v);
        for (std::size_t i = 0; unimportant.size() - i > limit; ++i)
            keep[unimportant[i]] = 0;
    }
    out.phases.push_back("is-many-unimportant");

    std::vector<Vertex> kept;
    for (Vertex v = 0; v < g.order(); ++v)
        if (keep[v])
            kept.push_back(v);
    auto sub = induced_subgraph(g, VertexSet(std::move(kept)));
    out.outcome = Outcome::kernel;
    out.graph = std::move(sub.graph);
    out.to_original = std::move(sub.to_original);
    out.stats.after = out.graph.order();
    return out;
}

}
