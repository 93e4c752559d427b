#include <mpk/io.hpp>
#include <mpk/pattern.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace mpk {

auto PiSpec::max_order() const -> int
{
    int best = 0;
    for (auto & p : patterns)
        best = std::max(best, p.order());
    return best;
}

auto parse_pi_spec(std::string_view text) -> PiSpec
{
    std::istringstream in{std::string(text)};
    LineReader reader(in);
    std::vector<std::string> tok;
    PiSpec pi;

    if (! reader.next(tok) || tok.size() != 2 || tok[0] != "delta")
        reader.fail("expected 'delta <value>|none'");
    if (tok[1] != "none") {
        auto delta = parse_int(tok[1], reader);
        if (delta < 0)
            reader.fail("negative delta");
        pi.max_degree = static_cast<int>(delta);
    }

    if (! reader.next(tok) || tok.size() != 2 || tok[0] != "patterns")
        reader.fail("expected 'patterns <count>'");
    auto count = parse_int(tok[1], reader);
    if (count < 0)
        reader.fail("negative pattern count");
    for (long long i = 0; i < count; ++i) {
        if (! reader.next(tok) || tok.size() != 1 || tok[0] != "pattern")
            reader.fail("expected 'pattern'");
        auto p = parse_graph_block(reader);
        if (p.order() == 0 || ! is_connected(p))
            reader.fail("pattern must be nonempty and connected");
        if (p.order() > max_pattern_order)
            reader.fail("pattern order exceeds " + std::to_string(max_pattern_order));
        pi.patterns.push_back(std::move(p));
    }
    if (reader.next(tok))
        reader.fail("unexpected trailing content");
    return pi;
}

auto serialize_pi_spec(const PiSpec & pi) -> std::string
{
    std::ostringstream out;
    out << "delta ";
    if (pi.max_degree)
        out << *pi.max_degree;
    else
        out << "none";
    out << "\npatterns " << pi.patterns.size() << '\n';
    for (auto & p : pi.patterns)
        out << "pattern\n" << serialize_graph(p);
    return out.str();
}

namespace classes {
    auto cluster() -> PiSpec { return {{graphs::path(3)}, std::nullopt}; }
    auto universal() -> PiSpec { return {}; }
    auto edgeless() -> PiSpec { return {{}, 0}; }
    auto max_degree(int delta) -> PiSpec { return {{}, delta}; }
}

auto is_isomorphic(const Graph & a, const Graph & b) -> bool
{
    int n = a.order();
    if (n != b.order() || a.size() != b.size())
        return false;
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
        return false;

    std::vector<Vertex> image(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> extend = [&](int i) -> bool {
        if (i == n)
            return true;
        for (Vertex c = 0; c < n; ++c) {
            if (used[c] || db[c] != da[i])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = a.adjacent(i, j) == b.adjacent(c, image[j]);
            if (! ok)
                continue;
            image[i] = c;
            used[c] = 1;
            if (extend(i + 1))
                return true;
            used[c] = 0;
        }
        return false;
    };
    return extend(0);
}

namespace {
    // Connected induced subgraphs of a given size, each reported once.
    void connected_subsets(const Graph & g, int size, const std::function<void(const std::vector<Vertex> &)> & visit)
    {
        std::vector<Vertex> sub;
        std::vector<char> in_sub(g.order(), 0), near(g.order(), 0);

        std::function<void(std::vector<Vertex>, Vertex)> extend = [&](std::vector<Vertex> ext, Vertex root) {
            if (static_cast<int>(sub.size()) == size) {
                visit(sub);
                return;
            }
            while (! ext.empty()) {
                auto w = ext.back();
                ext.pop_back();
                auto next = ext;
                std::vector<Vertex> marked;
                for (auto u : g.neighbors(w)) {
                    if (u <= root || in_sub[u] || near[u])
                        continue;
                    next.push_back(u);
                }
                for (auto u : g.neighbors(w))
                    if (! near[u]) {
                        near[u] = 1;
                        marked.push_back(u);
                    }
                sub.push_back(w);
                in_sub[w] = 1;
                extend(std::move(next), root);
                in_sub[w] = 0;
                sub.pop_back();
                for (auto u : marked)
                    near[u] = 0;
            }
        };

        for (Vertex v = 0; v < g.order(); ++v) {
            sub = {v};
            in_sub[v] = 1;
            std::vector<Vertex> ext, marked;
            for (auto u : g.neighbors(v)) {
                near[u] = 1;
                marked.push_back(u);
                if (u > v)
                    ext.push_back(u);
            }
            near[v] = 1;
            marked.push_back(v);
            extend(std::move(ext), v);
            for (auto u : marked)
                near[u] = 0;
            in_sub[v] = 0;
        }
    }

    void all_subsets(int n, int size, const std::function<void(const std::vector<Vertex> &)> & visit)
    {
        std::vector<Vertex> sub;
        std::function<void(Vertex)> rec = [&](Vertex from) {
            if (static_cast<int>(sub.size()) == size) {
                visit(sub);
                return;
            }
            for (Vertex v = from; v < n; ++v) {
                sub.push_back(v);
                rec(v + 1);
                sub.pop_back();
            }
        };
        rec(0);
    }
}

auto enumerate_induced_embeddings(const Graph & g, const Graph & pattern, std::optional<std::size_t> limit)
    -> std::vector<VertexSet>
{
    if (pattern.order() > max_pattern_order)
        throw PatternTooLarge("pattern order " + std::to_string(pattern.order()) + " exceeds "
                + std::to_string(max_pattern_order));
    std::vector<VertexSet> found;
    if (pattern.order() == 0) {
        found.emplace_back();
    }
    else {
        auto check = [&](const std::vector<Vertex> & sub) {
            VertexSet s(sub);
            if (is_isomorphic(induced_subgraph(g, s).graph, pattern))
                found.push_back(std::move(s));
        };
        if (is_connected(pattern))
            connected_subsets(g, pattern.order(), check);
        else
            all_subsets(g.order(), pattern.order(), check);
    }
    std::sort(found.begin(), found.end());
    if (limit && found.size() > *limit)
        found.resize(*limit);
    return found;
}

auto has_induced_copy_through(const Graph & g, const Graph & pattern, Vertex v, const std::vector<char> & inside) -> bool
{
    int p = pattern.order();
    if (p == 0)
        return false;
    std::vector<Vertex> image(p, -1);
    std::vector<int> order, parent(p, -1);

    std::function<bool(int)> extend = [&](int i) -> bool {
        if (i == p)
            return true;
        auto q = order[i];
        for (auto c : g.neighbors(image[parent[q]])) {
            if (c == v || ! inside[c])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                auto prev = image[order[j]];
                ok = prev != c && g.adjacent(prev, c) == pattern.adjacent(order[j], q);
            }
            if (! ok)
                continue;
            image[q] = c;
            if (extend(i + 1))
                return true;
        }
        image[q] = -1;
        return false;
    };

    for (Vertex root = 0; root < p; ++root) {
        if (g.degree(v) < pattern.degree(root))
            continue;
        order = {root};
        std::fill(parent.begin(), parent.end(), -1);
        std::vector<char> seen(p, 0);
        seen[root] = 1;
        for (std::size_t h = 0; h < order.size(); ++h)
            for (auto w : pattern.neighbors(order[h]))
                if (! seen[w]) {
                    seen[w] = 1;
                    parent[w] = order[h];
                    order.push_back(w);
                }
        if (static_cast<int>(order.size()) != p)
            throw std::invalid_argument("pattern must be connected");
        std::fill(image.begin(), image.end(), -1);
        image[root] = v;
        if (extend(1))
            return true;
    }
    return false;
}

auto satisfies_pi_within(const Graph & g, const PiSpec & pi, const std::vector<char> & inside) -> bool
{
    if (pi.max_degree) {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (! inside[v])
                continue;
            int deg = 0;
            for (auto u : g.neighbors(v))
                deg += inside[u] ? 1 : 0;
            if (deg > *pi.max_degree)
                return false;
        }
    }
    for (auto & pattern : pi.patterns)
        for (Vertex v = 0; v < g.order(); ++v)
            if (inside[v] && has_induced_copy_through(g, pattern, v, inside))
                return false;
    return true;
}

auto satisfies_pi(const Graph & g, const PiSpec & pi) -> bool
{
    return satisfies_pi_within(g, pi, std::vector<char>(g.order(), 1));
}

}
