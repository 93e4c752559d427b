#include <mpk/composition.hpp>
#include <mpk/io.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mpk {

auto CISInstance::color_class(int c) const -> VertexSet
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < graph.order(); ++v)
        if (color[v] == c)
            out.push_back(v);
    return VertexSet(std::move(out));
}

auto parse_cis(std::string_view text) -> CISInstance
{
    std::istringstream in{std::string(text)};
    LineReader reader(in);
    CISInstance inst;
    inst.graph = parse_graph_block(reader);
    std::vector<std::string> tok;
    if (! reader.next(tok) || tok.size() != 2 || tok[0] != "colors")
        reader.fail("expected 'colors <k>'");
    auto k = parse_int(tok[1], reader);
    if (k < 1 || k > inst.graph.order() + 1)
        reader.fail("color count out of range");
    inst.k = static_cast<int>(k);
    inst.color.assign(inst.graph.order(), -1);
    while (reader.next(tok)) {
        if (tok.size() != 3 || tok[0] != "color")
            reader.fail("expected 'color <vid> <c>'");
        auto v = parse_int(tok[1], reader), c = parse_int(tok[2], reader);
        if (v < 0 || v >= inst.graph.order())
            reader.fail("vertex id out of range");
        if (c < 1 || c > k)
            reader.fail("color out of range");
        if (inst.color[v] != -1)
            reader.fail("vertex colored twice");
        inst.color[v] = static_cast<int>(c - 1);
    }
    for (Vertex v = 0; v < inst.graph.order(); ++v)
        if (inst.color[v] == -1)
            throw ParseError("vertex " + std::to_string(v) + " has no color", reader.line());
    return inst;
}

auto serialize_cis(const CISInstance & inst) -> std::string
{
    auto out = serialize_graph(inst.graph);
    out += "colors " + std::to_string(inst.k) + "\n";
    for (Vertex v = 0; v < inst.graph.order(); ++v)
        out += "color " + std::to_string(v) + " " + std::to_string(inst.color[v] + 1) + "\n";
    return out;
}

void validate_cis(const CISInstance & inst)
{
    if (inst.k < 1)
        throw std::invalid_argument("instance needs at least one color");
    if (static_cast<int>(inst.color.size()) != inst.graph.order())
        throw std::invalid_argument("coloring does not cover every vertex");
    for (auto c : inst.color)
        if (c < 0 || c >= inst.k)
            throw std::invalid_argument("color out of range");
    for (int c = 0; c < inst.k; ++c)
        if (inst.color_class(c).empty())
            throw std::invalid_argument("color class " + std::to_string(c + 1) + " is empty");
    for (auto [u, v] : inst.graph.edges())
        if (inst.color[u] == inst.color[v])
            throw std::invalid_argument("monochromatic edge " + std::to_string(u) + " " + std::to_string(v));
}

auto is_colorful_independent(const CISInstance & inst, const VertexSet & s) -> bool
{
    if (static_cast<int>(s.size()) != inst.k)
        return false;
    std::vector<char> seen(inst.k, 0);
    for (auto v : s) {
        if (v < 0 || v >= inst.graph.order() || seen[inst.color[v]])
            return false;
        seen[inst.color[v]] = 1;
    }
    return is_independent(inst.graph, s);
}

auto log2_exact(int x) -> int
{
    if (x < 1 || (x & (x - 1)) != 0)
        throw std::invalid_argument(std::to_string(x) + " is not a power of two");
    int l = 0;
    while ((1 << l) < x)
        ++l;
    return l;
}

namespace {
    auto next_pow2(int x) -> int
    {
        int p = 1;
        while (p < x)
            p *= 2;
        return p;
    }
}

auto pad_instances(std::vector<CISInstance> raw) -> PaddedBatch
{
    if (raw.empty())
        throw std::invalid_argument("empty batch");
    for (auto & inst : raw)
        validate_cis(inst);

    PaddedBatch batch;
    for (auto & inst : raw)
        batch.k = std::max(batch.k, inst.k);

    // extra colors get one isolated vertex each
    for (auto & inst : raw) {
        if (inst.k == batch.k)
            continue;
        auto edges = inst.graph.edges();
        int n = inst.graph.order();
        for (int c = inst.k; c < batch.k; ++c)
            inst.color.push_back(c);
        inst.graph = Graph(n + batch.k - inst.k, edges);
        inst.k = batch.k;
    }

    int largest = 1;
    for (auto & inst : raw)
        for (int c = 0; c < batch.k; ++c)
            largest = std::max(largest, static_cast<int>(inst.color_class(c).size()));
    batch.n = std::max(2, next_pow2(largest));

    for (auto & inst : raw) {
        GraphBuilder b(inst.graph.order());
        for (auto [u, v] : inst.graph.edges())
            b.connect(u, v);
        auto color = inst.color;
        for (int c = 0; c < batch.k; ++c) {
            int have = 0;
            for (auto col : color)
                have += col == c;
            for (; have < batch.n; ++have) {
                auto x = b.add_vertex();
                color.push_back(c);
                for (Vertex y = 0; y < x; ++y)
                    if (color[y] != c)
                        b.connect(x, y);
            }
        }
        inst.graph = b.build();
        inst.color = std::move(color);
    }

    batch.t = std::max(2, next_pow2(static_cast<int>(raw.size())));
    while (static_cast<int>(raw.size()) < batch.t)
        raw.push_back(raw.back());

    for (auto & inst : raw)
        batch.m = std::max(batch.m, static_cast<int>(inst.graph.size()));
    batch.m = std::max(batch.m, batch.k * log2_exact(batch.n));

    for (auto & inst : raw) {
        std::vector<Edge> slots = inst.graph.edges();
        while (! slots.empty() && static_cast<int>(slots.size()) < batch.m)
            slots.push_back(slots.front());
        batch.slots.push_back(std::move(slots));
    }
    batch.instances = std::move(raw);
    return batch;
}

CompositionBuilder::CompositionBuilder(Graph pattern_, const std::vector<int> & group_sizes) :
    pattern(std::move(pattern_))
{
    if (pattern.order() < 3 || ! is_connected(pattern))
        throw std::invalid_argument("pattern must be connected with at least 3 vertices");
    for (std::size_t g = 0; g < group_sizes.size(); ++g) {
        if (group_sizes[g] < 0)
            throw std::invalid_argument("negative anchor group size");
        anchors.emplace_back();
        for (int i = 1; i <= group_sizes[g]; ++i) {
            auto a = add_vertex(RoleKind::anchor);
            dial_flag[a] = 1;
            dial_of[a] = a;
            dials[a] = VertexSet{a};
            anchors.back().push_back(a);
            anchor_pos[a] = {static_cast<int>(g) + 1, i};
        }
    }
    if (anchors.empty() || anchors[0].size() < 2)
        throw std::invalid_argument("group 1 needs two anchors");
}

auto CompositionBuilder::anchor(int group, int index) const -> Vertex
{
    if (group < 1 || group > static_cast<int>(anchors.size()) || index < 1
            || index > static_cast<int>(anchors[group - 1].size()))
        throw std::out_of_range("no anchor (" + std::to_string(group) + "," + std::to_string(index) + ")");
    return anchors[group - 1][index - 1];
}

auto CompositionBuilder::add_vertex(RoleKind r) -> Vertex
{
    auto v = graph.add_vertex();
    role.push_back(r);
    dial_of.push_back(-1);
    dial_flag.push_back(r == RoleKind::dial || r == RoleKind::choice || r == RoleKind::activator);
    return v;
}

void CompositionBuilder::connect(Vertex u, Vertex v)
{
    graph.connect(u, v);
}

void CompositionBuilder::join_dial(Vertex v, Vertex a)
{
    if (! anchor_pos.count(a))
        throw std::invalid_argument(std::to_string(a) + " is not an anchor");
    if (dial_of[v] != -1)
        throw std::logic_error(std::to_string(v) + " already belongs to a dial");
    for (auto x : dials[a])
        connect(v, x);
    dials[a].insert(v);
    dial_of[v] = a;
    dial_flag[v] = 1;
}

void CompositionBuilder::fix_anchors(int count)
{
    for (auto & group : anchors)
        for (auto a : group)
            for (int c = 0; c < count; ++c) {
                MCopy copy{std::vector<Vertex>(pattern.order()), true};
                copy.image[0] = a;
                for (int p = 1; p < pattern.order(); ++p)
                    copy.image[p] = add_vertex(RoleKind::helper);
                for (auto [p, q] : pattern.edges())
                    connect(copy.image[p], copy.image[q]);
                copies.push_back(std::move(copy));
            }
}

void CompositionBuilder::make_exclusive(Vertex u, Vertex v, Vertex w)
{
    std::array<Vertex, 3> t{u, v, w};
    if (u == v || v == w || u == w)
        throw std::invalid_argument("exclusive vertices must be distinct");
    std::vector<int> dial_idx;
    for (int i = 0; i < 3; ++i)
        if (is_dial_vertex(t[i]))
            dial_idx.push_back(i);
    if (dial_idx.size() > 2)
        throw std::invalid_argument("cannot make three dial vertices exclusive");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (graph.adjacent(t[i], t[j])
                    && ! (dial_of[t[i]] != -1 && dial_of[t[i]] == dial_of[t[j]]))
                throw std::invalid_argument("edge " + std::to_string(t[i]) + " " + std::to_string(t[j])
                        + " between exclusive vertices lies outside a dial");

    std::array<int, 3> slot{0, 1, 2};
    if (dial_idx.size() == 2) {
        auto first = pattern.edges().front();
        int other = 3 - dial_idx[0] - dial_idx[1];
        slot[dial_idx[0]] = first.u;
        slot[dial_idx[1]] = first.v;
        int low = 0;
        while (low == first.u || low == first.v)
            ++low;
        slot[other] = low;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (graph.adjacent(t[i], t[j]) && ! pattern.adjacent(slot[i], slot[j]))
                throw std::invalid_argument("existing edge " + std::to_string(t[i]) + " "
                        + std::to_string(t[j]) + " maps onto a non-edge of the pattern");

    MCopy copy{std::vector<Vertex>(pattern.order(), -1), false};
    for (int i = 0; i < 3; ++i)
        copy.image[slot[i]] = t[i];
    auto a11 = anchor(1, 1), a12 = anchor(1, 2);
    for (auto & x : copy.image)
        if (x == -1) {
            x = add_vertex(RoleKind::helper);
            connect(x, a11);
            connect(x, a12);
        }
    for (auto [p, q] : pattern.edges())
        connect(copy.image[p], copy.image[q]);
    exclusive.push_back({u, v, w, false, copies.size()});
    copies.push_back(std::move(copy));
}

auto CompositionBuilder::make_exclusive(Vertex u, Vertex v) -> Vertex
{
    auto x = add_vertex(RoleKind::helper);
    connect(x, anchor(1, 1));
    connect(x, anchor(1, 2));
    make_exclusive(u, v, x);
    exclusive.back().two_vertex = true;
    return x;
}

auto CompositionBuilder::selection(int p, int q) -> SelectionGadget
{
    int levels = log2_exact(q);
    if (levels < 1)
        throw std::invalid_argument("selection needs at least two choices");
    if (p < 1 || p > static_cast<int>(anchors.size()) || static_cast<int>(anchors[p - 1].size()) < 2 * levels)
        throw std::invalid_argument("anchor group " + std::to_string(p) + " too small for selection");

    SelectionGadget s;
    s.p = p;
    s.q = q;
    s.activator = add_vertex(RoleKind::activator);
    s.alpha.assign(2 * q, -1);
    s.beta.assign(2 * q, -1);
    for (int x = 2; x < 2 * q; ++x) {
        int level = std::bit_width(static_cast<unsigned>(x)) - 1;
        s.alpha[x] = add_vertex(RoleKind::volatile_vertex);
        s.beta[x] = add_vertex(RoleKind::dial);
        connect(s.alpha[x], anchor(p, 2 * level - 1));
        connect(s.alpha[x], s.beta[x]);
        join_dial(s.beta[x], anchor(p, 2 * level));
    }
    for (int u = 1; u < q; ++u)
        make_exclusive(u == 1 ? s.activator : s.beta[u], s.alpha[2 * u], s.alpha[2 * u + 1]);
    for (int x = q; x < 2 * q; ++x) {
        role[s.beta[x]] = RoleKind::choice;
        s.choices.push_back(s.beta[x]);
    }
    return s;
}

auto composition_budget(int t, int k, int n, int m) -> int
{
    return 2 + 2 * log2_exact(t) + (k + 1) + k * log2_exact(n) + k * n + 2 * m;
}

auto compose(const PaddedBatch & batch, const Graph & pattern) -> CompositionOutput
{
    int t = batch.t, k = batch.k, n = batch.n, m = batch.m;
    if (static_cast<int>(batch.instances.size()) != t || static_cast<int>(batch.slots.size()) != t)
        throw std::invalid_argument("batch size does not match t");
    int logt = log2_exact(t), logn = log2_exact(n);
    if (logt < 1 || logn < 1 || k < 1)
        throw std::invalid_argument("batch must have t >= 2, n >= 2 and k >= 1");
    if (m < k * logn)
        throw std::invalid_argument("edge count below k log n");
    for (int r = 0; r < t; ++r) {
        auto & inst = batch.instances[r];
        validate_cis(inst);
        if (inst.k != k)
            throw std::invalid_argument("instance color counts differ");
        for (int c = 0; c < k; ++c)
            if (static_cast<int>(inst.color_class(c).size()) != n)
                throw std::invalid_argument("color class size differs from n");
        if (! batch.slots[r].empty() && static_cast<int>(batch.slots[r].size()) != m)
            throw std::invalid_argument("edge slot count differs from m");
    }

    std::vector<int> sizes{2, 2 * logt, k + 1};
    for (int i = 0; i < k; ++i)
        sizes.push_back(2 * logn);
    for (int i = 0; i < k; ++i)
        sizes.push_back(n);
    sizes.push_back(2 * m - k * logn);

    CompositionBuilder b(pattern, sizes);
    CompositionOutput out;
    out.d = composition_budget(t, k, n, m);
    b.fix_anchors(out.d + 1);

    out.instance_selection = b.selection(2, t);
    out.phi = out.instance_selection.choices;

    out.vertex_selection.assign(t, {});
    out.psi.assign(t, std::vector<std::map<Vertex, Vertex>>(k));
    for (int r = 0; r < t; ++r)
        for (int i = 1; i <= k; ++i) {
            auto gadget = b.selection(3 + i, n);
            b.join_dial(gadget.activator, b.anchor(3, 1 + i));
            auto cls = batch.instances[r].color_class(i - 1);
            for (std::size_t idx = 0; idx < cls.size(); ++idx)
                out.psi[r][i - 1][cls[idx]] = gadget.choices[idx];
            out.vertex_selection[r].push_back(std::move(gadget));
        }

    for (int r = 0; r < t; ++r) {
        auto v = b.add_vertex(RoleKind::volatile_vertex);
        b.make_exclusive(out.phi[r], v);
        b.connect(v, b.anchor(3, 1));
        for (auto & gadget : out.vertex_selection[r])
            b.connect(v, gadget.activator);
        out.v_r.push_back(v);
    }

    for (int r = 0; r < t; ++r)
        for (int j = 1; j <= static_cast<int>(batch.slots[r].size()); ++j) {
            auto [u, v] = batch.slots[r][j - 1];
            EdgeGadget e{r, j, u, v, b.add_vertex(RoleKind::dial), b.add_vertex(RoleKind::dial)};
            b.join_dial(e.w_u, b.anchor(4 + 2 * k, j));
            b.join_dial(e.w_v, b.anchor(4 + 2 * k, j));
            b.make_exclusive(e.w_u, e.w_v);
            out.edge_gadgets.push_back(e);
        }

    out.x.assign(t, std::vector<std::map<Vertex, Vertex>>(k));
    for (int r = 0; r < t; ++r)
        for (int i = 1; i <= k; ++i) {
            auto cls = batch.instances[r].color_class(i - 1);
            for (std::size_t idx = 0; idx < cls.size(); ++idx) {
                auto v = cls[idx];
                auto x = b.add_vertex(RoleKind::volatile_vertex);
                b.make_exclusive(out.psi[r][i - 1].at(v), x);
                b.connect(x, b.anchor(3 + k + i, static_cast<int>(idx) + 1));
                out.x[r][i - 1][v] = x;
            }
        }

    for (auto & e : out.edge_gadgets) {
        auto & color = batch.instances[e.r].color;
        b.connect(out.x[e.r][color[e.u]].at(e.u), e.w_u);
        b.connect(out.x[e.r][color[e.v]].at(e.v), e.w_v);
    }

    out.g = b.graph.build();
    out.pattern = pattern;
    out.batch = batch;
    out.roles = std::move(b.role);
    out.dial_of = std::move(b.dial_of);
    out.anchors = std::move(b.anchors);
    out.anchor_pos = std::move(b.anchor_pos);
    out.dials = std::move(b.dials);
    out.copies = std::move(b.copies);
    out.exclusive = std::move(b.exclusive);
    return out;
}

namespace {
    auto pos_string(const CompositionOutput & out, Vertex a) -> std::string
    {
        auto [g, i] = out.anchor_pos.at(a);
        return "(" + std::to_string(g) + "," + std::to_string(i) + ")";
    }
}

auto role_name(const CompositionOutput & out, Vertex v) -> std::string
{
    auto dial = out.dial_of[v];
    switch (out.roles[v]) {
    case RoleKind::anchor: return "anchor" + pos_string(out, v);
    case RoleKind::helper: return "helper";
    case RoleKind::dial: return "dial" + pos_string(out, dial);
    case RoleKind::volatile_vertex: return "volatile";
    case RoleKind::activator: return dial == -1 ? "activator" : "activator" + pos_string(out, dial);
    case RoleKind::choice: return "choice" + pos_string(out, dial);
    }
    return "unknown";
}

auto format_roles(const CompositionOutput & out) -> std::string
{
    std::string s;
    for (Vertex v = 0; v < out.g.order(); ++v)
        s += std::to_string(v) + " " + role_name(out, v) + "\n";
    return s;
}

auto seed_assignment(const CompositionOutput & out) -> PartialAssignment
{
    PartialAssignment seed(out.g.order());
    for (Vertex v = 0; v < out.g.order(); ++v) {
        if (out.roles[v] == RoleKind::anchor)
            seed.seed(v, Label::a);
        else if (out.roles[v] == RoleKind::helper)
            seed.seed(v, Label::b);
    }
    return seed;
}

auto format_seed(const CompositionOutput & out) -> std::string
{
    auto seed = seed_assignment(out);
    std::string s;
    for (Vertex v = 0; v < seed.order(); ++v)
        if (seed[v] != Label::free)
            s += (seed[v] == Label::a ? "A " : "B ") + std::to_string(v) + "\n";
    return s;
}

namespace {
    // on-path alpha in A and beta in B down to the given leaf, the reverse off it
    void route(const SelectionGadget & s, int leaf, std::vector<Label> & side)
    {
        std::vector<char> on(2 * s.q, 0);
        for (int x = s.q + leaf; x > 1; x /= 2)
            on[x] = 1;
        for (int x = 2; x < 2 * s.q; ++x) {
            side[s.alpha[x]] = on[x] ? Label::a : Label::b;
            side[s.beta[x]] = on[x] ? Label::b : Label::a;
        }
        side[s.activator] = Label::b;
    }

    void idle(const SelectionGadget & s, std::vector<Label> & side)
    {
        for (int x = 2; x < 2 * s.q; ++x) {
            side[s.alpha[x]] = Label::b;
            side[s.beta[x]] = Label::a;
        }
        side[s.activator] = Label::a;
    }
}

auto build_witness_partition(const CompositionOutput & out, int s, const VertexSet & iset) -> ClusterPiPartition
{
    auto & batch = out.batch;
    if (s < 0 || s >= batch.t)
        throw std::invalid_argument("instance index out of range");
    auto & inst = batch.instances[s];
    if (! is_colorful_independent(inst, iset))
        throw std::invalid_argument("not a colorful independent set of instance " + std::to_string(s));

    std::vector<Label> side(out.g.order());
    for (Vertex v = 0; v < out.g.order(); ++v) {
        switch (out.roles[v]) {
        case RoleKind::anchor:
        case RoleKind::dial:
        case RoleKind::choice: side[v] = Label::a; break;
        default: side[v] = Label::b; break;
        }
    }

    route(out.instance_selection, s, side);
    for (int r = 0; r < batch.t; ++r) {
        for (int i = 0; i < batch.k; ++i) {
            auto & gadget = out.vertex_selection[r][i];
            if (r != s) {
                idle(gadget, side);
                continue;
            }
            Vertex chosen = -1;
            for (auto v : iset)
                if (inst.color[v] == i)
                    chosen = v;
            auto cls = inst.color_class(i);
            auto leaf = std::lower_bound(cls.begin(), cls.end(), chosen) - cls.begin();
            route(gadget, static_cast<int>(leaf), side);
        }
        side[out.v_r[r]] = r == s ? Label::a : Label::b;
        for (int i = 0; i < batch.k; ++i)
            for (auto [v, x] : out.x[r][i])
                side[x] = r == s && iset.contains(v) ? Label::a : Label::b;
    }
    for (auto & e : out.edge_gadgets) {
        side[e.w_u] = e.r == s && iset.contains(e.u) ? Label::b : Label::a;
        side[e.w_v] = e.r == s && iset.contains(e.v) ? Label::b : Label::a;
    }

    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < out.g.order(); ++v)
        (side[v] == Label::a ? a : b).push_back(v);
    return {VertexSet(std::move(a)), VertexSet(std::move(b)), out.d};
}

namespace {
    auto item(std::vector<AuditItem> & items, std::string name, Verdict v)
    {
        items.push_back({std::move(name), std::move(v)});
    }

    auto vname(Vertex v) -> std::string { return std::to_string(v); }
}

auto audit_composition(const CompositionOutput & out) -> std::vector<AuditItem>
{
    std::vector<AuditItem> items;
    auto & g = out.g;
    auto & batch = out.batch;
    int n = g.order();

    item(items, "d-formula",
            out.d == composition_budget(batch.t, batch.k, batch.n, batch.m)
                    ? Verdict::pass()
                    : Verdict::fail("d = " + std::to_string(out.d) + ", formula gives "
                            + std::to_string(composition_budget(batch.t, batch.k, batch.n, batch.m))));

    int anchor_count = 0;
    for (auto & group : out.anchors)
        anchor_count += static_cast<int>(group.size());
    item(items, "anchor-count",
            anchor_count == out.d ? Verdict::pass()
                                  : Verdict::fail(std::to_string(anchor_count) + " anchors for d = " + std::to_string(out.d)));

    {
        Verdict v;
        std::map<Vertex, int> fixing;
        for (auto & c : out.copies)
            if (c.anchor_fixing)
                ++fixing[c.image[0]];
        for (auto & [a, pos] : out.anchor_pos)
            if (fixing[a] != out.d + 1) {
                v = Verdict::fail("anchor " + vname(a) + " has " + std::to_string(fixing[a]) + " fixing copies");
                break;
            }
        item(items, "anchor-fixing-copies", v);
    }

    {
        Verdict v;
        for (std::size_t c = 0; c < out.copies.size() && v; ++c) {
            auto & img = out.copies[c].image;
            for (int p = 0; p < out.pattern.order() && v; ++p)
                for (int q = p + 1; q < out.pattern.order(); ++q)
                    if (g.adjacent(img[p], img[q]) != out.pattern.adjacent(p, q)) {
                        v = Verdict::fail("copy " + std::to_string(c) + " is not induced at " + vname(img[p]) + " "
                                + vname(img[q]));
                        break;
                    }
        }
        item(items, "copies-induced", v);
    }

    std::vector<int> copy_of(n, -1);
    std::vector<int> copy_count(n, 0);
    for (std::size_t c = 0; c < out.copies.size(); ++c)
        for (auto x : out.copies[c].image)
            if (out.roles[x] == RoleKind::helper) {
                ++copy_count[x];
                copy_of[x] = static_cast<int>(c);
            }

    auto a11 = out.anchor(1, 1), a12 = out.anchor(1, 2);
    {
        Verdict v;
        for (Vertex x = 0; x < n && v; ++x)
            if (out.roles[x] == RoleKind::helper && copy_count[x] != 1)
                v = Verdict::fail("helper " + vname(x) + " lies in " + std::to_string(copy_count[x]) + " copies");
        item(items, "inv1-helper-one-copy", v);
    }
    {
        Verdict v;
        for (Vertex x = 0; x < n && v; ++x)
            if (out.roles[x] == RoleKind::helper && copy_of[x] >= 0 && ! out.copies[copy_of[x]].anchor_fixing
                    && ! (g.adjacent(x, a11) && g.adjacent(x, a12)))
                v = Verdict::fail("helper " + vname(x) + " misses a group-1 anchor");
        item(items, "inv1-helper-anchors", v);
    }
    {
        Verdict v;
        for (Vertex x = 0; x < n && v; ++x) {
            if (out.roles[x] != RoleKind::helper || copy_of[x] < 0)
                continue;
            auto & img = out.copies[copy_of[x]].image;
            for (auto y : g.neighbors(x))
                if (std::find(img.begin(), img.end(), y) == img.end() && y != a11 && y != a12) {
                    v = Verdict::fail("helper " + vname(x) + " has outside neighbor " + vname(y));
                    break;
                }
        }
        item(items, "inv1-helper-closed", v);
    }

    {
        Verdict v;
        for (auto & [a, members] : out.dials)
            if (! is_clique(g, members)) {
                v = Verdict::fail("dial of " + vname(a) + " is not a clique");
                break;
            }
        item(items, "inv2-dial-clique", v);
    }
    {
        auto dial_vertex = [&](Vertex x) {
            auto r = out.roles[x];
            return r == RoleKind::anchor || r == RoleKind::dial || r == RoleKind::choice || r == RoleKind::activator;
        };
        Verdict v;
        for (auto [x, y] : g.edges())
            if (dial_vertex(x) && dial_vertex(y) && (out.dial_of[x] == -1 || out.dial_of[x] != out.dial_of[y])) {
                v = Verdict::fail("dial vertices " + vname(x) + " " + vname(y) + " in different dials are adjacent");
                break;
            }
        item(items, "inv2-dials-separated", v);
    }
    {
        int k = batch.k;
        std::vector<Vertex> listed;
        for (int i = 1; i <= 2 * log2_exact(batch.t); i += 2)
            listed.push_back(out.anchor(2, i));
        for (int gr = 4; gr <= 3 + k; ++gr)
            for (int i = 1; i <= 2 * log2_exact(batch.n); i += 2)
                listed.push_back(out.anchor(gr, i));
        for (int gr = 4 + k; gr <= 3 + 2 * k; ++gr)
            for (int i = 1; i <= batch.n; ++i)
                listed.push_back(out.anchor(gr, i));
        Verdict v;
        for (auto a : listed)
            if (out.dials.at(a).size() != 1) {
                v = Verdict::fail("dial of anchor" + pos_string(out, a) + " is not a singleton");
                break;
            }
        item(items, "inv3-singleton-dials", v);
    }
    {
        Verdict v;
        for (Vertex x = 0; x < n && v; ++x) {
            if (out.roles[x] != RoleKind::volatile_vertex)
                continue;
            for (auto a : g.neighbors(x)) {
                if (out.roles[a] != RoleKind::anchor)
                    continue;
                for (auto y : out.dials.at(a))
                    if (! g.adjacent(x, y) && y != a) {
                        v = Verdict::fail("volatile " + vname(x) + " sees anchor " + vname(a) + " but not dial member "
                                + vname(y));
                        break;
                    }
            }
        }
        item(items, "inv3-volatile", v);
    }
    {
        Verdict v;
        for (auto & e : out.exclusive) {
            auto & img = out.copies.at(e.copy).image;
            for (auto x : {e.u, e.v, e.w})
                if (std::find(img.begin(), img.end(), x) == img.end()) {
                    v = Verdict::fail("exclusive vertex " + vname(x) + " missing from its copy");
                    break;
                }
            if (! v)
                break;
        }
        item(items, "exclusive-tuples", v);
    }
    return items;
}

}
