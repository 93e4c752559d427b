#include <mpk/io.hpp>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace mpk {

ParseError::ParseError(const std::string & what, int line) :
    std::runtime_error(what + ", line " + std::to_string(line)),
    line_(line)
{
}

auto LineReader::next(std::vector<std::string> & tokens) -> bool
{
    std::string text;
    while (std::getline(in_, text)) {
        ++line_;
        if (! text.empty() && text.back() == '\r')
            text.pop_back();
        auto first = text.find_first_not_of(" \t");
        if (first == std::string::npos || text[first] == '#')
            continue;
        tokens.clear();
        std::istringstream words(text);
        std::string w;
        while (words >> w)
            tokens.push_back(w);
        return true;
    }
    return false;
}

void LineReader::fail(const std::string & what) const
{
    throw ParseError(what, line_);
}

auto parse_int(const std::string & token, const LineReader & reader) -> long long
{
    long long value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size())
        reader.fail("expected integer, got '" + token + "'");
    return value;
}

auto parse_graph_block(LineReader & reader) -> Graph
{
    std::vector<std::string> tok;
    if (! reader.next(tok))
        reader.fail("missing header");
    if (tok.size() != 2)
        reader.fail("malformed header");
    long long n = 0, m = 0;
    try {
        n = parse_int(tok[0], reader);
        m = parse_int(tok[1], reader);
    }
    catch (const ParseError &) {
        reader.fail("malformed header");
    }
    if (n < 0 || m < 0 || n > 100'000'000)
        reader.fail("malformed header");

    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    for (long long i = 0; i < m; ++i) {
        if (! reader.next(tok))
            reader.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        if (tok.size() != 2)
            reader.fail("malformed edge");
        auto u = parse_int(tok[0], reader), v = parse_int(tok[1], reader);
        if (u < 0 || v < 0 || u >= n || v >= n)
            reader.fail("vertex id out of range");
        if (u == v)
            reader.fail("self-loop");
        if (u > v)
            std::swap(u, v);
        if (! seen.emplace(static_cast<int>(u), static_cast<int>(v)).second)
            reader.fail("duplicate edge");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

auto parse_graph(std::istream & in) -> Graph
{
    LineReader reader(in);
    auto g = parse_graph_block(reader);
    std::vector<std::string> tok;
    if (reader.next(tok))
        reader.fail("unexpected trailing content");
    return g;
}

auto parse_graph(std::string_view text) -> Graph
{
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

auto serialize_graph(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string & path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw std::runtime_error("cannot write " + path);
    out << content;
}

}
