#pragma once

#include <mpk/graph.hpp>

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mpk {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string & what, int line);
    auto line() const -> int { return line_; }

private:
    int line_;
};

// Yields non-blank, non-comment lines split into whitespace separated tokens.
class LineReader {
public:
    explicit LineReader(std::istream & in) : in_(in) {}

    auto next(std::vector<std::string> & tokens) -> bool;
    auto line() const -> int { return line_; }
    [[noreturn]] void fail(const std::string & what) const;

private:
    std::istream & in_;
    int line_ = 0;
};

auto parse_graph_block(LineReader & reader) -> Graph;
auto parse_graph(std::istream & in) -> Graph;
auto parse_graph(std::string_view text) -> Graph;
auto serialize_graph(const Graph & g) -> std::string;

auto read_file(const std::string & path) -> std::string;
void write_file(const std::string & path, std::string_view content);

auto parse_int(const std::string & token, const LineReader & reader) -> long long;

}
