#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bcs/graph.hpp"

namespace bcs {

class ParseError : public BcsError {
public:
    ParseError(int line, const std::string& message)
        : BcsError(Err::parse, "line " + std::to_string(line) + ": " + message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Graph file format (LF line endings, single spaces):
//   c <comment>        ignored, allowed anywhere
//   p bcs <n> <m>      exactly once, first non-comment line
//   v <id> <R|B>       one per vertex, ids 0..n-1 each exactly once
//   e <u> <v>          one per edge, u != v, each unordered pair once
// serialize_graph emits the canonical form: header, v lines ascending by id,
// e lines sorted with u < v. parse(serialize(g)) == g.
ColoredGraph parse_graph(std::string_view text);
std::string serialize_graph(const ColoredGraph& g);

// Solution file format:
//   s <size>
//   l <id>             size lines, ids strictly ascending
std::vector<int> parse_solution(std::string_view text);
std::string serialize_solution(const Solution& sol);

}  // namespace bcs
