#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "bcs/io.hpp"

namespace bcs::detail {

// Line-oriented tokenizer shared by the file-format parsers. Splits on single
// spaces, tracks line numbers for diagnostics, skips blank lines and "c"
// comment lines.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    bool next_line(std::vector<std::string_view>& fields) {
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (line.empty()) continue;
            if (line[0] == 'c' && (line.size() == 1 || line[1] == ' ')) continue;
            fields.clear();
            std::size_t start = 0;
            while (start <= line.size()) {
                std::size_t sp = line.find(' ', start);
                if (sp == std::string_view::npos) sp = line.size();
                fields.push_back(line.substr(start, sp - start));
                start = sp + 1;
            }
            return true;
        }
        return false;
    }
};

inline int parse_int(const Cursor& cur, std::string_view field, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(cur.line_no, std::string("expected ") + what);
    }
    return value;
}

inline void expect_fields(const Cursor& cur, const std::vector<std::string_view>& fields,
                          std::size_t count, const char* shape) {
    if (fields.size() != count) {
        throw ParseError(cur.line_no, std::string("malformed line, expected: ") + shape);
    }
    for (const auto& f : fields) {
        if (f.empty()) {
            throw ParseError(cur.line_no, std::string("malformed line, expected: ") + shape);
        }
    }
}

}  // namespace bcs::detail
