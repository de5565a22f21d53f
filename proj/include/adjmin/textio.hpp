#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "adjmin/errors.hpp"
#include "adjmin/geometry.hpp"

namespace adjmin {

// Collections travel as a brace-encoded list of cells, each cell given by its
// two diagonal corners:
//   {{{1,1},{2,2}},{{2,1},{3,2}},{{1,2},{2,3}},{{2,2},{3,3}}}
// Whitespace is ignored. The second corner must equal the first plus (1,1).

namespace detail {

class BraceParser {
  public:
    explicit BraceParser(std::string_view s) : s_(s) {}

    CellCollection parse() {
        skip_ws();
        expect('{');
        std::vector<Point> lls;
        skip_ws();
        if (peek() == '}') {
            ++pos_;
        } else {
            for (;;) {
                lls.push_back(parse_cell());
                skip_ws();
                char c = next();
                if (c == '}') break;
                if (c != ',') fail("expected ',' or '}'", pos_ - 1);
            }
        }
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters after collection", pos_);
        return CellCollection::from_lower_lefts(std::move(lls));
    }

  private:
    Point parse_cell() {
        std::size_t start = pos_;
        skip_ws();
        expect('{');
        Point lo = parse_point();
        skip_ws();
        expect(',');
        Point hi = parse_point();
        skip_ws();
        expect('}');
        if (hi.x != lo.x + 1 || hi.y != lo.y + 1)
            fail("cell corners are not diagonal corners of a unit cell", start);
        return lo;
    }

    Point parse_point() {
        skip_ws();
        expect('{');
        std::int64_t x = parse_int();
        skip_ws();
        expect(',');
        std::int64_t y = parse_int();
        skip_ws();
        expect('}');
        return {x, y};
    }

    std::int64_t parse_int() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer", start);
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char next() {
        if (pos_ >= s_.size()) fail("unexpected end of input", pos_);
        return s_[pos_++];
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg, std::size_t off) const {
        throw ParseError(msg, off);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline CellCollection parse_collection(std::string_view text) {
    return detail::BraceParser(text).parse();
}

// Cells emitted sorted by (y,x) of their lower-left corner, so that
// parse(format(c)) == c and format is canonical on equal collections.
inline std::string format_collection(const CellCollection& c) {
    std::string out = "{";
    bool first = true;
    for (const Cell& cell : c.cells()) {
        if (!first) out += ',';
        first = false;
        out += '{';
        out += '{' + std::to_string(cell.ll.x) + ',' + std::to_string(cell.ll.y) + '}';
        out += ",{" + std::to_string(cell.ll.x + 1) + ',' + std::to_string(cell.ll.y + 1) + '}';
        out += '}';
    }
    out += '}';
    return out;
}

}  // namespace adjmin
