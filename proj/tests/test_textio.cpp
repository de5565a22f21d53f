#include <catch2/catch_amalgamated.hpp>

#include "adjmin/enumerate.hpp"
#include "adjmin/textio.hpp"

using namespace adjmin;

TEST_CASE("square tetromino encoding from the reference datasets") {
    const std::string s = "{{{1,1},{2,2}},{{2,1},{3,2}},{{1,2},{2,3}},{{2,2},{3,3}}}";
    CellCollection c = parse_collection(s);
    CHECK(c.rank() == 4);
    CHECK(c == CellCollection::from_lower_lefts({{1, 1}, {2, 1}, {1, 2}, {2, 2}}));
    CHECK(format_collection(c) == s);
}

TEST_CASE("whitespace-insensitive parsing") {
    CellCollection c = parse_collection(" { {{1,1}, {2,2}} ,\n {{2,1},{3,2}} } ");
    CHECK(c.rank() == 2);
}

TEST_CASE("empty collection") {
    CHECK(parse_collection("{}").rank() == 0);
    CHECK(format_collection(CellCollection{}) == "{}");
}

TEST_CASE("negative coordinates round-trip") {
    CellCollection c = CellCollection::from_lower_lefts({{-3, -1}, {-2, -1}});
    CHECK(parse_collection(format_collection(c)) == c);
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_collection("{{{1,1},{3,3}}}"), ParseError);
    try {
        parse_collection("{{{1,1},{3,3}}}");
    } catch (const ParseError& e) {
        CHECK(e.offset == 1);
    }
    CHECK_THROWS_AS(parse_collection("{{{1,1},{2,2}}"), ParseError);
    CHECK_THROWS_AS(parse_collection("{{{1,a},{2,2}}}"), ParseError);
    CHECK_THROWS_AS(parse_collection("{{{1,1},{2,2}}} junk"), ParseError);
    CHECK_THROWS_AS(parse_collection(""), ParseError);
}

TEST_CASE("format sorts cells by (y,x) and round-trips on every small class") {
    for (int rank = 1; rank <= 4; ++rank) {
        EnumerationConfig cfg;
        cfg.rank = rank;
        for (const auto& c : collect_collections(cfg)) {
            CellCollection back = parse_collection(format_collection(c));
            CHECK(back == c);
            CHECK(format_collection(back) == format_collection(c));
        }
    }
}
