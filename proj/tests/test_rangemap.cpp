#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliffs/error.hpp"
#include "cliffs/rangemap.hpp"

using namespace cliffs;

static RangeMap w(const char* s) { return parse_range_map(s); }

TEST_CASE("eval") {
    CHECK(RangeMap::affine(2)(3) == 4);
    CHECK(RangeMap::periodic({1, 0, 2, 1}, {1})(6) == 1);
    CHECK(RangeMap::affine(0)(7) == 0);
    CHECK(w("word:2,1*0")(1) == 2);
    CHECK(w("word:2,1*0")(9) == 0);
    CHECK(w("word:*1,2")(3) == 1);
    CHECK(w("word:*1,2")(4) == 2);
    CHECK_THROWS_AS(RangeMap::affine(1)(0), Error);
}

TEST_CASE("zero maps agree") {
    CHECK(RangeMap::affine(0) == RangeMap::periodic({}, {0}));
    CHECK(RangeMap::periodic({1}, {2, 2}) == RangeMap::periodic({1, 2}, {2}));
    CHECK(RangeMap::affine(1) != RangeMap::periodic({}, {0}));
}

TEST_CASE("properties") {
    auto p = properties(w("word:1,0*1"));
    CHECK_FALSE(p.valley_free);
    p = properties(RangeMap::affine(2));
    CHECK(p.increasing);
    CHECK(p.valley_free);
    CHECK(p.rooted);
    CHECK_FALSE(p.dominated_by.has_value());
    p = properties(w("word:0,1*0"));
    CHECK(p.valley_free);
    CHECK(p.has_descent);
    REQUIRE(p.dominated_by.has_value());
    CHECK(*p.dominated_by == 1);
    CHECK(is_dominated(w("word:0,1*0"), 2));
    p = properties(w("word:*0,1"));
    CHECK_FALSE(p.valley_free);
    p = properties(w("word:0,2,3,3,5,7*9"));
    CHECK(p.weakly_increasing);
    CHECK_FALSE(p.increasing);
}

TEST_CASE("classify") {
    CHECK(classify(RangeMap::affine(2)) == AlgebraType::TypeB);
    CHECK(classify(w("word:2,1*0")) == AlgebraType::TypeC);
    CHECK(classify(w("word:0,2*1")) == AlgebraType::TypeD);
    CHECK(classify(w("word:0*1")) == AlgebraType::TypeB);
    CHECK(classify(w("word:*3")) == AlgebraType::TypeA);
    CHECK(classify(RangeMap::affine(0)) == AlgebraType::TypeA);
    CHECK(classify(w("word:1,0*1")) == AlgebraType::NotValleyFree);
    CHECK(classify(w("word:0,1,1*0")) == AlgebraType::TypeC);
    CHECK(classify(w("word:1,2,3*2")) == AlgebraType::TypeD);
}

// Property flags decided on the window never disagree with a long scan.
TEST_CASE("window flags agree with long horizon") {
    std::vector<RangeMap> panel;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                panel.push_back(RangeMap::periodic({a}, {b, c}));
                panel.push_back(RangeMap::periodic({a, b}, {c}));
                panel.push_back(RangeMap::periodic({}, {a, b, c}));
                panel.push_back(RangeMap::affine(a, {b, c}));
            }
    for (const RangeMap& d : panel) {
        std::size_t h = 4 * (d.prefix().size() + d.period().size()) + 8;
        bool asc = false, desc = false, valley = false, seen_desc = false;
        for (std::size_t i = 1; i < h; ++i) {
            if (d(i) < d(i + 1)) {
                asc = true;
                if (seen_desc) valley = true;
            }
            if (d(i) > d(i + 1)) desc = seen_desc = true;
        }
        auto p = properties(d);
        CAPTURE(format(d));
        CHECK(p.has_ascent == asc);
        CHECK(p.has_descent == desc);
        CHECK(p.valley_free == !valley);
        CHECK((classify(d) == AlgebraType::NotValleyFree) == valley);
    }
}

TEST_CASE("dimension") {
    CHECK(dimension(RangeMap::affine(1), 4) == 3);
    CHECK(dimension(RangeMap::affine(0), 9) == 0);
    CHECK(dimension(w("word:1,0,2,1*1"), 4) == 3);
}

TEST_CASE("parse and format") {
    CHECK(parse_range_map("affine:2") == RangeMap::affine(2));
    auto d = parse_range_map("word:1,0,2,1*1");
    CHECK(d.prefix() == std::vector<int>{1, 0, 2, 1});
    CHECK(d.period() == std::vector<int>{1});
    CHECK_THROWS_AS(parse_range_map("word:*"), Error);
    CHECK_THROWS_AS(parse_range_map("word:1,2"), Error);
    CHECK_THROWS_AS(parse_range_map("affine:x"), Error);
    CHECK_THROWS_AS(parse_range_map("foo"), Error);
    try {
        parse_range_map("word:1,,2*0");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("position 7") != std::string::npos);
    }
    for (const char* s : {"affine:0", "affine:3", "word:*0", "word:1,0,2,1*1", "word:0*1,2", "affine:2@0,1,1"})
        CHECK(format(parse_range_map(s)) == s);
    CHECK(parse_range_map("word:*0") == RangeMap::affine(0));
}
