#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cliffs/cliff.hpp"
#include "cliffs/error.hpp"

using namespace cliffs;

static Cliff c(const char* s) { return parse_cliff(s); }

TEST_CASE("text forms") {
    CHECK(to_text(c("0230228")) == "0230228");
    CHECK(to_text({0, 2, 13}) == "c:0,2,13");
    CHECK(parse_cliff("c:0,2,13") == Cliff{0, 2, 13});
    CHECK(parse_cliff("c:1,2") == c("12"));
    CHECK(parse_cliff("").empty());
    CHECK_THROWS_AS(parse_cliff("01x"), Error);
}

TEST_CASE("is_cliff") {
    CHECK(is_cliff(RangeMap::affine(1), c("012")));
    CHECK_FALSE(is_cliff(RangeMap::affine(1), c("020")));
    CHECK(is_cliff(RangeMap::affine(3), {}));
}

TEST_CASE("enumerate") {
    auto e = enumerate(RangeMap::affine(1), 3);
    std::vector<Cliff> expect{c("000"), c("001"), c("002"), c("010"), c("011"), c("012")};
    CHECK(e == expect);
    CHECK(enumerate(RangeMap::affine(2), 3).size() == 15);
    CHECK(enumerate(RangeMap::affine(0), 5) == std::vector<Cliff>{c("00000")});
    CHECK(enumerate(RangeMap::affine(2), 0).size() == 1);
    for (int m = 0; m <= 3; ++m)
        for (std::size_t n = 0; n <= 5; ++n) {
            auto els = enumerate(RangeMap::affine(m), n);
            CHECK(mpz_class(static_cast<unsigned long>(els.size())) == cliff_count(RangeMap::affine(m), n));
            CHECK(std::is_sorted(els.begin(), els.end()));
        }
}

TEST_CASE("reduce") {
    CHECK(reduce(RangeMap::affine(1), c("212066")) == c("012045"));
    CHECK(reduce(RangeMap::affine(2), c("212066")) == c("012066"));
    auto d = parse_range_map("word:1,0,2*1");
    for (const Cliff& u : enumerate(d, 4)) CHECK(reduce(d, u) == u);
    Cliff raw{5, 5, 5, 5};
    CHECK(reduce(d, reduce(d, raw)) == reduce(d, raw));
}

TEST_CASE("complement") {
    CHECK(complement(RangeMap::affine(1), c("0010")) == c("0113"));
    CHECK(complement(RangeMap::affine(2), c("0010")) == c("0236"));
    for (const Cliff& u : enumerate(RangeMap::affine(2), 4))
        CHECK(complement(RangeMap::affine(2), complement(RangeMap::affine(2), u)) == u);
    CHECK_THROWS_AS(complement(RangeMap::affine(1), c("02")), Error);
}

TEST_CASE("lehmer") {
    CHECK(lehmer({4, 3, 6, 5, 1, 2}) == c("002323"));
    CHECK(lehmer({1, 2, 3}) == c("000"));
    CHECK(lehmer({3, 2, 1}) == c("012"));
    CHECK_THROWS_AS(lehmer_inverse(c("02")), Error);
    for (std::size_t n = 0; n <= 6; ++n) {
        Permutation s(n);
        std::iota(s.begin(), s.end(), 1);
        std::vector<Cliff> codes;
        do {
            Cliff u = lehmer(s);
            CHECK(is_cliff(RangeMap::affine(1), u));
            CHECK(lehmer_inverse(u) == s);
            codes.push_back(u);
        } while (std::next_permutation(s.begin(), s.end()));
        std::sort(codes.begin(), codes.end());
        CHECK(codes == enumerate(RangeMap::affine(1), n));
    }
}

TEST_CASE("increasing trees") {
    auto d2 = RangeMap::affine(2);
    IncreasingTree leaf = tree_of(d2, {});
    CHECK(leaf.root == -1);
    CHECK(leaf.leaf_count() == 1);
    CHECK(leaf.to_json() == "null");

    // Grafted by hand, one node at a time.
    IncreasingTree t = tree_of(d2, c("0230228"));
    CHECK(t.leaf_count() == 1 + 14u);
    CHECK(t.to_json() ==
          "[1,[4,null,null,[5,[6,null,null,null],null,null]],null,"
          "[2,[7,null,null,null],[3,null,null,null],null]]");

    for (std::size_t n = 0; n <= 5; ++n)
        for (const Cliff& u : enumerate(d2, n)) {
            IncreasingTree tu = tree_of(d2, u);
            CHECK(tu.leaf_count() == static_cast<std::size_t>(1 + d2(n + 1)));
            CHECK(tree_inverse(tu) == u);
        }
    auto d = parse_range_map("word:0,2,3,3,5,7*9");
    for (const Cliff& u : enumerate(d, 4)) CHECK(tree_inverse(tree_of(d, u)) == u);
    CHECK_THROWS_AS(tree_of(parse_range_map("word:1*1"), c("0")), Error);
    CHECK_THROWS_AS(tree_of(parse_range_map("word:0,2*1"), c("0")), Error);
}
