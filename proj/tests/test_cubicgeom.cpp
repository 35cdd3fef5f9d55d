#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cliffs/cubicgeom.hpp"
#include "cliffs/error.hpp"
#include "cliffs/fusscatalan.hpp"
#include "cliffs/lattice.hpp"

using namespace cliffs;

namespace {

Cliff c(const std::string& s) { return parse_cliff(s); }

std::vector<Cliff> words(std::initializer_list<const char*> xs) {
    std::vector<Cliff> v;
    for (const char* x : xs) v.push_back(c(x));
    return v;
}

const RangeMap one = mmap(1), two = mmap(2), three = mmap(3);
const RangeMap twos = RangeMap::periodic({}, {2});

std::set<Cell> as_set(const std::vector<Cell>& v) { return {v.begin(), v.end()}; }

long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Independent union measure: count grid unit cubes [a, a+1]^D whose centre
// lies in some k-cell, by scanning every candidate cube in the bounding box.
long brute_k_volume(const GradedFamily& s, std::size_t n, std::size_t k) {
    auto cells = cells_of_dimension(s, n, k);
    long count = 0;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountl(mask)) != k) continue;
        for (const Cliff& a : enumerate(s.delta, n)) {
            bool hit = false;
            for (const Cell& cl : cells) {
                if (cl.dim() != k) continue;
                bool in = true;
                for (std::size_t i = 0; i < n && in; ++i) {
                    const bool free = mask >> i & 1;
                    const bool cfree = cl.lower[i] != cl.upper[i];
                    if (free != cfree) in = false;
                    else if (free) in = cl.lower[i] <= a[i] && a[i] + 1 <= cl.upper[i];
                    else in = a[i] == cl.lower[i];
                }
                if (in) {
                    hit = true;
                    break;
                }
            }
            count += hit;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("cell basics") {
    Cell cl{c("00"), c("12")};
    CHECK(cl.dim() == 2);
    CHECK(cl.volume() == 2);
    CHECK(Cell{c("013"), c("013")}.dim() == 0);
    CHECK(Cell{c("013"), c("013")}.volume() == 1);
}

TEST_CASE("compatibility and purity in the planar examples") {
    GradedFamily a = finite_family("a", twos, words({"00", "01", "02", "10", "12"}));
    REQUIRE(a.has(Flag::Straight));
    CHECK(is_cell_compatible(a, c("00"), c("12")));
    CHECK(is_pure(a, Cell{c("00"), c("12")}));

    GradedFamily b = finite_family("b", twos, words({"00", "01", "10", "20", "11", "12", "21", "22"}));
    REQUIRE(b.has(Flag::Straight));
    CHECK_FALSE(is_cell_compatible(b, c("00"), c("22")));
    for (auto [u, v] : {std::pair{"00", "11"}, {"10", "21"}, {"11", "22"}}) {
        CHECK(is_cell_compatible(b, c(u), c(v)));
        CHECK(is_pure(b, Cell{c(u), c(v)}));
    }

    GradedFamily cc = finite_family("c", twos, words({"00", "01", "02", "20", "11", "12", "22"}));
    REQUIRE(cc.has(Flag::Straight));
    CHECK(is_cell_compatible(cc, c("00"), c("22")));
    CHECK_FALSE(is_pure(cc, Cell{c("00"), c("22")}));

    CHECK_THROWS_AS(is_cell_compatible(cc, c("02"), c("20")), Error);
    GradedFamily bent = finite_family("bent", twos, words({"00", "11"}));
    CHECK_FALSE(bent.has(Flag::Straight));
    try {
        is_cell_compatible(bent, c("00"), c("11"));
        FAIL("expected FlagMissing");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FlagMissing);
    }
}

TEST_CASE("three dimensional example") {
    RangeMap d = RangeMap::periodic({1, 1}, {3});
    GradedFamily s = finite_family(
        "d", d, words({"000", "001", "010", "011", "100", "101", "102", "103", "110", "111", "113"}));
    REQUIRE(s.has(Flag::Straight));
    auto top = cells_of_max_dimension(s, 3);
    REQUIRE(top.size() == 1);
    CHECK(top[0] == Cell{c("000"), c("111")});
    CHECK(volume(s, 3) == 1);
    CHECK(k_volume(s, 3, 2) == 8);
    CHECK(brute_k_volume(s, 3, 2) == 8);
    auto faces = cells_of_dimension(s, 3, 2);
    CHECK(std::find(faces.begin(), faces.end(), Cell{c("101"), c("113")}) != faces.end());
    CHECK(k_volume(s, 3, 0) == 11);
}

TEST_CASE("examples from the families") {
    auto h = cells_of_max_dimension(hi(two), 3);
    CHECK(h.size() == 5);
    for (const Cell& cl : h) CHECK(cl.volume() == 1);

    CHECK(as_set(maximal_cells(ca(two), 3)) == std::set<Cell>{Cell{c("000"), c("024")}});
    CHECK(is_cell_compatible(ca(two), c("000"), c("024")));
    CHECK(cells_of_max_dimension(cliff_family(one), 2) == std::vector<Cell>{Cell{c("00"), c("01")}});

    CHECK(volume(av(two), 3) == 5);
    CHECK(volume(ca(two), 3) == 8);
    CHECK(volume(hi(two), 3) == 5);
}

TEST_CASE("order dimension witness") {
    CHECK(order_dimension_witness(cliff_family(one), 4) == 3u);
    CHECK(order_dimension_witness(ca(two), 4) == 3u);
    // a chain only has one-dimensional cells
    GradedFamily chain = finite_family("chain", twos, words({"00", "01", "11"}));
    REQUIRE(chain.has(Flag::Straight));
    CHECK_FALSE(order_dimension_witness(chain, 2).has_value());
}

TEST_CASE("max-dimension cells match the wing constructions") {
    for (int m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= (m == 3 ? 4u : 5u); ++n) {
            RangeMap d = mmap(m);
            INFO("m=" << m << " n=" << n);

            std::set<Cell> want_av, want_hi, want_ca;
            for (const Cliff& u : wings(av(d), n, WingKind::Input))
                want_av.insert(Cell{wing_map(WingMap::AvZeta, m, u), u});
            for (const Cliff& u : wings(hi(d), n, WingKind::Input))
                want_hi.insert(Cell{wing_map(WingMap::HiThetaInput, m, u), u});
            for (const Cliff& u : wings(ca(d), n, WingKind::Output))
                want_ca.insert(Cell{u, wing_map(WingMap::CaRho, m, u)});

            auto av_cells = cells_of_max_dimension(av(d), n);
            auto hi_cells = cells_of_max_dimension(hi(d), n);
            auto ca_cells = cells_of_max_dimension(ca(d), n);
            CHECK(as_set(av_cells) == want_av);
            CHECK(as_set(hi_cells) == want_hi);
            CHECK(as_set(ca_cells) == want_ca);

            const int in = static_cast<int>(n);
            CHECK(av_cells.size() == cat(m - 1, in));
            CHECK(hi_cells.size() == cat(m - 1, in));

            for (GradedFamily s : {av(d), hi(d), ca(d)}) {
                auto cells = cells_of_max_dimension(s, n);
                mpz_class sum = 0;
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    const Cell& x = cells[i];
                    CHECK(is_cell_compatible(s, x.lower, x.upper));
                    // a point contains itself, so 0-cells are never pure
                    if (x.dim() > 0) CHECK(is_pure(s, x));
                    if (s.name != "Ca") CHECK(x.volume() == 1);
                    sum += x.volume();
                    for (std::size_t j = i + 1; j < cells.size(); ++j) CHECK(cells_disjoint(x, cells[j]));
                }
                CHECK(volume(s, n) == sum);
            }
            CHECK(volume(av(d), n) == cat(m - 1, in));
            CHECK(volume(hi(d), n) == cat(m - 1, in));
            mpz_class ca_vol;
            mpz_ui_pow_ui(ca_vol.get_mpz_t(), static_cast<unsigned long>(m), n - 1);
            ca_vol *= factorial(in - 1);
            CHECK(volume(ca(d), n) == ca_vol);
            CHECK(volume(cliff_family(d), n) == ca_vol);
        }
}

TEST_CASE("unit counting agrees with a direct scan") {
    for (GradedFamily s : {av(two), hi(two), ca(two), ca(one)})
        for (std::size_t n = 1; n <= 3; ++n)
            for (std::size_t k = 0; k < n; ++k) CHECK(k_volume(s, n, k) == brute_k_volume(s, n, k));
}

TEST_CASE("disjointness") {
    CHECK(cells_disjoint(Cell{c("00"), c("11")}, Cell{c("01"), c("12")}));
    CHECK_FALSE(cells_disjoint(Cell{c("00"), c("22")}, Cell{c("01"), c("12")}));
    CHECK_FALSE(cells_disjoint(Cell{c("00"), c("02")}, Cell{c("00"), c("02")}));
    CHECK(cells_disjoint(Cell{c("00"), c("02")}, Cell{c("10"), c("12")}));
    CHECK(cells_disjoint(Cell{c("00"), c("22")}, Cell{c("02"), c("22")}));
}

TEST_CASE("json export") {
    std::string j = cells_to_json({Cell{c("000"), c("024")}});
    CHECK(j.find("\"vol\":\"8\"") != std::string::npos);
    CHECK(j.find("\"dim\":2") != std::string::npos);
}
