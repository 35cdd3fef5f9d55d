#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cliffs/cliff.hpp"
#include "cliffs/poset.hpp"
#include "cliffs/rangemap.hpp"

namespace cliffs {

bool leq(const Cliff& u, const Cliff& v);
bool covers(const Cliff& u, const Cliff& v);  // v covers u
Cliff meet(const RangeMap& d, const Cliff& u, const Cliff& v);
Cliff join(const RangeMap& d, const Cliff& u, const Cliff& v);
// u with its i-th letter (1-based) incremented.
Cliff up(const Cliff& u, std::size_t i);

// Cl_delta(n) with covers u -> up_i(u).
FinitePoset cliff_poset(const RangeMap& d, std::size_t n);

mpz_class saturated_chain_count(const RangeMap& d, std::size_t n);
// Maximal chains from the bottom to the top. Throws CapExceeded when the
// count exceeds cap.
std::vector<std::vector<Cliff>> enumerate_saturated_chains(const RangeMap& d, std::size_t n,
                                                           const mpz_class& cap);

mpz_class interval_count(const RangeMap& d, std::size_t n);

// Sparse polynomial in x, y: (i, j) -> coefficient of x^i y^j.
struct PolynomialXY {
    std::map<std::pair<int, int>, mpz_class> terms;

    PolynomialXY operator*(const PolynomialXY& o) const;
    bool operator==(const PolynomialXY& o) const { return terms == o.terms; }
    void add(int i, int j, const mpz_class& c);
    std::string to_string() const;
};

PolynomialXY degree_polynomial(const RangeMap& d, std::size_t n);
// Histogram of (number covered, number covering) over the elements.
PolynomialXY degree_polynomial(const FinitePoset& p);
// Coefficients in y of dpol(1, y) and dpol(1, 1 + y).
std::vector<mpz_class> h_polynomial(const PolynomialXY& p);
std::vector<mpz_class> f_polynomial(const PolynomialXY& p);

struct IntervalIsomorphism {
    RangeMap delta;  // prefix v - u followed by the tail of the original map
    Cliff lower;

    Cliff operator()(const Cliff& w) const;
};

IntervalIsomorphism interval_isomorphism(const RangeMap& d, const Cliff& u, const Cliff& v);

// Upper covers of u in the order generalizing the weak order.
std::vector<Cliff> bruhat_covers(const RangeMap& d, const Cliff& u);
FinitePoset bruhat_poset(const RangeMap& d, std::size_t n);

// Weak order on permutations of size n; elements stored as one-line words.
FinitePoset weak_order(std::size_t n);

}  // namespace cliffs
