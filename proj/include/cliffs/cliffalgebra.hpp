#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cliffs/cliff.hpp"
#include "cliffs/rangemap.hpp"
#include "cliffs/subposet.hpp"

namespace cliffs {

// Finite linear combination of basis elements indexed by cliffs.
struct LinCombo {
    std::map<Cliff, mpq_class> terms;  // no zero coefficients

    static LinCombo single(const Cliff& u, const mpq_class& c = 1);
    void add(const Cliff& u, const mpq_class& c);
    bool is_zero() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }
    mpq_class coeff(const Cliff& u) const;
    std::vector<Cliff> support() const;

    LinCombo operator+(const LinCombo& o) const;
    LinCombo operator-(const LinCombo& o) const;
    LinCombo operator*(const mpq_class& c) const;
    bool operator==(const LinCombo& o) const { return terms == o.terms; }

    // "F_{001} - 2 F_{010}", "0" when empty. The empty word prints as "-".
    std::string to_string(const std::string& symbol = "F") const;
    // Sorted list of {cliff, numerator, denominator}.
    std::string to_json() const;
};

struct TensorCombo {
    std::map<std::pair<Cliff, Cliff>, mpq_class> terms;

    void add(const Cliff& u, const Cliff& v, const mpq_class& c);
    bool is_zero() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }
    mpq_class coeff(const Cliff& u, const Cliff& v) const;
    bool operator==(const TensorCombo& o) const { return terms == o.terms; }
    std::string to_string() const;
};

using TripleKey = std::tuple<Cliff, Cliff, Cliff>;
using TripleCombo = std::map<TripleKey, mpq_class>;

enum class Basis { F, E, H, G };
const char* basis_name(Basis b);
Basis parse_basis(const std::string& s);

// u⫽v is plain concatenation; u⧵v lifts every letter of v sitting at its
// bound delta(i) to delta(|u|+i).
Cliff over(const RangeMap& d, const Cliff& u, const Cliff& v);
Cliff under(const RangeMap& d, const Cliff& u, const Cliff& v);
// G-basis bounds; delta must be weakly increasing (UnsupportedRangeMap).
Cliff over_g(const RangeMap& d, const Cliff& u, const Cliff& v);
Cliff under_g(const RangeMap& d, const Cliff& u, const Cliff& v);
// 1 when u⫽v is a cliff.
int chi(const RangeMap& d, const Cliff& u, const Cliff& v);

TensorCombo coproduct_f(const RangeMap& d, const Cliff& u);
// Counit applied to the left factor of a coproduct.
LinCombo counit_left(const TensorCombo& t);

// Sum of F_{uv'} over v' with r(v') = v and uv' a cliff.
LinCombo product_f(const RangeMap& d, const Cliff& u, const Cliff& v);
// chi(u⫽v) times the sum over the interval [u⫽v, u⧵v].
LinCombo product_f_interval(const RangeMap& d, const Cliff& u, const Cliff& v);
// Bilinear extension of product_f.
LinCombo product(const RangeMap& d, const LinCombo& x, const LinCombo& y);
TensorCombo coproduct(const RangeMap& d, const LinCombo& x);

struct AssociativityWitness {
    Cliff u, v, w;
    LinCombo defect;  // (F_u F_v) F_w - F_u (F_v F_w)
};
struct CoassociativityWitness {
    Cliff w;
    TripleCombo defect;  // (Δ⊗I)Δ - (I⊗Δ)Δ applied to F_w
};

// Triples of nonempty cliffs by total size, then lexicographically.
std::optional<AssociativityWitness> associativity_witness(const RangeMap& d, std::size_t size_bound);
std::optional<CoassociativityWitness> coassociativity_witness(const RangeMap& d,
                                                              std::size_t size_bound);

// b_u written in the F basis.
LinCombo basis_expand(const RangeMap& d, Basis b, const Cliff& u);
// Rewrites x (given in basis `from`) in basis `to`.
LinCombo basis_convert(const RangeMap& d, const LinCombo& x, Basis from, Basis to);
// Closed-form product rules, result in basis b.
LinCombo product_in_basis(const RangeMap& d, Basis b, const Cliff& u, const Cliff& v);
// Same product computed through the F basis.
LinCombo product_via_f(const RangeMap& d, Basis b, const Cliff& u, const Cliff& v);

// Nonempty cliff with no proper nonempty suffix that is a cliff.
bool is_prime(const RangeMap& d, const Cliff& u);
// No split u = v⫽w with v, w nonempty cliffs.
bool is_prime_by_definition(const RangeMap& d, const Cliff& u);
std::vector<Cliff> enumerate_primes(const RangeMap& d, std::size_t n);
std::vector<Cliff> prime_factorize(const RangeMap& d, const Cliff& u);

struct PresentationData {
    std::vector<std::vector<Cliff>> primes;               // primes[n] for n = 0..bound
    std::vector<std::vector<Cliff>> relation_monomials;   // sequences of primes
    AlgebraType type = AlgebraType::TypeA;
    std::size_t degree_bound = 0;
    // TypeD ideals are infinitely generated, so any bounded list is partial.
    bool truncated = false;

    std::string to_string() const;
    std::string to_json() const;
};

// Throws NotValleyFree.
PresentationData presentation(const RangeMap& d, std::size_t degree_bound);
// "a_{0}a_{01}" style rendering of a monomial.
std::string monomial_text(const std::vector<Cliff>& m);

// F_u F_v in the quotient by the span of cliffs outside S. S must claim
// ClosedByPrefix and ClosedBySuffixReduction; u, v must lie in S.
LinCombo quotient_product(const GradedFamily& s, const Cliff& u, const Cliff& v);

struct IntervalSupport {
    std::vector<Cliff> support;
    std::optional<Cliff> min, max;  // set when the support is a nonempty interval
    bool is_interval = true;        // empty supports count as intervals
};
IntervalSupport interval_support(const GradedFamily& s, const Cliff& u, const Cliff& v);

struct IntervalConditionReport {
    bool pass = true;
    std::size_t pairs = 0;
    std::vector<std::string> failures;
};
// All pairs of nonempty u, v in S with |u| + |v| <= size_bound.
IntervalConditionReport interval_condition_check(const GradedFamily& s, std::size_t size_bound);

// Exact rank of a set of sparse integer rows (column index -> value) by
// fraction-free elimination with the leftmost pivot.
std::size_t exact_rank(std::vector<std::map<std::size_t, mpz_class>> rows);

enum class RankMethod {
    // Rank of the span of every product F_u F_v, 0 < |u| < n.
    Products,
    // Rank of the image of the decomposable E elements (non-prime indices);
    // each row is the up-set of the smallest element of S above the index.
    // Needs ClosedByPrefix, MaxExtendable and MeetStable, else Products is used.
    Decomposables,
};

// Degrees 0..max_degree of a minimal generating set. Pass nullptr for the
// full algebra Cl_delta. Throws NotValleyFree.
std::vector<std::size_t> generator_dimensions(const RangeMap& d, const GradedFamily* s,
                                              std::size_t max_degree,
                                              RankMethod method = RankMethod::Products);

// Coefficients of 1/(1 - G(t)) up to the length of g (g[0] must be 0).
std::vector<mpz_class> free_hilbert_series(const std::vector<std::size_t>& g);

}  // namespace cliffs
