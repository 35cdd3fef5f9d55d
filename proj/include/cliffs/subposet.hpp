#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cliffs/cliff.hpp"
#include "cliffs/poset.hpp"
#include "cliffs/rangemap.hpp"

namespace cliffs {

enum class Flag {
    ClosedByPrefix,
    MinExtendable,
    MaxExtendable,
    Spread,
    Straight,
    Coated,
    Nested,
    JoinStable,
    MeetStable,
    ClosedBySuffixReduction,
};

const char* flag_name(Flag f);
// Accepts the snake_case names returned by flag_name; throws Parse otherwise.
Flag parse_flag(const std::string& name);
const std::vector<Flag>& all_flags();

// A graded subset S of Cl_delta given by a membership predicate on cliffs.
// Flags are claims made by whoever built the family; see verify_flag.
struct GradedFamily {
    std::string name;
    RangeMap delta = RangeMap::affine(0);
    std::function<bool(const Cliff&)> membership;
    std::set<Flag> flags;

    // u is a delta-cliff and satisfies the predicate.
    bool contains(const Cliff& u) const;
    bool has(Flag f) const { return flags.count(f) > 0; }
    // Throws FlagMissing when f is not claimed.
    void require(Flag f) const;
};

// Cl_delta itself.
GradedFamily cliff_family(const RangeMap& d);

// A finite set of delta-cliffs. Straight is claimed when it holds; no other
// flag is claimed.
GradedFamily finite_family(const std::string& name, const RangeMap& d, std::vector<Cliff> words);

// S(n) in lexicographic order.
std::vector<Cliff> family_elements(const GradedFamily& s, std::size_t n);
FinitePoset build_poset(const GradedFamily& s, std::size_t n);

// F_S(u): letters a in [0, delta(|u|+1)] with ua in S.
std::vector<int> follow_set(const GradedFamily& s, const Cliff& u);

struct FlagCheck {
    bool holds = true;
    std::optional<Cliff> witness;   // offending element
    std::optional<Cliff> partner;   // second element, for binary conditions
    std::string detail;             // human readable description of the failure
};

// Checks the definition of f exhaustively on sizes 0..n_max and reports the
// first counterexample (sizes ascending, elements in lexicographic order).
FlagCheck verify_flag(const GradedFamily& s, Flag f, std::size_t n_max);
// Same check restricted to conditions rooted at u (and at each v of S(|u|)
// for binary conditions).
FlagCheck check_flag_at(const GradedFamily& s, Flag f, const Cliff& u);

// Letterwise projections into S.
Cliff decrement(const GradedFamily& s, const Cliff& u);
Cliff increment(const GradedFamily& s, const Cliff& u);
Cliff meet_s(const GradedFamily& s, const Cliff& u, const Cliff& v);
Cliff join_s(const GradedFamily& s, const Cliff& u, const Cliff& v);

// (-i, u_i) for a cover u < v differing at the single (1-based) index i.
std::pair<int, int> el_label(const Cliff& u, const Cliff& v);

struct ElReport {
    bool pass = true;
    std::size_t intervals = 0;
    std::size_t chains = 0;
    std::vector<std::string> violations;
};

ElReport el_labeling_verify(const GradedFamily& s, std::size_t n);

// m(P): largest last letter; P must consist of nonempty words of equal size.
int last_letter_max(const FinitePoset& p);
// Empty string when nested, otherwise the reason.
std::string nested_violation(const FinitePoset& p);
bool is_nested(const FinitePoset& p);

// P_{a,b} = {ub : ua in P}.
std::vector<Cliff> last_letter_slice(const std::vector<Cliff>& p, int a, int b);
// The set D(P), with no nestedness requirement.
std::vector<Cliff> derive(const std::vector<Cliff>& p);
// One derivation step on a nested poset. Throws NotNested.
FinitePoset derivation(const FinitePoset& p);

// Certificate that P is isomorphic to D(P)[I] with I = P_{m(P)-1}.
struct DoublingStep {
    std::size_t n = 0;
    std::vector<Cliff> before;    // P
    std::vector<Cliff> after;     // D(P)
    std::vector<Cliff> interval;  // I, an interval of D(P)
    Cliff interval_bottom, interval_top;
    bool certified = false;
};

// Builds the doubled poset Q[I]. Elements of Q \ I are encoded as x0 and the
// copies of x in I as x1 and x2 (one extra trailing letter).
FinitePoset interval_doubling(const FinitePoset& q, const std::vector<Cliff>& interval);
DoublingStep derivation_step(const FinitePoset& p, std::size_t n);

struct DerivationSequence {
    std::vector<DoublingStep> steps;
    // For each size n from the start down to 1: D^{m}(S(n)) is isomorphic to
    // S(n-1) by dropping the last letter.
    std::vector<bool> size_transitions;
    bool reaches_trivial = false;
    bool all_certified() const;
};

// Full sequence of contractions from S(n) down to {epsilon}.
DerivationSequence derivation_sequence(const GradedFamily& s, std::size_t n);

enum class WingKind { Input, Output, Butterfly };
std::vector<Cliff> wings(const GradedFamily& s, std::size_t n, WingKind kind);
// Number of elements of S(|u|) covered by (covering) u, computed locally
// letter by letter. Valid for straight S.
std::size_t lower_degree(const GradedFamily& s, const Cliff& u);
std::size_t upper_degree(const GradedFamily& s, const Cliff& u);
bool is_wing(const GradedFamily& s, const Cliff& u, WingKind kind);

Cliff elevation(const GradedFamily& s, const Cliff& u);
Cliff elevation_inverse(const GradedFamily& s, const Cliff& v);
std::vector<Cliff> elevation_image(const GradedFamily& s, std::size_t n);
bool is_exuviae(const GradedFamily& s, const Cliff& u);

}  // namespace cliffs
