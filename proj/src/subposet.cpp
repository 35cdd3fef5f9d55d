#include "cliffs/subposet.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cliffs/error.hpp"
#include "cliffs/lattice.hpp"

namespace cliffs {

namespace {

const std::vector<std::pair<Flag, const char*>>& flag_table() {
    static const std::vector<std::pair<Flag, const char*>> t = {
        {Flag::ClosedByPrefix, "closed_by_prefix"},
        {Flag::MinExtendable, "min_extendable"},
        {Flag::MaxExtendable, "max_extendable"},
        {Flag::Spread, "spread"},
        {Flag::Straight, "straight"},
        {Flag::Coated, "coated"},
        {Flag::Nested, "nested"},
        {Flag::JoinStable, "join_stable"},
        {Flag::MeetStable, "meet_stable"},
        {Flag::ClosedBySuffixReduction, "closed_by_suffix_reduction"},
    };
    return t;
}

Cliff with_letter(Cliff u, int a) {
    u.push_back(a);
    return u;
}

// Exhaustive S(n), independent of the claimed flags.
std::vector<Cliff> filtered(const GradedFamily& s, std::size_t n) {
    std::vector<Cliff> out;
    for (Cliff& u : enumerate(s.delta, n))
        if (s.membership(u)) out.push_back(std::move(u));
    return out;
}

void prefix_search(const GradedFamily& s, Cliff& cur, std::size_t n, std::vector<Cliff>& out) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    int top = s.delta(cur.size() + 1);
    for (int a = 0; a <= top; ++a) {
        cur.push_back(a);
        if (s.membership(cur)) prefix_search(s, cur, n, out);
        cur.pop_back();
    }
}

FlagCheck failure(std::string detail, Cliff w, std::optional<Cliff> partner = std::nullopt) {
    FlagCheck c;
    c.holds = false;
    c.witness = std::move(w);
    c.partner = std::move(partner);
    c.detail = std::move(detail);
    return c;
}

std::string txt(const Cliff& u) { return u.empty() ? std::string("-") : to_text(u); }

// Checks of a single element against the definition of f. `level` is S(|u|)
// (needed by binary and poset-level conditions).
FlagCheck check_element(const GradedFamily& s, Flag f, const Cliff& u,
                        const std::vector<Cliff>& level, const FinitePoset* poset) {
    const std::size_t n = u.size();
    switch (f) {
        case Flag::ClosedByPrefix:
            for (std::size_t k = 0; k < n; ++k) {
                Cliff p(u.begin(), u.begin() + k);
                if (!s.contains(p))
                    return failure("prefix " + txt(p) + " of " + txt(u) + " is not in S", u);
            }
            break;
        case Flag::MinExtendable:
            if (!s.contains(with_letter(u, 0)))
                return failure(txt(u) + "·0 is not in S", u);
            break;
        case Flag::MaxExtendable: {
            int top = s.delta(n + 1);
            if (!s.contains(with_letter(u, top)))
                return failure(txt(u) + "·" + std::to_string(top) + " is not in S", u);
            break;
        }
        case Flag::ClosedBySuffixReduction:
            for (std::size_t k = 1; k < n; ++k) {
                Cliff suf(u.begin() + k, u.end());
                Cliff r = reduce(s.delta, suf);
                if (!s.contains(r))
                    return failure("reduction " + txt(r) + " of suffix " + txt(suf) + " of " +
                                       txt(u) + " is not in S",
                                   u);
            }
            break;
        case Flag::Coated:
            for (const Cliff& v : level) {
                if (!leq(u, v)) continue;
                for (std::size_t i = 1; i < n; ++i) {
                    Cliff w(u.begin(), u.begin() + i);
                    w.insert(w.end(), v.begin() + i, v.end());
                    if (!s.contains(w))
                        return failure("mixed word " + txt(w) + " of " + txt(u) + " <= " + txt(v) +
                                           " is not in S",
                                       u, v);
                }
            }
            break;
        case Flag::Straight: {
            int i = poset->index_of(u);
            for (int j : poset->upper_covers(i)) {
                const Cliff& v = poset->element(j);
                int diff = 0;
                for (std::size_t k = 0; k < n; ++k) diff += u[k] != v[k];
                if (diff != 1)
                    return failure("cover " + txt(u) + " < " + txt(v) + " changes " +
                                       std::to_string(diff) + " letters",
                                   u, v);
            }
            break;
        }
        case Flag::JoinStable:
        case Flag::MeetStable: {
            bool is_join = f == Flag::JoinStable;
            int i = poset->index_of(u);
            for (int j = 0; j < static_cast<int>(poset->size()); ++j) {
                auto r = is_join ? poset->join(i, j) : poset->meet(i, j);
                const Cliff& v = poset->element(j);
                if (!r)
                    return failure(txt(u) + " and " + txt(v) + " have no " +
                                       (is_join ? "join" : "meet") + " in S",
                                   u, v);
                const Cliff& w = poset->element(*r);
                for (std::size_t k = 0; k < n; ++k)
                    if (u[k] == v[k] && w[k] != u[k])
                        return failure(std::string(is_join ? "join " : "meet ") + txt(w) + " of " +
                                           txt(u) + " and " + txt(v) + " moves letter " +
                                           std::to_string(k + 1),
                                       u, v);
            }
            break;
        }
        default:
            break;
    }
    return {};
}

bool is_poset_level(Flag f) {
    return f == Flag::Straight || f == Flag::JoinStable || f == Flag::MeetStable;
}

}  // namespace

const char* flag_name(Flag f) {
    for (const auto& [k, v] : flag_table())
        if (k == f) return v;
    return "?";
}

Flag parse_flag(const std::string& name) {
    for (const auto& [k, v] : flag_table())
        if (name == v) return k;
    throw Error(ErrorKind::Parse, "unknown flag '" + name + "'");
}

const std::vector<Flag>& all_flags() {
    static const std::vector<Flag> fs = [] {
        std::vector<Flag> v;
        for (const auto& [k, _] : flag_table()) v.push_back(k);
        return v;
    }();
    return fs;
}

bool GradedFamily::contains(const Cliff& u) const { return is_cliff(delta, u) && membership(u); }

void GradedFamily::require(Flag f) const {
    if (!has(f))
        throw Error(ErrorKind::FlagMissing, name + " does not claim " + flag_name(f));
}

GradedFamily cliff_family(const RangeMap& d) {
    GradedFamily s;
    s.name = "Cl";
    s.delta = d;
    s.membership = [](const Cliff&) { return true; };
    s.flags = std::set<Flag>(all_flags().begin(), all_flags().end());
    return s;
}

GradedFamily finite_family(const std::string& name, const RangeMap& d, std::vector<Cliff> words) {
    for (const Cliff& w : words) require_cliff(d, w);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    std::size_t longest = 0;
    for (const Cliff& w : words) longest = std::max(longest, w.size());
    GradedFamily s;
    s.name = name;
    s.delta = d;
    s.membership = [ws = std::move(words)](const Cliff& u) {
        return std::binary_search(ws.begin(), ws.end(), u);
    };
    if (verify_flag(s, Flag::Straight, longest).holds) s.flags.insert(Flag::Straight);
    return s;
}

std::vector<Cliff> family_elements(const GradedFamily& s, std::size_t n) {
    if (!s.has(Flag::ClosedByPrefix)) return filtered(s, n);
    std::vector<Cliff> out;
    Cliff cur;
    if (s.membership(cur)) prefix_search(s, cur, n, out);
    return out;
}

FinitePoset build_poset(const GradedFamily& s, std::size_t n) {
    return FinitePoset::componentwise(family_elements(s, n));
}

std::vector<int> follow_set(const GradedFamily& s, const Cliff& u) {
    std::vector<int> out;
    Cliff w = u;
    w.push_back(0);
    int top = s.delta(u.size() + 1);
    for (int a = 0; a <= top; ++a) {
        w.back() = a;
        if (s.contains(w)) out.push_back(a);
    }
    return out;
}

FlagCheck verify_flag(const GradedFamily& s, Flag f, std::size_t n_max) {
    if (f == Flag::MinExtendable || f == Flag::MaxExtendable) {
        if (!s.membership(Cliff{})) return failure("the empty cliff is not in S", Cliff{});
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<Cliff> level = filtered(s, n);
        if (f == Flag::Spread) {
            Cliff z = zero_cliff(n), t = top_cliff(s.delta, n);
            if (!s.contains(z)) return failure("bottom " + txt(z) + " is not in S", z);
            if (!s.contains(t)) return failure("top " + txt(t) + " is not in S", t);
            continue;
        }
        if (f == Flag::Nested) {
            if (n == 0 || level.empty()) continue;
            FinitePoset p = FinitePoset::componentwise(level);
            std::string why = nested_violation(p);
            if (!why.empty()) return failure("size " + std::to_string(n) + ": " + why, level.front());
            continue;
        }
        std::optional<FinitePoset> poset;
        if (is_poset_level(f)) poset = FinitePoset::componentwise(level);
        for (const Cliff& u : level) {
            FlagCheck c = check_element(s, f, u, level, poset ? &*poset : nullptr);
            if (!c.holds) return c;
        }
    }
    return {};
}

FlagCheck check_flag_at(const GradedFamily& s, Flag f, const Cliff& u) {
    if (!s.contains(u)) return failure(txt(u) + " is not in S", u);
    std::vector<Cliff> level = filtered(s, u.size());
    std::optional<FinitePoset> poset;
    if (is_poset_level(f)) poset = FinitePoset::componentwise(level);
    if (f == Flag::Spread || f == Flag::Nested) return verify_flag(s, f, u.size());
    return check_element(s, f, u, level, poset ? &*poset : nullptr);
}

Cliff decrement(const GradedFamily& s, const Cliff& u) {
    s.require(Flag::ClosedByPrefix);
    s.require(Flag::MinExtendable);
    require_cliff(s.delta, u);
    Cliff w;
    for (int a : u) {
        w.push_back(a);
        while (!s.membership(w))
            if (--w.back() < 0)
                throw Error(ErrorKind::DomainViolation, s.name + " is not minimally extendable");
    }
    return w;
}

Cliff increment(const GradedFamily& s, const Cliff& u) {
    s.require(Flag::ClosedByPrefix);
    s.require(Flag::MaxExtendable);
    require_cliff(s.delta, u);
    Cliff w;
    for (int a : u) {
        w.push_back(a);
        const int top = s.delta(w.size());
        while (!s.membership(w))
            if (++w.back() > top)
                throw Error(ErrorKind::DomainViolation, s.name + " is not maximally extendable");
    }
    return w;
}

namespace {
void require_pair(const GradedFamily& s, const Cliff& u, const Cliff& v) {
    if (u.size() != v.size())
        throw Error(ErrorKind::SizeMismatch, txt(u) + " and " + txt(v) + " differ in size");
    for (const Cliff* w : {&u, &v})
        if (!s.contains(*w)) throw Error(ErrorKind::InvalidCliff, txt(*w) + " is not in " + s.name);
}
}  // namespace

Cliff meet_s(const GradedFamily& s, const Cliff& u, const Cliff& v) {
    s.require(Flag::ClosedByPrefix);
    s.require(Flag::MinExtendable);
    require_pair(s, u, v);
    return decrement(s, meet(s.delta, u, v));
}

Cliff join_s(const GradedFamily& s, const Cliff& u, const Cliff& v) {
    s.require(Flag::ClosedByPrefix);
    s.require(Flag::MaxExtendable);
    require_pair(s, u, v);
    return increment(s, join(s.delta, u, v));
}

std::pair<int, int> el_label(const Cliff& u, const Cliff& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i]) return {-static_cast<int>(i + 1), u[i]};
    throw Error(ErrorKind::DomainViolation, "equal words have no label");
}

namespace {

using Label = std::pair<int, int>;

struct ChainStats {
    std::size_t increasing = 0;
    std::size_t weakly_decreasing = 0;
    std::size_t chains = 0;
    std::vector<Label> smallest;
    bool smallest_increasing = false;
};

void chains_from(const FinitePoset& p, int cur, std::vector<Label>& labels, bool inc, bool wdec,
                 std::map<int, ChainStats>& stats) {
    for (int nxt : p.upper_covers(cur)) {
        Label l = el_label(p.element(cur), p.element(nxt));
        bool i2 = inc && (labels.empty() || labels.back() < l);
        bool d2 = wdec && (labels.empty() || !(labels.back() < l));
        labels.push_back(l);
        ChainStats& st = stats[nxt];
        ++st.chains;
        if (i2) ++st.increasing;
        if (d2) ++st.weakly_decreasing;
        if (st.chains == 1 || labels < st.smallest) {
            st.smallest = labels;
            st.smallest_increasing = i2;
        }
        chains_from(p, nxt, labels, i2, d2, stats);
        labels.pop_back();
    }
}

}  // namespace

ElReport el_labeling_verify(const GradedFamily& s, std::size_t n) {
    s.require(Flag::Straight);
    FinitePoset p = build_poset(s, n);
    ElReport rep;
    for (int x = 0; x < static_cast<int>(p.size()); ++x) {
        ++rep.intervals;  // [x, x]
        std::map<int, ChainStats> stats;
        std::vector<Label> labels;
        chains_from(p, x, labels, true, true, stats);
        for (const auto& [y, st] : stats) {
            ++rep.intervals;
            rep.chains += st.chains;
            std::string iv = "[" + txt(p.element(x)) + ", " + txt(p.element(y)) + "]";
            if (st.increasing != 1)
                rep.violations.push_back(iv + ": " + std::to_string(st.increasing) +
                                         " increasing chains");
            else if (!st.smallest_increasing)
                rep.violations.push_back(iv + ": increasing chain is not the smallest");
            if (st.weakly_decreasing > 1)
                rep.violations.push_back(iv + ": " + std::to_string(st.weakly_decreasing) +
                                         " weakly decreasing chains");
        }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

int last_letter_max(const FinitePoset& p) {
    int m = -1;
    for (const Cliff& u : p.elements()) {
        if (u.empty()) throw Error(ErrorKind::DomainViolation, "empty word has no last letter");
        m = std::max(m, u.back());
    }
    return m;
}

std::vector<Cliff> last_letter_slice(const std::vector<Cliff>& p, int a, int b) {
    std::vector<Cliff> out;
    for (const Cliff& u : p)
        if (!u.empty() && u.back() == a) {
            Cliff w = u;
            w.back() = b;
            out.push_back(std::move(w));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cliff> derive(const std::vector<Cliff>& p) {
    int m = -1;
    for (const Cliff& u : p) {
        if (u.empty()) throw Error(ErrorKind::DomainViolation, "empty word has no last letter");
        m = std::max(m, u.back());
    }
    std::vector<Cliff> out;
    for (const Cliff& u : p) {
        Cliff w = u;
        if (w.back() == m && m > 0) --w.back();
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Empty when the set of elements of p is an interval, otherwise the reason.
std::string interval_violation(const FinitePoset& p, std::vector<Cliff> set) {
    std::sort(set.begin(), set.end());
    std::vector<int> idx;
    for (const Cliff& u : set) {
        int i = p.index_of(u);
        if (i < 0) return txt(u) + " is not in P";
        idx.push_back(i);
    }
    int lo = -1, hi = -1;
    for (int i : idx) {
        bool is_lo = true, is_hi = true;
        for (int j : idx) {
            if (!p.leq(i, j)) is_lo = false;
            if (!p.leq(j, i)) is_hi = false;
        }
        if (is_lo) lo = i;
        if (is_hi) hi = i;
    }
    if (lo < 0 || hi < 0) return "no least or greatest element";
    std::vector<Cliff> got;
    for (int i : p.interval(lo, hi)) got.push_back(p.element(i));
    std::sort(got.begin(), got.end());
    if (got != set) return "not closed under intervals";
    return {};
}

}  // namespace

std::string nested_violation(const FinitePoset& p) {
    if (p.size() == 0) return "empty poset";
    const std::size_t n = p.element(0).size();
    if (n == 0) return "words of size 0";
    int m = last_letter_max(p);
    for (int a = 0; a <= m; ++a) {
        Cliff z(n, 0);
        z.back() = a;
        if (!p.contains(z)) return "(N1) " + txt(z) + " is missing";
    }
    for (int a = 0; a <= m; ++a) {
        std::string why = interval_violation(p, last_letter_slice(p.elements(), a, m));
        if (!why.empty()) return "(N2) slice " + std::to_string(a) + " moved to " +
                                 std::to_string(m) + ": " + why;
    }
    return {};
}

bool is_nested(const FinitePoset& p) { return nested_violation(p).empty(); }

FinitePoset derivation(const FinitePoset& p) {
    std::string why = nested_violation(p);
    if (!why.empty()) throw Error(ErrorKind::NotNested, why);
    int m = last_letter_max(p);
    if (m == 0) throw Error(ErrorKind::DomainViolation, "m(P) = 0, nothing to contract");
    return FinitePoset::componentwise(derive(p.elements()));
}

FinitePoset interval_doubling(const FinitePoset& q, const std::vector<Cliff>& interval) {
    std::set<Cliff> in(interval.begin(), interval.end());
    std::vector<Cliff> elems;
    for (const Cliff& x : q.elements()) {
        if (in.count(x)) {
            elems.push_back(with_letter(x, 1));
            elems.push_back(with_letter(x, 2));
        } else {
            elems.push_back(with_letter(x, 0));
        }
    }
    auto leq_rel = [&q](const Cliff& x, const Cliff& y) {
        Cliff bx(x.begin(), x.end() - 1), by(y.begin(), y.end() - 1);
        if (!q.leq(bx, by)) return false;
        if (x.back() != 0 && y.back() != 0) return x.back() <= y.back();
        return true;
    };
    return FinitePoset::from_relation(std::move(elems), leq_rel);
}

DoublingStep derivation_step(const FinitePoset& p, std::size_t n) {
    DoublingStep st;
    st.n = n;
    st.before = p.elements();
    FinitePoset d = derivation(p);
    st.after = d.elements();
    const int b = last_letter_max(p), b1 = b - 1;
    for (const Cliff& u : p.elements())
        if (u.back() == b1) st.interval.push_back(u);
    if (!interval_violation(d, st.interval).empty()) return st;
    st.interval_bottom = st.interval.front();
    st.interval_top = st.interval.front();
    for (const Cliff& u : st.interval) {
        if (leq(u, st.interval_bottom)) st.interval_bottom = u;
        if (leq(st.interval_top, u)) st.interval_top = u;
    }
    FinitePoset doubled = interval_doubling(d, st.interval);
    auto phi = [b, b1](const Cliff& x) {
        Cliff w(x.begin(), x.end() - 1);
        int tag = x.back();
        if (tag == 2 || (tag == 0 && w.back() == b1)) w.back() = b;
        return w;
    };
    st.certified = is_isomorphism(doubled, p, phi);
    return st;
}

bool DerivationSequence::all_certified() const {
    for (const auto& s : steps)
        if (!s.certified) return false;
    for (bool t : size_transitions)
        if (!t) return false;
    return reaches_trivial;
}

DerivationSequence derivation_sequence(const GradedFamily& s, std::size_t n) {
    s.require(Flag::Nested);
    s.require(Flag::ClosedByPrefix);
    DerivationSequence seq;
    FinitePoset p = build_poset(s, n);
    for (std::size_t k = n; k >= 1; --k) {
        while (last_letter_max(p) >= 1) {
            DoublingStep st = derivation_step(p, k);
            p = FinitePoset::componentwise(st.after);
            seq.steps.push_back(std::move(st));
        }
        FinitePoset prev = build_poset(s, k - 1);
        seq.size_transitions.push_back(
            is_isomorphism(p, prev, [](const Cliff& u) { return Cliff(u.begin(), u.end() - 1); }));
        p = std::move(prev);
    }
    seq.reaches_trivial = p.size() == 1 && p.element(0).empty();
    return seq;
}

std::vector<Cliff> wings(const GradedFamily& s, std::size_t n, WingKind kind) {
    s.require(Flag::Straight);
    FinitePoset p = build_poset(s, n);
    const std::size_t dim = dimension(s.delta, n);
    std::vector<Cliff> out;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        bool in = p.lower_covers(i).size() == dim;
        bool outw = p.upper_covers(i).size() == dim;
        bool keep = kind == WingKind::Input ? in : kind == WingKind::Output ? outw : (in && outw);
        if (keep) out.push_back(p.element(i));
    }
    return out;
}

std::size_t lower_degree(const GradedFamily& s, const Cliff& u) {
    s.require(Flag::Straight);
    std::size_t c = 0;
    Cliff w = u;
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (int b = u[i] - 1; b >= 0; --b) {
            w[i] = b;
            if (s.membership(w)) {
                ++c;
                break;
            }
        }
        w[i] = u[i];
    }
    return c;
}

std::size_t upper_degree(const GradedFamily& s, const Cliff& u) {
    s.require(Flag::Straight);
    std::size_t c = 0;
    Cliff w = u;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const int top = s.delta(i + 1);
        for (int b = u[i] + 1; b <= top; ++b) {
            w[i] = b;
            if (s.membership(w)) {
                ++c;
                break;
            }
        }
        w[i] = u[i];
    }
    return c;
}

bool is_wing(const GradedFamily& s, const Cliff& u, WingKind kind) {
    if (!s.contains(u)) return false;
    const std::size_t dim = dimension(s.delta, u.size());
    bool in = lower_degree(s, u) == dim;
    bool out = upper_degree(s, u) == dim;
    return kind == WingKind::Input ? in : kind == WingKind::Output ? out : (in && out);
}

Cliff elevation(const GradedFamily& s, const Cliff& u) {
    s.require(Flag::ClosedByPrefix);
    if (!s.contains(u)) throw Error(ErrorKind::InvalidCliff, txt(u) + " is not in " + s.name);
    Cliff e;
    Cliff prefix;
    for (int a : u) {
        std::vector<int> f = follow_set(s, prefix);
        e.push_back(static_cast<int>(std::lower_bound(f.begin(), f.end(), a) - f.begin()));
        prefix.push_back(a);
    }
    return e;
}

Cliff elevation_inverse(const GradedFamily& s, const Cliff& v) {
    s.require(Flag::ClosedByPrefix);
    Cliff u;
    for (int c : v) {
        std::vector<int> f = follow_set(s, u);
        if (c < 0 || c >= static_cast<int>(f.size()))
            throw Error(ErrorKind::NotInImage, txt(v) + " is not in the elevation image of " + s.name);
        u.push_back(f[c]);
    }
    if (!s.contains(u))
        throw Error(ErrorKind::NotInImage, txt(v) + " is not in the elevation image of " + s.name);
    return u;
}

std::vector<Cliff> elevation_image(const GradedFamily& s, std::size_t n) {
    std::vector<Cliff> out;
    for (const Cliff& u : family_elements(s, n)) out.push_back(elevation(s, u));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_exuviae(const GradedFamily& s, const Cliff& u) { return elevation(s, u) == u; }

}  // namespace cliffs
