#include "cliffs/cliffalgebra.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "cliffs/error.hpp"
#include "cliffs/lattice.hpp"

namespace cliffs {

namespace {

std::string txt(const Cliff& u) { return u.empty() ? std::string("-") : to_text(u); }

Cliff concat(const Cliff& u, const Cliff& v) {
    Cliff w = u;
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

// Calls f on every word w with lo <= w <= hi componentwise.
void box(const Cliff& lo, const Cliff& hi, const std::function<void(const Cliff&)>& f) {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) return;
    Cliff w = lo;
    while (true) {
        f(w);
        std::size_t i = w.size();
        while (i > 0) {
            --i;
            if (w[i] < hi[i]) {
                ++w[i];
                break;
            }
            w[i] = lo[i];
            if (i == 0) return;
        }
        if (w.empty()) return;
    }
}

void require_weakly_increasing(const RangeMap& d) {
    if (!properties(d).weakly_increasing)
        throw Error(ErrorKind::UnsupportedRangeMap, format(d) + " is not weakly increasing");
}

void require_valley_free(const RangeMap& d) {
    if (!properties(d).valley_free)
        throw Error(ErrorKind::NotValleyFree, format(d) + " has a valley");
}

void put_coeff(std::ostringstream& os, const mpq_class& c, bool first) {
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    mpq_class a = abs(c);
    if (a != 1) os << a.get_str() << " ";
}

}  // namespace

// ---------------------------------------------------------------- combos

LinCombo LinCombo::single(const Cliff& u, const mpq_class& c) {
    LinCombo x;
    x.add(u, c);
    return x;
}

void LinCombo::add(const Cliff& u, const mpq_class& c) {
    if (c == 0) return;
    mpq_class x = c;
    x.canonicalize();
    auto [it, fresh] = terms.emplace(u, x);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

mpq_class LinCombo::coeff(const Cliff& u) const {
    auto it = terms.find(u);
    return it == terms.end() ? mpq_class(0) : it->second;
}

std::vector<Cliff> LinCombo::support() const {
    std::vector<Cliff> s;
    for (const auto& [u, c] : terms) s.push_back(u);
    return s;
}

LinCombo LinCombo::operator+(const LinCombo& o) const {
    LinCombo r = *this;
    for (const auto& [u, c] : o.terms) r.add(u, c);
    return r;
}

LinCombo LinCombo::operator-(const LinCombo& o) const {
    LinCombo r = *this;
    for (const auto& [u, c] : o.terms) r.add(u, -c);
    return r;
}

LinCombo LinCombo::operator*(const mpq_class& c) const {
    LinCombo r;
    if (c == 0) return r;
    for (const auto& [u, a] : terms) r.terms.emplace(u, a * c);
    return r;
}

std::string LinCombo::to_string(const std::string& symbol) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [u, c] : terms) {
        put_coeff(os, c, first);
        os << symbol << "_{" << txt(u) << "}";
        first = false;
    }
    return os.str();
}

std::string LinCombo::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [u, c] : terms)
        arr.push_back({{"cliff", u.empty() ? "" : to_text(u)},
                       {"numerator", c.get_num().get_str()},
                       {"denominator", c.get_den().get_str()}});
    return arr.dump();
}

void TensorCombo::add(const Cliff& u, const Cliff& v, const mpq_class& c) {
    if (c == 0) return;
    mpq_class x = c;
    x.canonicalize();
    auto [it, fresh] = terms.emplace(std::make_pair(u, v), x);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

mpq_class TensorCombo::coeff(const Cliff& u, const Cliff& v) const {
    auto it = terms.find({u, v});
    return it == terms.end() ? mpq_class(0) : it->second;
}

std::string TensorCombo::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
        put_coeff(os, c, first);
        os << "F_{" << txt(k.first) << "} (x) F_{" << txt(k.second) << "}";
        first = false;
    }
    return os.str();
}

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::F: return "F";
        case Basis::E: return "E";
        case Basis::H: return "H";
        case Basis::G: return "G";
    }
    return "?";
}

Basis parse_basis(const std::string& s) {
    if (s == "F") return Basis::F;
    if (s == "E") return Basis::E;
    if (s == "H") return Basis::H;
    if (s == "G") return Basis::G;
    throw Error(ErrorKind::Parse, "unknown basis " + s);
}

// ---------------------------------------------------------------- over/under

Cliff over(const RangeMap& d, const Cliff& u, const Cliff& v) {
    require_cliff(d, u);
    require_cliff(d, v);
    return concat(u, v);
}

Cliff under(const RangeMap& d, const Cliff& u, const Cliff& v) {
    require_cliff(d, u);
    require_cliff(d, v);
    Cliff w = u;
    const std::size_t n = u.size();
    for (std::size_t i = 1; i <= v.size(); ++i)
        w.push_back(v[i - 1] == d(i) ? d(n + i) : v[i - 1]);
    return w;
}

Cliff over_g(const RangeMap& d, const Cliff& u, const Cliff& v) {
    require_weakly_increasing(d);
    require_cliff(d, u);
    require_cliff(d, v);
    Cliff w = u;
    const std::size_t n = u.size();
    for (std::size_t i = 1; i <= v.size(); ++i)
        w.push_back(v[i - 1] == 0 ? 0 : d(n + i) - d(i) + v[i - 1]);
    return w;
}

Cliff under_g(const RangeMap& d, const Cliff& u, const Cliff& v) {
    require_weakly_increasing(d);
    require_cliff(d, u);
    require_cliff(d, v);
    Cliff w = u;
    const std::size_t n = u.size();
    for (std::size_t i = 1; i <= v.size(); ++i) w.push_back(d(n + i) - d(i) + v[i - 1]);
    return w;
}

int chi(const RangeMap& d, const Cliff& u, const Cliff& v) {
    return is_cliff(d, concat(u, v)) ? 1 : 0;
}

// ---------------------------------------------------------------- product/coproduct

TensorCombo coproduct_f(const RangeMap& d, const Cliff& u) {
    require_cliff(d, u);
    TensorCombo t;
    for (std::size_t k = 0; k <= u.size(); ++k) {
        Cliff left(u.begin(), u.begin() + static_cast<long>(k));
        Cliff right(u.begin() + static_cast<long>(k), u.end());
        t.add(left, reduce(d, right), 1);
    }
    return t;
}

LinCombo counit_left(const TensorCombo& t) {
    LinCombo r;
    for (const auto& [k, c] : t.terms)
        if (k.first.empty()) r.add(k.second, c);
    return r;
}

LinCombo product_f(const RangeMap& d, const Cliff& u, const Cliff& v) {
    require_cliff(d, u);
    require_cliff(d, v);
    const std::size_t n = u.size();
    // the fibre of r over v inside the cliffs of the right positions
    Cliff lo, hi;
    for (std::size_t i = 1; i <= v.size(); ++i) {
        const int x = v[i - 1], cap = d(n + i);
        if (x == d(i)) {
            lo.push_back(x);
            hi.push_back(cap);
        } else {
            lo.push_back(x);
            hi.push_back(x <= cap ? x : x - 1);
        }
    }
    LinCombo r;
    box(lo, hi, [&](const Cliff& w) { r.add(concat(u, w), 1); });
    return r;
}

LinCombo product_f_interval(const RangeMap& d, const Cliff& u, const Cliff& v) {
    LinCombo r;
    if (!chi(d, u, v)) return r;
    box(over(d, u, v), under(d, u, v), [&](const Cliff& w) { r.add(w, 1); });
    return r;
}

LinCombo product(const RangeMap& d, const LinCombo& x, const LinCombo& y) {
    LinCombo r;
    for (const auto& [u, a] : x.terms)
        for (const auto& [v, b] : y.terms)
            for (const auto& [w, c] : product_f(d, u, v).terms) r.add(w, a * b * c);
    return r;
}

TensorCombo coproduct(const RangeMap& d, const LinCombo& x) {
    TensorCombo t;
    for (const auto& [u, a] : x.terms)
        for (const auto& [k, c] : coproduct_f(d, u).terms) t.add(k.first, k.second, a * c);
    return t;
}

namespace {

std::vector<std::vector<Cliff>> cliffs_by_size(const RangeMap& d, std::size_t bound) {
    std::vector<std::vector<Cliff>> by(bound + 1);
    for (std::size_t n = 0; n <= bound; ++n) by[n] = enumerate(d, n);
    return by;
}

}  // namespace

std::optional<AssociativityWitness> associativity_witness(const RangeMap& d,
                                                          std::size_t size_bound) {
    if (size_bound < 3) return std::nullopt;
    auto by = cliffs_by_size(d, size_bound - 2);
    for (std::size_t total = 3; total <= size_bound; ++total)
        for (std::size_t a = 1; a + 2 <= total; ++a)
            for (std::size_t b = 1; a + b + 1 <= total; ++b) {
                const std::size_t c = total - a - b;
                for (const Cliff& u : by[a])
                    for (const Cliff& v : by[b])
                        for (const Cliff& w : by[c]) {
                            LinCombo fu = LinCombo::single(u), fv = LinCombo::single(v),
                                     fw = LinCombo::single(w);
                            LinCombo defect = product(d, product(d, fu, fv), fw) -
                                              product(d, fu, product(d, fv, fw));
                            if (!defect.is_zero()) return AssociativityWitness{u, v, w, defect};
                        }
            }
    return std::nullopt;
}

std::optional<CoassociativityWitness> coassociativity_witness(const RangeMap& d,
                                                              std::size_t size_bound) {
    for (std::size_t n = 0; n <= size_bound; ++n)
        for (const Cliff& w : enumerate(d, n)) {
            TripleCombo defect;
            auto add = [&](const TripleKey& k, const mpq_class& c) {
                mpq_class& slot = defect[k];
                slot += c;
                if (slot == 0) defect.erase(k);
            };
            for (const auto& [k, c] : coproduct_f(d, w).terms) {
                for (const auto& [kk, cc] : coproduct_f(d, k.first).terms)
                    add({kk.first, kk.second, k.second}, c * cc);
                for (const auto& [kk, cc] : coproduct_f(d, k.second).terms)
                    add({k.first, kk.first, kk.second}, -c * cc);
            }
            if (!defect.empty()) return CoassociativityWitness{w, defect};
        }
    return std::nullopt;
}

// ---------------------------------------------------------------- bases

LinCombo basis_expand(const RangeMap& d, Basis b, const Cliff& u) {
    require_cliff(d, u);
    LinCombo r;
    switch (b) {
        case Basis::F: r.add(u, 1); break;
        case Basis::E: box(u, top_cliff(d, u.size()), [&](const Cliff& w) { r.add(w, 1); }); break;
        case Basis::H: box(zero_cliff(u.size()), u, [&](const Cliff& w) { r.add(w, 1); }); break;
        case Basis::G: r.add(complement(d, u), 1); break;
    }
    return r;
}

namespace {

LinCombo to_f(const RangeMap& d, const LinCombo& x, Basis from) {
    if (from == Basis::F) return x;
    LinCombo r;
    for (const auto& [u, c] : x.terms) r = r + basis_expand(d, from, u) * c;
    return r;
}

LinCombo from_f(const RangeMap& d, const LinCombo& x, Basis to) {
    LinCombo r;
    switch (to) {
        case Basis::F: return x;
        case Basis::G:
            for (const auto& [u, c] : x.terms) r.add(complement(d, u), c);
            return r;
        case Basis::E: {
            // E_u has leading term F_u at the lexicographic bottom
            LinCombo rest = x;
            while (!rest.is_zero()) {
                auto [u, c] = *rest.terms.begin();
                r.add(u, c);
                rest = rest - basis_expand(d, Basis::E, u) * c;
            }
            return r;
        }
        case Basis::H: {
            LinCombo rest = x;
            while (!rest.is_zero()) {
                auto [u, c] = *rest.terms.rbegin();
                r.add(u, c);
                rest = rest - basis_expand(d, Basis::H, u) * c;
            }
            return r;
        }
    }
    return r;
}

}  // namespace

LinCombo basis_convert(const RangeMap& d, const LinCombo& x, Basis from, Basis to) {
    return from_f(d, to_f(d, x, from), to);
}

LinCombo product_in_basis(const RangeMap& d, Basis b, const Cliff& u, const Cliff& v) {
    LinCombo r;
    switch (b) {
        case Basis::F: return product_f(d, u, v);
        case Basis::E:
            if (chi(d, u, v)) r.add(over(d, u, v), 1);
            return r;
        case Basis::H: r.add(reduce(d, under(d, u, v)), 1); return r;
        case Basis::G:
            box(over_g(d, u, v), under_g(d, u, v), [&](const Cliff& w) { r.add(w, 1); });
            return r;
    }
    return r;
}

LinCombo product_via_f(const RangeMap& d, Basis b, const Cliff& u, const Cliff& v) {
    return from_f(d, product(d, basis_expand(d, b, u), basis_expand(d, b, v)), b);
}

// ---------------------------------------------------------------- primes

// A proper prefix of a cliff is a cliff, so any split v⫽w of u needs only the
// suffix w to be a cliff.
bool is_prime(const RangeMap& d, const Cliff& u) {
    require_cliff(d, u);
    if (u.empty()) return false;
    for (std::size_t k = 1; k < u.size(); ++k)
        if (is_cliff(d, Cliff(u.begin() + static_cast<long>(k), u.end()))) return false;
    return true;
}

bool is_prime_by_definition(const RangeMap& d, const Cliff& u) {
    require_cliff(d, u);
    if (u.empty()) return false;
    for (std::size_t k = 1; k < u.size(); ++k) {
        Cliff v(u.begin(), u.begin() + static_cast<long>(k));
        Cliff w(u.begin() + static_cast<long>(k), u.end());
        if (is_cliff(d, v) && is_cliff(d, w) && over(d, v, w) == u) return false;
    }
    return true;
}

std::vector<Cliff> enumerate_primes(const RangeMap& d, std::size_t n) {
    std::vector<Cliff> out;
    if (n == 0) return out;
    for (const Cliff& u : enumerate(d, n))
        if (is_prime(d, u)) out.push_back(u);
    return out;
}

std::vector<Cliff> prime_factorize(const RangeMap& d, const Cliff& u) {
    require_cliff(d, u);
    if (u.empty()) throw Error(ErrorKind::InvalidCliff, "the empty word has no prime factors");
    std::vector<Cliff> factors;
    Cliff rest = u;
    while (!rest.empty()) {
        for (std::size_t len = 1; len <= rest.size(); ++len) {
            Cliff suffix(rest.end() - static_cast<long>(len), rest.end());
            if (is_cliff(d, suffix)) {
                factors.push_back(suffix);
                rest.resize(rest.size() - len);
                break;
            }
        }
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

std::string monomial_text(const std::vector<Cliff>& m) {
    std::string s;
    for (const Cliff& p : m) s += "a_{" + txt(p) + "}";
    return s.empty() ? "1" : s;
}

PresentationData presentation(const RangeMap& d, std::size_t degree_bound) {
    require_valley_free(d);
    PresentationData p;
    p.type = classify(d);
    p.degree_bound = degree_bound;
    p.truncated = p.type == AlgebraType::TypeD;
    auto by = cliffs_by_size(d, degree_bound);
    p.primes.resize(degree_bound + 1);
    for (std::size_t n = 1; n <= degree_bound; ++n)
        for (const Cliff& u : by[n])
            if (is_prime(d, u)) p.primes[n].push_back(u);

    // a^u a_v with uv not a cliff. A prime v has no proper cliff suffix, so
    // the word uv fixes the split.
    std::map<Cliff, std::vector<Cliff>> candidates;  // word -> monomial
    for (std::size_t lv = 1; lv < degree_bound; ++lv)
        for (const Cliff& v : p.primes[lv])
            for (std::size_t lu = 1; lu + lv <= degree_bound; ++lu)
                for (const Cliff& u : by[lu]) {
                    Cliff w = concat(u, v);
                    if (is_cliff(d, w)) continue;
                    std::vector<Cliff> mono = prime_factorize(d, u);
                    mono.push_back(v);
                    candidates.emplace(w, mono);
                }
    std::vector<std::pair<std::size_t, std::vector<Cliff>>> kept;
    for (const auto& [w, mono] : candidates) {
        bool minimal = true;
        for (std::size_t k = 1; k < w.size() && minimal; ++k)
            if (candidates.count(Cliff(w.begin() + static_cast<long>(k), w.end()))) minimal = false;
        if (minimal) kept.emplace_back(w.size(), mono);
    }
    std::sort(kept.begin(), kept.end());
    for (auto& [n, mono] : kept) p.relation_monomials.push_back(std::move(mono));
    return p;
}

std::string PresentationData::to_string() const {
    std::ostringstream os;
    os << "type " << algebra_type_name(type) << "\n";
    os << "generators:";
    for (const auto& level : primes)
        for (const Cliff& u : level) os << " " << monomial_text({u});
    os << "\nrelations:";
    for (const auto& m : relation_monomials) os << " " << monomial_text(m);
    os << "\n";
    if (truncated)
        os << "(truncation of an infinitely generated ideal at degree " << degree_bound << ")\n";
    return os.str();
}

std::string PresentationData::to_json() const {
    nlohmann::json j;
    j["type"] = algebra_type_name(type);
    j["degree_bound"] = degree_bound;
    j["truncated"] = truncated;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& level : primes)
        for (const Cliff& u : level) gens.push_back(to_text(u));
    j["generators"] = gens;
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& m : relation_monomials) {
        nlohmann::json mono = nlohmann::json::array();
        for (const Cliff& u : m) mono.push_back(to_text(u));
        rels.push_back(mono);
    }
    j["relations"] = rels;
    return j.dump();
}

// ---------------------------------------------------------------- quotients

LinCombo quotient_product(const GradedFamily& s, const Cliff& u, const Cliff& v) {
    s.require(Flag::ClosedByPrefix);
    s.require(Flag::ClosedBySuffixReduction);
    for (const Cliff* w : {&u, &v})
        if (!s.contains(*w)) throw Error(ErrorKind::InvalidCliff, txt(*w) + " is not in " + s.name);
    LinCombo r;
    for (const auto& [w, c] : product_f(s.delta, u, v).terms)
        if (s.membership(w)) r.add(w, c);
    return r;
}

IntervalSupport interval_support(const GradedFamily& s, const Cliff& u, const Cliff& v) {
    IntervalSupport out;
    out.support = quotient_product(s, u, v).support();
    if (out.support.empty()) return out;
    std::vector<Cliff> mins, maxs;
    for (const Cliff& w : out.support) {
        bool is_min = true, is_max = true;
        for (const Cliff& x : out.support) {
            if (x == w) continue;
            if (leq(x, w)) is_min = false;
            if (leq(w, x)) is_max = false;
        }
        if (is_min) mins.push_back(w);
        if (is_max) maxs.push_back(w);
    }
    if (mins.size() != 1 || maxs.size() != 1) {
        out.is_interval = false;
        return out;
    }
    std::size_t inside = 0;
    box(mins[0], maxs[0], [&](const Cliff& w) { inside += s.membership(w) ? 1 : 0; });
    out.is_interval = inside == out.support.size();
    if (out.is_interval) {
        out.min = mins[0];
        out.max = maxs[0];
    }
    return out;
}

IntervalConditionReport interval_condition_check(const GradedFamily& s, std::size_t size_bound) {
    s.require(Flag::ClosedByPrefix);
    s.require(Flag::ClosedBySuffixReduction);
    IntervalConditionReport rep;
    std::vector<std::vector<Cliff>> by(size_bound + 1);
    for (std::size_t n = 1; n < size_bound; ++n) by[n] = family_elements(s, n);
    for (std::size_t a = 1; a < size_bound; ++a)
        for (std::size_t b = 1; a + b <= size_bound; ++b)
            for (const Cliff& u : by[a])
                for (const Cliff& v : by[b]) {
                    ++rep.pairs;
                    if (!interval_support(s, u, v).is_interval) {
                        rep.pass = false;
                        if (rep.failures.size() < 20)
                            rep.failures.push_back("F_{" + txt(u) + "} F_{" + txt(v) + "}");
                    }
                }
    return rep;
}

// ---------------------------------------------------------------- ranks

std::size_t exact_rank(std::vector<std::map<std::size_t, mpz_class>> rows) {
    std::map<std::size_t, std::map<std::size_t, mpz_class>> pivots;  // leading column -> row
    auto primitive = [](std::map<std::size_t, mpz_class>& r) {
        mpz_class g = 0;
        for (const auto& [k, x] : r) g = gcd(g, x);
        if (g > 1)
            for (auto& [k, x] : r) x /= g;
        if (!r.empty() && r.begin()->second < 0)
            for (auto& [k, x] : r) x = -x;
    };
    for (auto& r : rows) {
        for (auto it = r.begin(); it != r.end();)
            it = it->second == 0 ? r.erase(it) : std::next(it);
        primitive(r);
        while (!r.empty()) {
            auto p = pivots.find(r.begin()->first);
            if (p == pivots.end()) break;
            const mpz_class a = p->second.begin()->second, b = r.begin()->second;
            const mpz_class g = gcd(a, b), sa = a / g, sb = b / g;
            for (auto& [k, x] : r) x *= sa;
            for (const auto& [k, y] : p->second) {
                mpz_class& slot = r[k];
                slot -= sb * y;
                if (slot == 0) r.erase(k);
            }
            primitive(r);
        }
        if (!r.empty()) pivots.emplace(r.begin()->first, std::move(r));
    }
    return pivots.size();
}

namespace {

std::size_t products_rank(const RangeMap& d, const GradedFamily* s, std::size_t n,
                          const std::vector<std::vector<Cliff>>& elems) {
    std::map<Cliff, std::size_t> col;
    for (const Cliff& w : elems[n]) col.emplace(w, col.size());
    std::set<std::map<std::size_t, mpz_class>> rows;
    for (std::size_t k = 1; k < n; ++k)
        for (const Cliff& u : elems[k])
            for (const Cliff& v : elems[n - k]) {
                LinCombo p = s ? quotient_product(*s, u, v) : product_f(d, u, v);
                if (p.is_zero()) continue;
                std::map<std::size_t, mpz_class> row;
                for (const auto& [w, c] : p.terms) row.emplace(col.at(w), c.get_num());
                rows.insert(std::move(row));
            }
    return exact_rank({rows.begin(), rows.end()});
}

// Cl_+ is spanned by the E_w and E_u E_v = chi E_{u⫽v}, so its square is
// spanned by E_w for w not prime; the quotient map sends E_w to the sum of
// F_x over x in S above w. When every such up-set has a least element m(w),
// distinct m(w) give rows with distinct lexicographic leading columns, so
// the rank is the number of distinct m(w).
std::size_t decomposables_rank(const RangeMap& d, const GradedFamily* s, std::size_t n) {
    std::set<Cliff> lows;
    for (const Cliff& w : enumerate(d, n)) {
        if (is_prime(d, w)) continue;
        lows.insert(s ? increment(*s, w) : w);
    }
    return lows.size();
}

}  // namespace

std::vector<std::size_t> generator_dimensions(const RangeMap& d, const GradedFamily* s,
                                              std::size_t max_degree, RankMethod method) {
    require_valley_free(d);
    if (s && s->delta != d) throw Error(ErrorKind::UnsupportedRangeMap, "family over another map");
    if (s) {
        s->require(Flag::ClosedByPrefix);
        s->require(Flag::ClosedBySuffixReduction);
    }
    const bool fast = method == RankMethod::Decomposables &&
                      (!s || (s->has(Flag::MaxExtendable) && s->has(Flag::MeetStable)));
    std::vector<std::vector<Cliff>> elems(max_degree + 1);
    for (std::size_t n = 0; n <= max_degree; ++n)
        elems[n] = s ? family_elements(*s, n) : enumerate(d, n);
    std::vector<std::size_t> dims(max_degree + 1, 0);
    for (std::size_t n = 1; n <= max_degree; ++n) {
        const std::size_t rank = fast ? decomposables_rank(d, s, n) : products_rank(d, s, n, elems);
        dims[n] = elems[n].size() - rank;
    }
    return dims;
}

std::vector<mpz_class> free_hilbert_series(const std::vector<std::size_t>& g) {
    std::vector<mpz_class> h(g.size(), 0);
    if (h.empty()) return h;
    h[0] = 1;
    for (std::size_t n = 1; n < g.size(); ++n)
        for (std::size_t k = 1; k <= n; ++k) h[n] += mpz_class(static_cast<unsigned long>(g[k])) * h[n - k];
    return h;
}

}  // namespace cliffs
