#include "cliffs/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cliffs/error.hpp"

namespace cliffs {

namespace {

void require_same_size(const Cliff& u, const Cliff& v) {
    if (u.size() != v.size())
        throw Error(ErrorKind::SizeMismatch, to_text(u) + " and " + to_text(v));
}

}  // namespace

bool leq(const Cliff& u, const Cliff& v) {
    require_same_size(u, v);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] > v[i]) return false;
    return true;
}

bool covers(const Cliff& u, const Cliff& v) {
    require_same_size(u, v);
    int diff = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (v[i] == u[i]) continue;
        if (v[i] != u[i] + 1) return false;
        ++diff;
    }
    return diff == 1;
}

Cliff meet(const RangeMap& d, const Cliff& u, const Cliff& v) {
    require_same_size(u, v);
    require_cliff(d, u);
    require_cliff(d, v);
    Cliff w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = std::min(u[i], v[i]);
    return w;
}

Cliff join(const RangeMap& d, const Cliff& u, const Cliff& v) {
    require_same_size(u, v);
    require_cliff(d, u);
    require_cliff(d, v);
    Cliff w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = std::max(u[i], v[i]);
    return w;
}

Cliff up(const Cliff& u, std::size_t i) {
    Cliff v = u;
    ++v[i - 1];
    return v;
}

FinitePoset cliff_poset(const RangeMap& d, std::size_t n) {
    std::vector<Cliff> els = enumerate(d, n);
    std::vector<std::pair<Cliff, Cliff>> cov;
    for (const Cliff& u : els)
        for (std::size_t i = 1; i <= n; ++i)
            if (u[i - 1] < d(i)) cov.emplace_back(u, up(u, i));
    return FinitePoset::from_covers(std::move(els), cov);
}

mpz_class saturated_chain_count(const RangeMap& d, std::size_t n) {
    unsigned long total = 0;
    mpz_class denom = 1, f;
    for (std::size_t i = 1; i <= n; ++i) {
        total += d(i);
        mpz_fac_ui(f.get_mpz_t(), d(i));
        denom *= f;
    }
    mpz_fac_ui(f.get_mpz_t(), total);
    return f / denom;
}

std::vector<std::vector<Cliff>> enumerate_saturated_chains(const RangeMap& d, std::size_t n,
                                                           const mpz_class& cap) {
    mpz_class count = saturated_chain_count(d, n);
    if (count > cap)
        throw Error(ErrorKind::CapExceeded, count.get_str() + " chains exceed the cap " + cap.get_str());
    std::vector<std::vector<Cliff>> out;
    Cliff top = top_cliff(d, n);
    std::vector<Cliff> chain{zero_cliff(n)};
    std::function<void()> rec = [&]() {
        Cliff cur = chain.back();
        if (cur == top) {
            out.push_back(chain);
            return;
        }
        for (std::size_t i = 1; i <= n; ++i) {
            if (cur[i - 1] >= top[i - 1]) continue;
            chain.push_back(up(cur, i));
            rec();
            chain.pop_back();
        }
    };
    rec();
    return out;
}

mpz_class interval_count(const RangeMap& d, std::size_t n) {
    mpz_class c = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        long k = d(i) + 2;
        c *= k * (k - 1) / 2;
    }
    return c;
}

void PolynomialXY::add(int i, int j, const mpz_class& c) {
    if (c == 0) return;
    auto& slot = terms[{i, j}];
    slot += c;
    if (slot == 0) terms.erase({i, j});
}

PolynomialXY PolynomialXY::operator*(const PolynomialXY& o) const {
    PolynomialXY r;
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) r.add(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
}

std::string PolynomialXY::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Higher total degree first, then by the power of x.
    std::vector<std::pair<std::pair<int, int>, mpz_class>> v(terms.begin(), terms.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    for (const auto& [e, c] : v) {
        if (!first) os << " + ";
        first = false;
        bool mono = e.first || e.second;
        if (c != 1 || !mono) os << c.get_str();
        if (e.first) os << "x" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second) os << "y" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
    }
    return os.str();
}

PolynomialXY degree_polynomial(const RangeMap& d, std::size_t n) {
    PolynomialXY p;
    p.add(0, 0, 1);
    for (std::size_t i = 1; i <= n; ++i) {
        if (d(i) == 0) continue;
        PolynomialXY f;
        f.add(1, 0, 1);
        f.add(0, 1, 1);
        f.add(1, 1, d(i) - 1);
        p = p * f;
    }
    return p;
}

PolynomialXY degree_polynomial(const FinitePoset& p) {
    PolynomialXY r;
    for (std::size_t i = 0; i < p.size(); ++i)
        r.add(static_cast<int>(p.lower_covers(static_cast<int>(i)).size()),
              static_cast<int>(p.upper_covers(static_cast<int>(i)).size()), 1);
    return r;
}

std::vector<mpz_class> h_polynomial(const PolynomialXY& p) {
    std::vector<mpz_class> h;
    for (const auto& [e, c] : p.terms) {
        if (h.size() <= static_cast<std::size_t>(e.second)) h.resize(e.second + 1, 0);
        h[e.second] += c;
    }
    return h;
}

std::vector<mpz_class> f_polynomial(const PolynomialXY& p) {
    std::vector<mpz_class> h = h_polynomial(p), f(h.size(), 0);
    // sum_j h_j (1 + y)^j
    for (std::size_t j = 0; j < h.size(); ++j) {
        mpz_class b = 1;
        for (std::size_t k = 0; k <= j; ++k) {
            f[k] += h[j] * b;
            b = b * static_cast<unsigned long>(j - k) / static_cast<unsigned long>(k + 1);
        }
    }
    return f;
}

Cliff IntervalIsomorphism::operator()(const Cliff& w) const {
    Cliff r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r[i] = w[i] - lower[i];
    return r;
}

IntervalIsomorphism interval_isomorphism(const RangeMap& d, const Cliff& u, const Cliff& v) {
    require_cliff(d, u);
    require_cliff(d, v);
    if (!leq(u, v)) throw Error(ErrorKind::NotComparable, to_text(u) + " is not below " + to_text(v));
    std::size_t n = u.size();
    std::vector<int> prefix(n);
    for (std::size_t i = 0; i < n; ++i) prefix[i] = v[i] - u[i];
    const auto& old = d.prefix();
    for (std::size_t i = n; i < old.size(); ++i) prefix.push_back(old[i]);
    if (d.is_affine()) return {RangeMap::affine(d.slope(), prefix), u};
    std::vector<int> period = d.period();
    if (n > old.size()) {
        std::size_t shift = (n - old.size()) % period.size();
        std::rotate(period.begin(), period.begin() + shift, period.end());
    }
    return {RangeMap::periodic(prefix, period), u};
}

std::vector<Cliff> bruhat_covers(const RangeMap& d, const Cliff& u) {
    IncreasingTree t = tree_of(d, u);
    std::vector<Cliff> out;
    for (std::size_t i = 1; i <= u.size(); ++i) {
        if (u[i - 1] + 1 > d(i)) continue;
        const auto& ch = t.nodes[i - 1].children;
        bool ok = true;
        for (std::size_t s = 1; s < ch.size(); ++s)
            if (ch[s] >= 0) ok = false;
        if (ok) out.push_back(up(u, i));
    }
    std::sort(out.begin(), out.end());
    return out;
}

FinitePoset bruhat_poset(const RangeMap& d, std::size_t n) {
    std::vector<Cliff> els = enumerate(d, n);
    std::vector<std::pair<Cliff, Cliff>> cov;
    // Every relation raises the weight by one, so the relation is its own
    // transitive reduction.
    for (const Cliff& u : els)
        for (const Cliff& v : bruhat_covers(d, u)) cov.emplace_back(u, v);
    return FinitePoset::from_covers(std::move(els), cov);
}

namespace {

std::vector<std::pair<int, int>> coinversions(const Cliff& s) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[j] < s[i]) out.emplace_back(s[j], s[i]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

FinitePoset weak_order(std::size_t n) {
    Cliff s(n);
    std::iota(s.begin(), s.end(), 1);
    std::vector<Cliff> perms;
    do perms.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return FinitePoset::from_relation(perms, [](const Cliff& a, const Cliff& b) {
        auto ca = coinversions(a), cb = coinversions(b);
        return std::includes(cb.begin(), cb.end(), ca.begin(), ca.end());
    });
}

}  // namespace cliffs
