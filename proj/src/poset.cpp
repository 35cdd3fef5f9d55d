#include "cliffs/poset.hpp"

#include <algorithm>
#include <numeric>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "cliffs/error.hpp"

namespace cliffs {

namespace {

using Bits = std::vector<std::uint64_t>;

inline bool test_bit(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(Bits& b, int i) { b[i >> 6] |= std::uint64_t(1) << (i & 63); }

bool componentwise_leq(const Cliff& a, const Cliff& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Strict upper sets given in a linear-extension-compatible order reduce to
// covers: v covers u iff no earlier cover c of u lies below v.
std::vector<std::pair<int, int>> reduce_to_covers(
    const std::vector<std::vector<int>>& strict_up,
    const std::function<bool(int, int)>& less) {
    std::vector<std::pair<int, int>> covers;
    for (std::size_t u = 0; u < strict_up.size(); ++u) {
        std::vector<int> found;
        for (int v : strict_up[u]) {
            bool cover = true;
            for (int c : found)
                if (less(c, v)) {
                    cover = false;
                    break;
                }
            if (cover) found.push_back(v);
        }
        for (int v : found) covers.emplace_back(static_cast<int>(u), v);
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

}  // namespace

FinitePoset FinitePoset::from_covers(std::vector<Cliff> elements,
                                     const std::vector<std::pair<Cliff, Cliff>>& covers) {
    FinitePoset p;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    p.elements_ = std::move(elements);
    for (std::size_t i = 0; i < p.elements_.size(); ++i) p.index_[p.elements_[i]] = static_cast<int>(i);
    for (const auto& [a, b] : covers) {
        int ia = p.index_of(a), ib = p.index_of(b);
        if (ia < 0 || ib < 0) throw Error(ErrorKind::DomainViolation, "cover on unknown element");
        p.covers_.emplace_back(ia, ib);
    }
    std::sort(p.covers_.begin(), p.covers_.end());
    p.covers_.erase(std::unique(p.covers_.begin(), p.covers_.end()), p.covers_.end());
    p.finish();
    return p;
}

FinitePoset FinitePoset::componentwise(std::vector<Cliff> elements) {
    FinitePoset p;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    p.elements_ = std::move(elements);
    const auto& el = p.elements_;
    std::size_t n = el.size();
    for (std::size_t i = 0; i < n; ++i) p.index_[el[i]] = static_cast<int>(i);
    std::vector<long> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = weight(el[i]);
    std::vector<int> by_weight(n);
    std::iota(by_weight.begin(), by_weight.end(), 0);
    std::stable_sort(by_weight.begin(), by_weight.end(), [&](int a, int b) { return w[a] < w[b]; });
    std::vector<std::vector<int>> strict_up(n);
    for (std::size_t u = 0; u < n; ++u)
        for (int v : by_weight)
            if (w[v] > w[u] && componentwise_leq(el[u], el[v])) strict_up[u].push_back(v);
    p.covers_ = reduce_to_covers(strict_up, [&](int a, int b) {
        return w[a] < w[b] && componentwise_leq(el[a], el[b]);
    });
    p.finish();
    return p;
}

FinitePoset FinitePoset::from_relation(std::vector<Cliff> elements,
                                       const std::function<bool(const Cliff&, const Cliff&)>& leq) {
    FinitePoset p;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    p.elements_ = std::move(elements);
    const auto& el = p.elements_;
    std::size_t n = el.size();
    for (std::size_t i = 0; i < n; ++i) p.index_[el[i]] = static_cast<int>(i);
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    std::vector<int> below_count(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && leq(el[a], el[b])) {
                rel[a][b] = 1;
                ++below_count[b];
            }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return below_count[a] < below_count[b]; });
    std::vector<std::vector<int>> strict_up(n);
    for (std::size_t u = 0; u < n; ++u)
        for (int v : order)
            if (rel[u][v]) strict_up[u].push_back(v);
    p.covers_ = reduce_to_covers(strict_up, [&](int a, int b) { return rel[a][b] != 0; });
    p.finish();
    return p;
}

void FinitePoset::finish() {
    std::size_t n = elements_.size();
    up_.assign(n, {});
    down_.assign(n, {});
    for (auto [a, b] : covers_) {
        up_[a].push_back(b);
        down_[b].push_back(a);
    }
    // Kahn's algorithm; rank is the longest chain from a minimal element.
    ranks_.assign(n, 0);
    std::vector<int> indeg(n);
    std::vector<int> queue;
    for (std::size_t i = 0; i < n; ++i) {
        indeg[i] = static_cast<int>(down_[i].size());
        if (indeg[i] == 0) queue.push_back(static_cast<int>(i));
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int a = queue[h];
        for (int b : up_[a]) {
            ranks_[b] = std::max(ranks_[b], ranks_[a] + 1);
            if (--indeg[b] == 0) queue.push_back(b);
        }
    }
    if (queue.size() != n) throw Error(ErrorKind::DomainViolation, "cover relation has a cycle");
    linext_.resize(n);
    std::iota(linext_.begin(), linext_.end(), 0);
    std::stable_sort(linext_.begin(), linext_.end(),
                     [&](int a, int b) { return ranks_[a] < ranks_[b]; });
    below_.clear();
}

void FinitePoset::ensure_closure() const {
    if (!below_.empty() || elements_.empty()) return;
    std::size_t n = elements_.size(), words = (n + 63) / 64;
    below_.assign(n, Bits(words, 0));
    for (int b : linext_) {
        set_bit(below_[b], b);
        for (int a : down_[b])
            for (std::size_t k = 0; k < words; ++k) below_[b][k] |= below_[a][k];
    }
}

int FinitePoset::index_of(const Cliff& u) const {
    auto it = index_.find(u);
    return it == index_.end() ? -1 : it->second;
}

bool FinitePoset::leq(int a, int b) const {
    ensure_closure();
    return test_bit(below_[b], a);
}

bool FinitePoset::leq(const Cliff& a, const Cliff& b) const {
    int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0) throw Error(ErrorKind::DomainViolation, "element not in poset");
    return leq(ia, ib);
}

const std::vector<int>& FinitePoset::linear_extension() const { return linext_; }

int FinitePoset::rank(int i) const { return ranks_[i]; }

std::vector<int> FinitePoset::minimal() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (down_[i].empty()) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> FinitePoset::maximal() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (up_[i].empty()) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> FinitePoset::interval(int a, int b) const {
    std::vector<int> out;
    if (!leq(a, b)) return out;
    for (std::size_t z = 0; z < size(); ++z)
        if (leq(a, static_cast<int>(z)) && leq(static_cast<int>(z), b)) out.push_back(static_cast<int>(z));
    return out;
}

std::optional<int> FinitePoset::meet(int a, int b) const {
    ensure_closure();
    std::size_t words = below_[a].size();
    Bits common(words);
    for (std::size_t k = 0; k < words; ++k) common[k] = below_[a][k] & below_[b][k];
    int best = -1;
    for (std::size_t z = 0; z < size(); ++z)
        if (test_bit(common, static_cast<int>(z)) && (best < 0 || ranks_[z] > ranks_[best]))
            best = static_cast<int>(z);
    if (best < 0) return std::nullopt;
    for (std::size_t k = 0; k < words; ++k)
        if ((common[k] & ~below_[best][k]) != 0) return std::nullopt;
    return best;
}

std::optional<int> FinitePoset::join(int a, int b) const {
    ensure_closure();
    std::optional<int> best;
    std::vector<int> uppers;
    for (std::size_t z = 0; z < size(); ++z)
        if (leq(a, static_cast<int>(z)) && leq(b, static_cast<int>(z))) uppers.push_back(static_cast<int>(z));
    int cand = -1;
    for (int z : uppers)
        if (cand < 0 || ranks_[z] < ranks_[cand]) cand = z;
    if (cand < 0) return std::nullopt;
    for (int z : uppers)
        if (!leq(cand, z)) return std::nullopt;
    return cand;
}

bool FinitePoset::is_lattice() const {
    if (size() == 0) return false;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = a + 1; b < size(); ++b)
            if (!meet(static_cast<int>(a), static_cast<int>(b)) ||
                !join(static_cast<int>(a), static_cast<int>(b)))
                return false;
    return size() == 1 || (minimal().size() == 1 && maximal().size() == 1);
}

std::string FinitePoset::to_dot(const std::string& name) const {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n";
    std::map<long, std::vector<int>> by_weight;
    for (std::size_t i = 0; i < size(); ++i) by_weight[weight(elements_[i])].push_back(static_cast<int>(i));
    for (const auto& [w, ids] : by_weight) {
        os << "  { rank=same;";
        for (int i : ids) os << " \"" << to_text(elements_[i]) << "\";";
        os << " }\n";
    }
    for (auto [a, b] : covers_)
        os << "  \"" << to_text(elements_[a]) << "\" -> \"" << to_text(elements_[b]) << "\";\n";
    os << "}\n";
    return os.str();
}

std::string FinitePoset::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["elements"] = nlohmann::json::array();
    for (const Cliff& u : elements_) j["elements"].push_back(to_text(u));
    j["covers"] = nlohmann::json::array();
    for (auto [a, b] : covers_) j["covers"].push_back({a, b});
    return j.dump();
}

long mobius(const FinitePoset& p, int x, int y) {
    if (!p.leq(x, y)) throw Error(ErrorKind::NotComparable, "mobius needs x <= y");
    std::map<int, long> mu;
    for (int z : p.linear_extension()) {
        if (!p.leq(x, z) || !p.leq(z, y)) continue;
        if (z == x) {
            mu[z] = 1;
            continue;
        }
        long s = 0;
        for (const auto& [w, val] : mu)
            if (p.leq(w, z)) s += val;
        mu[z] = -s;
    }
    return mu[y];
}

long mobius(const FinitePoset& p, const Cliff& x, const Cliff& y) {
    int ix = p.index_of(x), iy = p.index_of(y);
    if (ix < 0 || iy < 0) throw Error(ErrorKind::DomainViolation, "element not in poset");
    return mobius(p, ix, iy);
}

std::vector<Cliff> irreducibles(const FinitePoset& p, IrreducibleKind kind) {
    std::vector<Cliff> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::size_t deg = kind == IrreducibleKind::Join ? p.lower_covers(static_cast<int>(i)).size()
                                                        : p.upper_covers(static_cast<int>(i)).size();
        if (deg == 1) out.push_back(p.element(static_cast<int>(i)));
    }
    return out;
}

namespace {

// Iterated neighbourhood refinement of (rank, degrees) into class ids shared by p and q.
std::pair<std::vector<int>, std::vector<int>> refine(const FinitePoset& p, const FinitePoset& q) {
    auto initial = [](const FinitePoset& P) {
        std::vector<std::vector<long>> sig(P.size());
        for (std::size_t i = 0; i < P.size(); ++i) {
            int ii = static_cast<int>(i);
            sig[i] = {P.rank(ii), static_cast<long>(P.lower_covers(ii).size()),
                      static_cast<long>(P.upper_covers(ii).size())};
        }
        return sig;
    };
    auto sp = initial(p), sq = initial(q);
    std::vector<int> cp, cq;
    std::size_t classes = 0;
    for (int round = 0; round < 64; ++round) {
        std::map<std::vector<long>, int> ids;
        for (auto& s : sp) ids.emplace(s, 0);
        for (auto& s : sq) ids.emplace(s, 0);
        int k = 0;
        for (auto& [s, id] : ids) id = k++;
        cp.assign(p.size(), 0);
        cq.assign(q.size(), 0);
        for (std::size_t i = 0; i < p.size(); ++i) cp[i] = ids[sp[i]];
        for (std::size_t i = 0; i < q.size(); ++i) cq[i] = ids[sq[i]];
        if (ids.size() == classes) break;
        classes = ids.size();
        auto next = [](const FinitePoset& P, const std::vector<int>& c) {
            std::vector<std::vector<long>> sig(P.size());
            for (std::size_t i = 0; i < P.size(); ++i) {
                int ii = static_cast<int>(i);
                std::vector<long> lo, hi;
                for (int a : P.lower_covers(ii)) lo.push_back(c[a]);
                for (int b : P.upper_covers(ii)) hi.push_back(c[b]);
                std::sort(lo.begin(), lo.end());
                std::sort(hi.begin(), hi.end());
                sig[i] = {c[i], -1};
                sig[i].insert(sig[i].end(), lo.begin(), lo.end());
                sig[i].push_back(-2);
                sig[i].insert(sig[i].end(), hi.begin(), hi.end());
            }
            return sig;
        };
        sp = next(p, cp);
        sq = next(q, cq);
    }
    return {cp, cq};
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphic(const FinitePoset& p, const FinitePoset& q,
                                                 std::size_t max_size) {
    if (p.size() > max_size || q.size() > max_size)
        throw Error(ErrorKind::TooLarge, "poset too large for isomorphism search");
    if (p.size() != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
    auto [cp, cq] = refine(p, q);
    std::vector<int> hp(cp), hq(cq);
    std::sort(hp.begin(), hp.end());
    std::sort(hq.begin(), hq.end());
    if (hp != hq) return std::nullopt;

    std::map<int, std::vector<int>> bucket;
    for (std::size_t i = 0; i < q.size(); ++i) bucket[cq[i]].push_back(static_cast<int>(i));
    const std::vector<int>& order = p.linear_extension();
    std::vector<int> f(p.size(), -1);
    std::vector<char> used(q.size(), 0);

    std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
        if (k == order.size()) return true;
        int a = order[k];
        for (int b : bucket[cp[a]]) {
            if (used[b]) continue;
            bool ok = true;
            for (int lo : p.lower_covers(a)) {
                const auto& qd = q.lower_covers(b);
                if (std::find(qd.begin(), qd.end(), f[lo]) == qd.end()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            f[a] = b;
            used[b] = 1;
            if (go(k + 1)) return true;
            used[b] = 0;
            f[a] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return f;
}

namespace {

std::optional<std::vector<int>> bijection(const FinitePoset& p, const FinitePoset& q,
                                          const std::function<Cliff(const Cliff&)>& map) {
    if (p.size() != q.size()) return std::nullopt;
    std::vector<int> f(p.size());
    std::vector<char> hit(q.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        int j = q.index_of(map(p.element(static_cast<int>(i))));
        if (j < 0 || hit[j]) return std::nullopt;
        hit[j] = 1;
        f[i] = j;
    }
    return f;
}

}  // namespace

bool is_order_extension(const FinitePoset& p, const FinitePoset& q,
                        const std::function<Cliff(const Cliff&)>& map) {
    auto f = bijection(p, q, map);
    if (!f) return false;
    for (auto [a, b] : p.covers())
        if (!q.leq((*f)[a], (*f)[b])) return false;
    return true;
}

bool is_isomorphism(const FinitePoset& p, const FinitePoset& q,
                    const std::function<Cliff(const Cliff&)>& map) {
    auto f = bijection(p, q, map);
    if (!f || p.covers().size() != q.covers().size()) return false;
    std::set<std::pair<int, int>> qc(q.covers().begin(), q.covers().end());
    for (auto [a, b] : p.covers())
        if (!qc.count({(*f)[a], (*f)[b]})) return false;
    return true;
}

}  // namespace cliffs
