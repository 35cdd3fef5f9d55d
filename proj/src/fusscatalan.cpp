#include "cliffs/fusscatalan.hpp"

#include <algorithm>

#include "cliffs/error.hpp"

namespace cliffs {

bool is_avalanche(const RangeMap& d, const Cliff& u) {
    if (!is_cliff(d, u)) return false;
    long w = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        w += u[i];
        if (w > d(i + 1)) return false;
    }
    return true;
}

bool is_hill(const RangeMap& d, const Cliff& u) {
    if (!is_cliff(d, u)) return false;
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i - 1] > u[i]) return false;
    return true;
}

bool is_canyon(const RangeMap& d, const Cliff& u) {
    if (!is_cliff(d, u)) return false;
    // 0-based: u[i-j] <= u[i] - j for 1 <= j <= min(u[i], i)
    for (std::size_t i = 0; i < u.size(); ++i) {
        const int lim = std::min<int>(u[i], static_cast<int>(i));
        for (int j = 1; j <= lim; ++j)
            if (u[i - j] > u[i] - j) return false;
    }
    return true;
}

namespace {

bool is_zero_map(const RangeMapProperties& p, const RangeMap& d) {
    // weakly increasing and rooted with no ascent means constant 0
    return p.weakly_increasing && !p.has_ascent && d(1) == 0;
}

}  // namespace

GradedFamily av(const RangeMap& d) {
    GradedFamily s;
    s.name = "Av";
    s.delta = d;
    s.membership = [d](const Cliff& u) { return is_avalanche(d, u); };
    s.flags = {Flag::ClosedByPrefix};
    RangeMapProperties p = properties(d);
    if (p.weakly_increasing) {
        s.flags.insert({Flag::MinExtendable, Flag::Straight, Flag::Coated});
        if (is_zero_map(p, d)) s.flags = std::set<Flag>(all_flags().begin(), all_flags().end());
    }
    return s;
}

GradedFamily hi(const RangeMap& d) {
    GradedFamily s;
    s.name = "Hi";
    s.delta = d;
    s.membership = [d](const Cliff& u) { return is_hill(d, u); };
    s.flags = {Flag::ClosedByPrefix};
    RangeMapProperties p = properties(d);
    if (p.weakly_increasing) {
        s.flags.insert({Flag::MaxExtendable, Flag::Spread, Flag::Straight, Flag::Coated,
                        Flag::Nested, Flag::JoinStable, Flag::MeetStable,
                        Flag::ClosedBySuffixReduction});
        if (is_zero_map(p, d)) s.flags.insert(Flag::MinExtendable);
    }
    return s;
}

GradedFamily ca(const RangeMap& d) {
    GradedFamily s;
    s.name = "Ca";
    s.delta = d;
    s.membership = [d](const Cliff& u) { return is_canyon(d, u); };
    s.flags = {Flag::ClosedByPrefix, Flag::MinExtendable};
    RangeMapProperties p = properties(d);
    if (p.increasing) {
        s.flags.insert({Flag::MaxExtendable, Flag::Spread, Flag::Straight, Flag::Coated,
                        Flag::Nested, Flag::MeetStable});
        // join stability and suffix reduction are only established for m
        if (d.is_affine() && d.prefix().empty())
            s.flags.insert({Flag::JoinStable, Flag::ClosedBySuffixReduction});
    }
    return s;
}

GradedFamily family_by_name(const std::string& name, const RangeMap& d) {
    if (name == "cl") return cliff_family(d);
    if (name == "av") return av(d);
    if (name == "hi") return hi(d);
    if (name == "ca") return ca(d);
    throw Error(ErrorKind::Parse, "unknown family '" + name + "' (expected cl, av, hi or ca)");
}

mpz_class cat(int m, int n) {
    if (m < 0 || n < 0) throw Error(ErrorKind::DomainViolation, "cat needs m, n >= 0");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m * n + n),
                 static_cast<unsigned long>(n));
    return b / (m * n + 1);
}

mpz_class tcat(int m, int n) {
    if (m < 0 || n < 1) throw Error(ErrorKind::DomainViolation, "tcat needs m >= 0 and n >= 1");
    long top = static_cast<long>(n) * (m + 1) - 2;
    if (top < 0) return 1;  // m = 0, n = 1
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(n - 1));
    return b / n;
}

std::size_t DyckPath::size() const {
    return static_cast<std::size_t>(std::count(steps.begin(), steps.end(), true));
}

std::string DyckPath::to_string() const {
    std::string s;
    for (bool b : steps) s += b ? 'U' : 'D';
    return s;
}

DyckPath DyckPath::parse(int m, const std::string& text) {
    DyckPath p;
    p.m = m;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == 'U' || c == 'u')
            p.steps.push_back(true);
        else if (c == 'D' || c == 'd')
            p.steps.push_back(false);
        else
            throw Error(ErrorKind::Parse,
                        "unexpected '" + std::string(1, c) + "' at position " + std::to_string(i));
    }
    validate(p);
    return p;
}

void validate(const DyckPath& p) {
    if (p.m < 0) throw Error(ErrorKind::InvalidPath, "negative parameter");
    long h = 0;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        h += p.steps[i] ? p.m : -1;
        if (h < 0)
            throw Error(ErrorKind::InvalidPath,
                        "path goes below the axis at step " + std::to_string(i + 1));
    }
    if (h != 0) throw Error(ErrorKind::InvalidPath, "path does not end on the axis");
}

Cliff dyck_to_hill(const DyckPath& p) {
    validate(p);
    Cliff u;
    int downs = 0;
    for (bool b : p.steps) {
        if (b)
            u.push_back(downs);
        else
            ++downs;
    }
    return u;
}

DyckPath hill_to_dyck(int m, const Cliff& u) {
    if (m < 0 || !is_hill(RangeMap::affine(m), u))
        throw Error(ErrorKind::InvalidCliff, to_text(u) + " is not an m-hill");
    DyckPath p;
    p.m = m;
    int prev = 0;
    for (int a : u) {
        p.steps.insert(p.steps.end(), a - prev, false);
        p.steps.push_back(true);
        prev = a;
    }
    p.steps.insert(p.steps.end(), static_cast<long>(m) * u.size() - prev, false);
    return p;
}

std::vector<DyckPath> dyck_paths(int m, std::size_t n) {
    std::vector<DyckPath> out;
    for (const Cliff& u : family_elements(hi(RangeMap::affine(m)), n))
        out.push_back(hill_to_dyck(m, u));
    return out;
}

const char* pair_class_name(PairClass c) {
    switch (c) {
        case PairClass::Independent: return "independent";
        case PairClass::Hinded: return "hinded";
        case PairClass::Dominates: return "dominates";
    }
    return "?";
}

PairClass classify_pair(const Cliff& u, std::size_t i, std::size_t j) {
    if (i < 1 || i >= j || j > u.size())
        throw Error(ErrorKind::IndexOutOfRange, "need 1 <= i < j <= " + std::to_string(u.size()));
    const long alpha = static_cast<long>(u[j - 1]) - static_cast<long>(j - i);
    if (alpha < 0) return PairClass::Independent;
    if (alpha <= u[i - 1] - 1) return PairClass::Hinded;
    return PairClass::Dominates;
}

Cliff dominance_erase(const Cliff& u) {
    Cliff w = u;
    for (std::size_t i = 1; i <= u.size(); ++i)
        for (std::size_t j = i + 1; j <= u.size(); ++j)
            if (classify_pair(u, i, j) == PairClass::Dominates) {
                w[i - 1] = 0;
                break;
            }
    return w;
}

std::vector<int> canyon_followers(const RangeMap& d, const Cliff& u) {
    if (!is_canyon(d, u)) throw Error(ErrorKind::InvalidCliff, to_text(u) + " is not a canyon");
    const long n = static_cast<long>(u.size());
    const int top = d(u.size() + 1);
    std::vector<bool> keep(top + 1, true);
    Cliff w = dominance_erase(u);
    for (long i = 1; i <= n; ++i) {
        if (w[i - 1] == 0) continue;
        for (long a = n + 1 - i; a <= n + w[i - 1] - i; ++a)
            if (a >= 0 && a <= top) keep[a] = false;
    }
    std::vector<int> out;
    for (int a = 0; a <= top; ++a)
        if (keep[a]) out.push_back(a);
    return out;
}

namespace {
void require_increasing(const RangeMap& d) {
    if (!properties(d).increasing)
        throw Error(ErrorKind::UnsupportedRangeMap, format(d) + " is not increasing");
}
}  // namespace

Cliff canyon_to_hill(const RangeMap& d, const Cliff& u) {
    require_increasing(d);
    return elevation_inverse(hi(d), elevation(ca(d), u));
}

Cliff hill_to_canyon(const RangeMap& d, const Cliff& u) {
    require_increasing(d);
    return elevation_inverse(ca(d), elevation(hi(d), u));
}

namespace {

const std::vector<std::pair<WingMap, const char*>>& wing_table() {
    static const std::vector<std::pair<WingMap, const char*>> t = {
        {WingMap::AvTheta, "av_theta"},
        {WingMap::AvZeta, "av_zeta"},
        {WingMap::AvThetaOutput, "av_theta_output"},
        {WingMap::HiTheta, "hi_theta"},
        {WingMap::HiThetaInput, "hi_theta_input"},
        {WingMap::HiZeta, "hi_zeta"},
        {WingMap::CaTheta, "ca_theta"},
        {WingMap::CaThetaHill, "ca_theta_hill"},
        {WingMap::CaRho, "ca_rho"},
        {WingMap::CaRhoInverse, "ca_rho_inverse"},
    };
    return t;
}

GradedFamily side_family(const WingSide& s) {
    RangeMap d = RangeMap::affine(s.m);
    return s.family == 'a' ? av(d) : s.family == 'h' ? hi(d) : ca(d);
}

bool in_side(const WingSide& s, const Cliff& u) {
    if (s.m < 0) return false;
    GradedFamily f = side_family(s);
    switch (s.set) {
        case WingSet::All: return f.contains(u);
        case WingSet::Input: return is_wing(f, u, WingKind::Input);
        case WingSet::Output: return is_wing(f, u, WingKind::Output);
        case WingSet::Butterfly: return is_wing(f, u, WingKind::Butterfly);
    }
    return false;
}

}  // namespace

const char* wing_map_name(WingMap w) {
    for (const auto& [k, v] : wing_table())
        if (k == w) return v;
    return "?";
}

WingMap parse_wing_map(const std::string& name) {
    for (const auto& [k, v] : wing_table())
        if (name == v) return k;
    throw Error(ErrorKind::Parse, "unknown wing map '" + name + "'");
}

const std::vector<WingMap>& all_wing_maps() {
    static const std::vector<WingMap> ws = [] {
        std::vector<WingMap> v;
        for (const auto& [k, _] : wing_table()) v.push_back(k);
        return v;
    }();
    return ws;
}

WingMapSignature signature(WingMap w, int m) {
    using S = WingSet;
    switch (w) {
        case WingMap::AvTheta: return {{'a', m, S::All}, {'a', m + 1, S::Input}, "isomorphism"};
        case WingMap::AvZeta: return {{'a', m, S::Input}, {'a', m, S::Output}, "embedding"};
        case WingMap::AvThetaOutput:
            return {{'a', m, S::Output}, {'a', m + 1, S::Butterfly}, "isomorphism"};
        case WingMap::HiTheta: return {{'h', m, S::All}, {'h', m + 1, S::Input}, "isomorphism"};
        case WingMap::HiThetaInput:
            return {{'h', m, S::Input}, {'h', m, S::Output}, "isomorphism"};
        case WingMap::HiZeta: return {{'h', m, S::Input}, {'h', m + 1, S::Butterfly}, "embedding"};
        case WingMap::CaTheta:
            return {{'c', m, S::Input}, {'c', m + 1, S::Butterfly}, "isomorphism"};
        case WingMap::CaThetaHill:
            return {{'h', m - 1, S::All}, {'c', m, S::Input}, "isomorphism"};
        case WingMap::CaRho: return {{'c', m, S::Output}, {'c', m, S::Input}, "morphism"};
        case WingMap::CaRhoInverse: return {{'c', m, S::Input}, {'c', m, S::Output}, "bijection"};
    }
    throw Error(ErrorKind::Parse, "unknown wing map");
}

Cliff wing_map(WingMap w, int m, const Cliff& u) {
    WingMapSignature sig = signature(w, m);
    if (!in_side(sig.domain, u))
        throw Error(ErrorKind::DomainViolation,
                    (u.empty() ? std::string("-") : to_text(u)) + " is not in the domain of " +
                        wing_map_name(w));
    const std::size_t n = u.size();
    Cliff v(n);
    switch (w) {
        case WingMap::AvTheta:
        case WingMap::AvThetaOutput:
            for (std::size_t i = 1; i < n; ++i) v[i] = u[i] + 1;
            break;
        case WingMap::AvZeta:
        case WingMap::HiThetaInput:
            for (std::size_t i = 1; i < n; ++i) v[i] = u[i] - 1;
            break;
        case WingMap::HiTheta:
        case WingMap::CaThetaHill:
            for (std::size_t i = 0; i < n; ++i) v[i] = u[i] + static_cast<int>(i);
            break;
        case WingMap::HiZeta:
            v = u;
            break;
        case WingMap::CaTheta:
            for (std::size_t i = 1; i < n; ++i) v[i] = u[i] + static_cast<int>(i) - 1;
            break;
        case WingMap::CaRho: {
            Cliff up = u;
            for (std::size_t i = 1; i < n; ++i) ++up[i];
            v = increment(ca(RangeMap::affine(m)), up);
            break;
        }
        case WingMap::CaRhoInverse:
            for (std::size_t i = 1; i < n; ++i) v[i] = u[i - 1] <= u[i] - 2 ? u[i] - 1 : 0;
            break;
    }
    return v;
}

std::vector<Cliff> max_avalanches(const RangeMap& d, std::size_t n) {
    if (!properties(d).weakly_increasing)
        throw Error(ErrorKind::UnsupportedRangeMap, format(d) + " is not weakly increasing");
    std::vector<Cliff> out;
    for (Cliff& u : family_elements(av(d), n))
        if (n == 0 || weight(u) == d(n)) out.push_back(std::move(u));
    return out;
}

Cliff max_avalanche_to_hill(const RangeMap& d, const Cliff& u) {
    if (!properties(d).weakly_increasing)
        throw Error(ErrorKind::UnsupportedRangeMap, format(d) + " is not weakly increasing");
    if (u.empty() || !is_avalanche(d, u) || weight(u) != d(u.size()))
        throw Error(ErrorKind::DomainViolation,
                    (u.empty() ? std::string("-") : to_text(u)) + " is not a maximal avalanche");
    Cliff h = elevation_inverse(hi(d), u);
    h.pop_back();
    return h;
}

}  // namespace cliffs
