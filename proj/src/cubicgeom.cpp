#include "cliffs/cubicgeom.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>
#include <set>

#include "cliffs/error.hpp"
#include "cliffs/lattice.hpp"

namespace cliffs {

std::vector<std::size_t> Cell::free_axes() const {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (lower[i] != upper[i]) d.push_back(i);
    return d;
}

mpz_class Cell::volume() const {
    mpz_class v = 1;
    for (std::size_t i : free_axes()) v *= upper[i] - lower[i];
    return v;
}

namespace {

// Calls f on every word w with w_i in {u_i, v_i}.
bool all_mixed(const Cliff& u, const Cliff& v, const std::function<bool(const Cliff&)>& f) {
    std::vector<std::size_t> axes = Cell{u, v}.free_axes();
    const std::size_t k = axes.size();
    Cliff w = u;
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        for (std::size_t b = 0; b < k; ++b) w[axes[b]] = (mask >> b & 1) ? v[axes[b]] : u[axes[b]];
        if (!f(w)) return false;
    }
    return true;
}

// Visits points with coordinates in [lo_i, hi_i] along the given axes, others
// fixed to base. Stops when f returns false.
bool box_points(Cliff base, const std::vector<std::size_t>& axes, const std::vector<int>& lo,
                const std::vector<int>& hi, const std::function<bool(const Cliff&)>& f) {
    for (std::size_t b = 0; b < axes.size(); ++b) {
        if (lo[b] > hi[b]) return true;
        base[axes[b]] = lo[b];
    }
    while (true) {
        if (!f(base)) return false;
        std::size_t b = 0;
        for (; b < axes.size(); ++b) {
            if (base[axes[b]] < hi[b]) {
                ++base[axes[b]];
                break;
            }
            base[axes[b]] = lo[b];
        }
        if (b == axes.size()) return true;
    }
}

void check_compatible_args(const GradedFamily& s, const Cliff& u, const Cliff& v) {
    s.require(Flag::Straight);
    if (u.size() != v.size())
        throw Error(ErrorKind::SizeMismatch, "cell corners differ in size");
    if (!leq(u, v))
        throw Error(ErrorKind::NotComparable, to_text(u) + " is not below " + to_text(v));
}

// Pairs u <= v of S(n) differing in exactly k letters with all mixed words in S.
std::vector<Cell> collect_cells(const GradedFamily& s, std::size_t n,
                                std::optional<std::size_t> k) {
    s.require(Flag::Straight);
    std::vector<Cliff> elems = family_elements(s, n);
    std::vector<Cell> out;
    for (const Cliff& u : elems)
        for (const Cliff& v : elems) {
            if (!leq(u, v)) continue;
            Cell c{u, v};
            if (k && c.dim() != *k) continue;
            if (all_mixed(u, v, [&](const Cliff& w) { return s.contains(w); })) out.push_back(c);
        }
    return out;
}

bool contained(const Cell& inner, const Cell& outer) {
    return leq(outer.lower, inner.lower) && leq(inner.upper, outer.upper);
}

}  // namespace

bool is_cell_compatible(const GradedFamily& s, const Cliff& u, const Cliff& v) {
    check_compatible_args(s, u, v);
    return all_mixed(u, v, [&](const Cliff& w) { return s.contains(w); });
}

bool is_pure(const GradedFamily& s, const Cell& c) {
    check_compatible_args(s, c.lower, c.upper);
    std::vector<std::size_t> axes = c.free_axes();
    std::vector<int> lo, hi;
    for (std::size_t i : axes) {
        lo.push_back(c.lower[i] + 1);
        hi.push_back(c.upper[i] - 1);
    }
    return box_points(c.lower, axes, lo, hi, [&](const Cliff& w) { return !s.contains(w); });
}

bool cells_disjoint(const Cell& a, const Cell& b) {
    if (a.lower.size() != b.lower.size())
        throw Error(ErrorKind::SizeMismatch, "cells live in different dimensions");
    for (std::size_t i = 0; i < a.lower.size(); ++i) {
        const bool fa = a.lower[i] != a.upper[i], fb = b.lower[i] != b.upper[i];
        if (fa && fb) {
            if (std::max(a.lower[i], b.lower[i]) >= std::min(a.upper[i], b.upper[i])) return true;
        } else if (fa) {
            if (!(a.lower[i] < b.lower[i] && b.lower[i] < a.upper[i])) return true;
        } else if (fb) {
            if (!(b.lower[i] < a.lower[i] && a.lower[i] < b.upper[i])) return true;
        } else if (a.lower[i] != b.lower[i]) {
            return true;
        }
    }
    return false;
}

std::vector<Cell> cells_of_dimension(const GradedFamily& s, std::size_t n, std::size_t k) {
    return collect_cells(s, n, k);
}

std::optional<std::size_t> max_cell_dimension(const GradedFamily& s, std::size_t n) {
    std::optional<std::size_t> best;
    for (const Cell& c : collect_cells(s, n, std::nullopt))
        if (!best || c.dim() > *best) best = c.dim();
    return best;
}

std::vector<Cell> cells_of_max_dimension(const GradedFamily& s, std::size_t n) {
    std::optional<std::size_t> k = max_cell_dimension(s, n);
    if (!k) return {};
    std::vector<Cell> all = collect_cells(s, n, k), out;
    for (const Cell& c : all) {
        bool minimal = true;
        for (const Cell& d : all)
            if (!(d == c) && contained(d, c)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(c);
    }
    return out;
}

std::vector<Cell> maximal_cells(const GradedFamily& s, std::size_t n) {
    std::optional<std::size_t> k = max_cell_dimension(s, n);
    if (!k) return {};
    std::vector<Cell> all = collect_cells(s, n, k), out;
    for (const Cell& c : all) {
        bool maximal = true;
        for (const Cell& d : all)
            if (!(d == c) && contained(c, d)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(c);
    }
    return out;
}

mpz_class k_volume(const GradedFamily& s, std::size_t n, std::size_t k) {
    // a unit k-cube is its free axes plus its lowest corner
    std::set<std::pair<std::vector<std::size_t>, Cliff>> units;
    for (const Cell& c : collect_cells(s, n, k)) {
        std::vector<std::size_t> axes = c.free_axes();
        std::vector<int> lo, hi;
        for (std::size_t i : axes) {
            lo.push_back(c.lower[i]);
            hi.push_back(c.upper[i] - 1);
        }
        box_points(c.lower, axes, lo, hi, [&](const Cliff& w) {
            units.emplace(axes, w);
            return true;
        });
    }
    return mpz_class(static_cast<unsigned long>(units.size()));
}

mpz_class volume(const GradedFamily& s, std::size_t n) {
    std::optional<std::size_t> k = max_cell_dimension(s, n);
    if (!k) return 0;
    return k_volume(s, n, *k);
}

std::optional<std::size_t> order_dimension_witness(const GradedFamily& s, std::size_t n) {
    std::optional<std::size_t> k = max_cell_dimension(s, n);
    const std::size_t target = dimension(s.delta, n);
    if (k && *k == target) return target;
    return std::nullopt;
}

std::string cells_to_json(const std::vector<Cell>& cells) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Cell& c : cells)
        arr.push_back({{"lower", c.lower.empty() ? "" : to_text(c.lower)},
                       {"upper", c.upper.empty() ? "" : to_text(c.upper)},
                       {"dim", c.dim()},
                       {"vol", c.volume().get_str()}});
    return arr.dump();
}

}  // namespace cliffs
