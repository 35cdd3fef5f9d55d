#include "cliffs/rangemap.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cliffs/error.hpp"

namespace cliffs {

RangeMap RangeMap::affine(int m, std::vector<int> prefix) {
    if (m < 0) throw Error(ErrorKind::Parse, "negative slope");
    for (int x : prefix)
        if (x < 0) throw Error(ErrorKind::Parse, "negative letter");
    RangeMap d;
    d.affine_ = true;
    d.slope_ = m;
    d.prefix_ = std::move(prefix);
    return d;
}

RangeMap RangeMap::periodic(std::vector<int> prefix, std::vector<int> period) {
    if (period.empty()) throw Error(ErrorKind::Parse, "empty period");
    for (int x : prefix)
        if (x < 0) throw Error(ErrorKind::Parse, "negative letter");
    for (int x : period)
        if (x < 0) throw Error(ErrorKind::Parse, "negative letter");
    RangeMap d;
    d.affine_ = false;
    d.prefix_ = std::move(prefix);
    d.period_ = std::move(period);
    return d;
}

int RangeMap::operator()(std::size_t i) const {
    if (i == 0) throw Error(ErrorKind::InvalidIndex, "range maps are indexed from 1");
    if (i <= prefix_.size()) return prefix_[i - 1];
    if (affine_) return slope_ * static_cast<int>(i - 1);
    return period_[(i - 1 - prefix_.size()) % period_.size()];
}

std::size_t RangeMap::window() const {
    if (affine_) return prefix_.size() + 3;
    return prefix_.size() + 2 * period_.size();
}

bool RangeMap::operator==(const RangeMap& o) const {
    std::size_t h = std::max(prefix_.size(), o.prefix_.size()) + 1;
    if (affine_ && o.affine_) {
        if (slope_ != o.slope_) return false;
    } else if (affine_ != o.affine_) {
        const RangeMap& a = affine_ ? *this : o;
        const RangeMap& p = affine_ ? o : *this;
        if (a.slope_ != 0) return false;
        h += p.period_.size() + 2;
    } else {
        h += std::lcm(period_.size(), o.period_.size());
    }
    for (std::size_t i = 1; i <= h; ++i)
        if ((*this)(i) != o(i)) return false;
    return true;
}

const char* algebra_type_name(AlgebraType t) {
    switch (t) {
        case AlgebraType::TypeA: return "A";
        case AlgebraType::TypeB: return "B";
        case AlgebraType::TypeC: return "C";
        case AlgebraType::TypeD: return "D";
        case AlgebraType::NotValleyFree: return "not-valley-free";
    }
    return "?";
}

bool is_dominated(const RangeMap& d, std::size_t j) {
    if (d.is_affine()) return d.slope() == 0 && d(j) >= 0;
    int top = *std::max_element(d.period().begin(), d.period().end());
    return d(j) >= top;
}

RangeMapProperties properties(const RangeMap& d) {
    RangeMapProperties p;
    p.rooted = d(1) == 0;
    // Every transition (i, i+1) of the infinite map occurs in the window, and
    // a descent followed by an ascent can always be realized inside it. Past
    // its prefix an affine map keeps the behaviour of its last transitions.
    std::size_t w = d.window();
    bool seen_descent = false, valley = false;
    p.increasing = true;
    for (std::size_t i = 1; i < w; ++i) {
        int a = d(i), b = d(i + 1);
        if (a < b) {
            p.has_ascent = true;
            if (seen_descent) valley = true;
        }
        if (a > b) {
            p.has_descent = true;
            seen_descent = true;
        }
        if (a >= b) p.increasing = false;
    }
    p.weakly_increasing = !p.has_descent;
    p.valley_free = !valley;
    for (std::size_t j = 1; j <= w; ++j) {
        if (is_dominated(d, j)) {
            p.dominated_by = j;
            break;
        }
    }
    return p;
}

AlgebraType classify(const RangeMap& d) {
    RangeMapProperties p = properties(d);
    if (!p.valley_free) return AlgebraType::NotValleyFree;
    if (!p.has_ascent && !p.has_descent) return AlgebraType::TypeA;
    if (!p.has_descent) return AlgebraType::TypeB;
    return is_dominated(d, 1) ? AlgebraType::TypeC : AlgebraType::TypeD;
}

std::size_t dimension(const RangeMap& d, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (d(i) != 0) ++c;
    return c;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::Parse, msg + " at position " + std::to_string(pos));
    }

    bool at_end() const { return pos >= s.size(); }

    void expect(const std::string& lit) {
        if (s.compare(pos, lit.size(), lit) != 0) fail("expected '" + lit + "'");
        pos += lit.size();
    }

    int number() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) {
            pos = start;
            fail("expected a natural number");
        }
        if (pos - start > 9) {
            pos = start;
            fail("number too large");
        }
        return std::stoi(s.substr(start, pos - start));
    }

    std::vector<int> list(char stop) {
        std::vector<int> out;
        if (at_end() || s[pos] == stop) return out;
        out.push_back(number());
        while (!at_end() && s[pos] == ',') {
            ++pos;
            out.push_back(number());
        }
        return out;
    }
};

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

RangeMap parse_range_map(const std::string& text) {
    Lexer lx{text};
    if (text.rfind("affine:", 0) == 0) {
        lx.pos = 7;
        int m = lx.number();
        std::vector<int> prefix;
        if (!lx.at_end() && text[lx.pos] == '@') {
            ++lx.pos;
            prefix = lx.list('\0');
        }
        if (!lx.at_end()) lx.fail("trailing characters");
        return RangeMap::affine(m, std::move(prefix));
    }
    if (text.rfind("word:", 0) == 0) {
        lx.pos = 5;
        std::vector<int> prefix = lx.list('*');
        lx.expect("*");
        std::size_t period_pos = lx.pos;
        std::vector<int> period = lx.list('\0');
        if (!lx.at_end()) lx.fail("trailing characters");
        if (period.empty()) {
            lx.pos = period_pos;
            lx.fail("empty period");
        }
        return RangeMap::periodic(std::move(prefix), std::move(period));
    }
    lx.fail("expected 'affine:' or 'word:'");
}

std::string format(const RangeMap& d) {
    if (d.is_affine()) {
        std::string out = "affine:" + std::to_string(d.slope());
        if (!d.prefix().empty()) out += "@" + join_ints(d.prefix());
        return out;
    }
    return "word:" + join_ints(d.prefix()) + "*" + join_ints(d.period());
}

}  // namespace cliffs
