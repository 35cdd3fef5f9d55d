#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cliffs {

// A map from positive integers to naturals, either affine (m*(i-1)) or
// ultimately periodic (a finite prefix followed by a repeated period).
// The affine form may also carry a prefix overriding its first values.
class RangeMap {
public:
    static RangeMap affine(int m, std::vector<int> prefix = {});
    static RangeMap periodic(std::vector<int> prefix, std::vector<int> period);

    bool is_affine() const { return affine_; }
    int slope() const { return slope_; }
    const std::vector<int>& prefix() const { return prefix_; }
    const std::vector<int>& period() const { return period_; }

    // 1-based; throws InvalidIndex on i == 0.
    int operator()(std::size_t i) const;
    int eval(std::size_t i) const { return (*this)(i); }

    // Indices 1..window() decide every structural property of a periodic map.
    std::size_t window() const;

    bool operator==(const RangeMap& o) const;
    bool operator!=(const RangeMap& o) const { return !(*this == o); }

private:
    RangeMap() = default;
    bool affine_ = true;
    int slope_ = 0;
    std::vector<int> prefix_;
    std::vector<int> period_;
};

struct RangeMapProperties {
    bool rooted = false;
    bool weakly_increasing = false;
    bool increasing = false;
    bool has_ascent = false;
    bool has_descent = false;
    bool valley_free = false;
    std::optional<std::size_t> dominated_by;  // least j such that delta is j-dominated
};

enum class AlgebraType { TypeA, TypeB, TypeC, TypeD, NotValleyFree };

const char* algebra_type_name(AlgebraType t);

RangeMapProperties properties(const RangeMap& d);
// delta(j) >= delta(k') for every k' large enough.
bool is_dominated(const RangeMap& d, std::size_t j);
AlgebraType classify(const RangeMap& d);
std::size_t dimension(const RangeMap& d, std::size_t n);

// DSL: "affine:<m>" or "word:<prefix>*<period>" with comma-separated naturals.
RangeMap parse_range_map(const std::string& text);
std::string format(const RangeMap& d);

// The maps 0, m, 2m, ...
inline RangeMap mmap(int m) { return RangeMap::affine(m); }

}  // namespace cliffs
