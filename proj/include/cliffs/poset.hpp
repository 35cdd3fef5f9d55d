#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliffs/cliff.hpp"

namespace cliffs {

// Explicit finite poset given by its elements and its cover relation.
class FinitePoset {
public:
    FinitePoset() = default;

    // Elements are sorted lexicographically; covers are index pairs (lower, upper)
    // into the sorted list. The cover list must already be a transitive reduction.
    static FinitePoset from_covers(std::vector<Cliff> elements,
                                   const std::vector<std::pair<Cliff, Cliff>>& covers);
    // Induced order of the componentwise order on a set of words of equal size.
    static FinitePoset componentwise(std::vector<Cliff> elements);
    // Arbitrary order relation given as a predicate.
    static FinitePoset from_relation(std::vector<Cliff> elements,
                                     const std::function<bool(const Cliff&, const Cliff&)>& leq);

    std::size_t size() const { return elements_.size(); }
    const std::vector<Cliff>& elements() const { return elements_; }
    const Cliff& element(int i) const { return elements_[i]; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& upper_covers(int i) const { return up_[i]; }
    const std::vector<int>& lower_covers(int i) const { return down_[i]; }

    // -1 when absent.
    int index_of(const Cliff& u) const;
    bool contains(const Cliff& u) const { return index_of(u) >= 0; }

    bool leq(int a, int b) const;
    bool leq(const Cliff& a, const Cliff& b) const;

    // Indices in a linear extension (by rank then index).
    const std::vector<int>& linear_extension() const;
    // Length of the longest chain from a minimal element.
    int rank(int i) const;

    std::vector<int> minimal() const;
    std::vector<int> maximal() const;
    // Elements z with a <= z <= b.
    std::vector<int> interval(int a, int b) const;

    // Greatest lower bound / least upper bound when it exists.
    std::optional<int> meet(int a, int b) const;
    std::optional<int> join(int a, int b) const;
    bool is_lattice() const;

    std::string to_dot(const std::string& name = "P") const;
    std::string to_json() const;

private:
    void finish();
    void ensure_closure() const;

    std::vector<Cliff> elements_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_, down_;
    std::map<Cliff, int> index_;
    std::vector<int> ranks_;
    std::vector<int> linext_;
    mutable std::vector<std::vector<std::uint64_t>> below_;  // below_[b] has bit a iff a <= b
};

long mobius(const FinitePoset& p, int x, int y);
long mobius(const FinitePoset& p, const Cliff& x, const Cliff& y);

// Elements with exactly one lower (join) or one upper (meet) cover.
enum class IrreducibleKind { Join, Meet };
std::vector<Cliff> irreducibles(const FinitePoset& p, IrreducibleKind kind);

// Returns an isomorphism as a map from indices of p to indices of q.
std::optional<std::vector<int>> poset_isomorphic(const FinitePoset& p, const FinitePoset& q,
                                                 std::size_t max_size = 6000);
// True iff map is a bijection p -> q with x <= y in p implying map(x) <= map(y) in q.
bool is_order_extension(const FinitePoset& p, const FinitePoset& q,
                        const std::function<Cliff(const Cliff&)>& map);
// True iff map is a bijection p -> q preserving and reflecting the order.
bool is_isomorphism(const FinitePoset& p, const FinitePoset& q,
                    const std::function<Cliff(const Cliff&)>& map);

}  // namespace cliffs
