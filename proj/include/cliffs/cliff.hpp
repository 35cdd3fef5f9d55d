#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "cliffs/rangemap.hpp"

namespace cliffs {

// Raw word over the naturals; validated against a range map with is_cliff.
using Cliff = std::vector<int>;
// One-line notation, values 1..n.
using Permutation = std::vector<int>;

// Digits when every letter is at most 9, "c:a,b,..." otherwise.
std::string to_text(const Cliff& u);
// Accepts both textual forms. "-" and "" denote the empty word.
Cliff parse_cliff(const std::string& text);

long weight(const Cliff& u);
bool is_cliff(const RangeMap& d, const Cliff& u);
void require_cliff(const RangeMap& d, const Cliff& u);

Cliff zero_cliff(std::size_t n);
Cliff top_cliff(const RangeMap& d, std::size_t n);

mpz_class cliff_count(const RangeMap& d, std::size_t n);
// Lexicographic order.
std::vector<Cliff> enumerate(const RangeMap& d, std::size_t n);

Cliff reduce(const RangeMap& d, const Cliff& u);
Cliff complement(const RangeMap& d, const Cliff& u);

Cliff lehmer(const Permutation& sigma);
Permutation lehmer_inverse(const Cliff& u);
bool is_permutation(const Permutation& sigma);

// Planar rooted tree with labeled internal nodes. children[k] == -1 is a leaf.
struct IncreasingTree {
    struct Node {
        int label = 0;
        std::vector<int> children;
    };
    std::vector<Node> nodes;  // nodes[k] carries label k+1
    int root = -1;            // -1 for the single leaf

    std::size_t size() const { return nodes.size(); }
    std::size_t leaf_count() const;
    // Nested arrays: a node is [label, child...], a leaf is null.
    std::string to_json() const;
};

IncreasingTree tree_of(const RangeMap& d, const Cliff& u);
Cliff tree_inverse(const IncreasingTree& t);

}  // namespace cliffs
