#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cliffs/cliff.hpp"
#include "cliffs/rangemap.hpp"
#include "cliffs/subposet.hpp"

namespace cliffs {

bool is_avalanche(const RangeMap& d, const Cliff& u);
bool is_hill(const RangeMap& d, const Cliff& u);
bool is_canyon(const RangeMap& d, const Cliff& u);

// The three families with the flags their definitions guarantee for the
// given range map.
GradedFamily av(const RangeMap& d);
GradedFamily hi(const RangeMap& d);
GradedFamily ca(const RangeMap& d);
// "cl", "av", "hi" or "ca"; throws Parse otherwise.
GradedFamily family_by_name(const std::string& name, const RangeMap& d);

mpz_class cat(int m, int n);
mpz_class tcat(int m, int n);  // n >= 1

// Up steps (1, m) and down steps (1, -1).
struct DyckPath {
    int m = 1;
    std::vector<bool> steps;  // true for an up step

    std::size_t size() const;  // number of up steps
    std::string to_string() const;  // 'U' / 'D'
    static DyckPath parse(int m, const std::string& text);
    bool operator==(const DyckPath& o) const { return m == o.m && steps == o.steps; }
};

// Throws InvalidPath.
void validate(const DyckPath& p);
Cliff dyck_to_hill(const DyckPath& p);
DyckPath hill_to_dyck(int m, const Cliff& u);
std::vector<DyckPath> dyck_paths(int m, std::size_t n);

enum class PairClass { Independent, Hinded, Dominates };
const char* pair_class_name(PairClass c);

// 1-based indices i < j <= |u|; throws IndexOutOfRange.
PairClass classify_pair(const Cliff& u, std::size_t i, std::size_t j);
// Zeroes every letter whose index is dominated by a later index.
Cliff dominance_erase(const Cliff& u);

// F_{Ca}(u) from the interval subtraction formula. Throws InvalidCliff when u
// is not a canyon.
std::vector<int> canyon_followers(const RangeMap& d, const Cliff& u);

// Through the common elevation image. Require an increasing range map.
Cliff canyon_to_hill(const RangeMap& d, const Cliff& u);
Cliff hill_to_canyon(const RangeMap& d, const Cliff& u);

// Maps between wing subposets of the m-families. Each checks that u lies in
// its domain and throws DomainViolation otherwise.
enum class WingMap {
    AvTheta,         // Av_m -> I(Av_{m+1}), 1_{i!=1}(u_i + 1)
    AvZeta,          // I(Av_m) -> O(Av_m), 1_{i!=1}(u_i - 1)
    AvThetaOutput,   // O(Av_m) -> B(Av_{m+1}), 1_{i!=1}(u_i + 1)
    HiTheta,         // Hi_m -> I(Hi_{m+1}), u_i + i - 1
    HiThetaInput,    // I(Hi_m) -> O(Hi_m), 1_{i!=1}(u_i - 1)
    HiZeta,          // I(Hi_m) -> B(Hi_{m+1}), identity
    CaTheta,         // I(Ca_m) -> B(Ca_{m+1}), 1_{i!=1}(u_i + i - 2)
    CaThetaHill,     // Hi_{m-1} -> I(Ca_m), u_i + i - 1
    CaRho,           // O(Ca_m) -> I(Ca_m), left-to-right increasing
    CaRhoInverse,    // I(Ca_m) -> O(Ca_m)
};

const char* wing_map_name(WingMap w);
WingMap parse_wing_map(const std::string& name);
const std::vector<WingMap>& all_wing_maps();

enum class WingSet { All, Input, Output, Butterfly };
struct WingSide {
    char family;  // 'a', 'h' or 'c'
    int m;
    WingSet set;
};
struct WingMapSignature {
    WingSide domain, codomain;
    const char* kind;  // "isomorphism", "embedding" or "morphism"
};
WingMapSignature signature(WingMap w, int m);

Cliff wing_map(WingMap w, int m, const Cliff& u);

// Elements of Av_delta(n) of weight delta(n). Requires weakly increasing delta.
std::vector<Cliff> max_avalanches(const RangeMap& d, std::size_t n);
// Prefix of size n-1 of the hill with elevation u.
Cliff max_avalanche_to_hill(const RangeMap& d, const Cliff& u);

}  // namespace cliffs
