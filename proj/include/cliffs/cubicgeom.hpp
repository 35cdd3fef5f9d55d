#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cliffs/cliff.hpp"
#include "cliffs/subposet.hpp"

namespace cliffs {

// The orthotope spanned by u <= v.
struct Cell {
    Cliff lower, upper;

    // 0-based indices where lower and upper differ.
    std::vector<std::size_t> free_axes() const;
    std::size_t dim() const { return free_axes().size(); }
    mpz_class volume() const;
    bool operator==(const Cell& o) const { return lower == o.lower && upper == o.upper; }
    bool operator<(const Cell& o) const {
        return lower != o.lower ? lower < o.lower : upper < o.upper;
    }
};

// Every word mixing letters of u and v lies in S. Requires Straight
// (FlagMissing) and u <= v (NotComparable).
bool is_cell_compatible(const GradedFamily& s, const Cliff& u, const Cliff& v);
// No element of S strictly inside the cell along its free axes.
bool is_pure(const GradedFamily& s, const Cell& c);
// No point of R^n inside both.
bool cells_disjoint(const Cell& a, const Cell& b);

// All cells of dimension k of the realization of S(n).
std::vector<Cell> cells_of_dimension(const GradedFamily& s, std::size_t n, std::size_t k);
// Largest dimension of a cell; nullopt when S(n) is empty.
std::optional<std::size_t> max_cell_dimension(const GradedFamily& s, std::size_t n);

// Cells of the largest dimension containing no other cell of that dimension.
// These are the pieces of the decomposition (unit cells for Av_m and Hi_m,
// <u, rho(u)> for Ca_m).
std::vector<Cell> cells_of_max_dimension(const GradedFamily& s, std::size_t n);
// Cells of the largest dimension contained in no other cell.
std::vector<Cell> maximal_cells(const GradedFamily& s, std::size_t n);

// Measure of the union of all k-cells, counted as distinct unit k-cubes of
// the integer grid.
mpz_class k_volume(const GradedFamily& s, std::size_t n, std::size_t k);
// k_volume at the largest k having a cell.
mpz_class volume(const GradedFamily& s, std::size_t n);

// dim_n(delta) when some cell reaches that dimension, nullopt otherwise.
std::optional<std::size_t> order_dimension_witness(const GradedFamily& s, std::size_t n);

// JSON array of {lower, upper, dim, vol}.
std::string cells_to_json(const std::vector<Cell>& cells);

}  // namespace cliffs
