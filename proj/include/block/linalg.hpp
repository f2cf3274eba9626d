#pragma once

// Sparse exact linear algebra over Q by fraction-free elimination: rows are
// kept as primitive integer vectors, and a row is reduced against a pivot row
// by cross-multiplication instead of division.

#include "block/scalar.hpp"

#include <cstddef>
#include <gmpxx.h>
#include <map>
#include <utility>
#include <vector>

namespace block::linalg {

// Sorted by column, no zero entries.
using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;
using RatRow = std::vector<std::pair<std::size_t, Scalar>>;

// Scales a rational row by the lcm of its denominators and removes content.
IntRow to_integer_row(const RatRow &row);
// Divides by the gcd of entries and makes the leading entry positive.
void make_primitive(IntRow &row);

class EchelonBasis {
  public:
    // Reduces `row` and keeps it if it is independent of the basis.
    // Returns true when the rank grew.
    bool insert(IntRow row);
    bool insert(const RatRow &row) { return insert(to_integer_row(row)); }

    // Row after eliminating leading entries against the basis; empty iff in the span.
    [[nodiscard]] IntRow reduce(IntRow row) const;
    [[nodiscard]] bool contains(const RatRow &row) const { return reduce(to_integer_row(row)).empty(); }

    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] const std::map<std::size_t, IntRow> &rows() const { return rows_; }

    // Basis of {x : row . x = 0 for every basis row} in Q^columns, one vector
    // per free column in ascending order, with a 1 at that free column.
    [[nodiscard]] std::vector<RatRow> nullspace(std::size_t columns) const;

  private:
    std::map<std::size_t, IntRow> rows_; // keyed by leading column
};

// Whether target is a Q-linear combination of the generators.
bool in_span(const std::vector<RatRow> &generators, const RatRow &target);

// Dimension of the span of the given vectors.
std::size_t rank_of(const std::vector<RatRow> &vectors);

} // namespace block::linalg
