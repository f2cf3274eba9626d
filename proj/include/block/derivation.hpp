#pragma once

// Derivations of B: symbolic forms (inner derivations ad_u and the outer
// derivation d0: L[b,j] -> b L[b,j]), and the windowed solver that computes
// every homogeneous derivation of a fixed degree on a finite truncation of B.

#include "block/algebra.hpp"
#include "block/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace block {

struct InnerAtom {
    Element u;
    friend bool operator==(const InnerAtom &, const InnerAtom &) = default;
};
struct D0Atom {
    friend bool operator==(const D0Atom &, const D0Atom &) = default;
};
using DerivationAtom = std::variant<InnerAtom, D0Atom>;

// Formal combination sum_k w_k * atom_k with nonzero weights.
class DerivationForm {
  public:
    struct Term {
        Scalar weight;
        DerivationAtom atom;
    };

    static DerivationForm d0();
    static DerivationForm inner(const Element &u);

    DerivationForm &add(const Scalar &weight, const DerivationAtom &atom);
    DerivationForm &operator+=(const DerivationForm &o);
    friend DerivationForm operator+(DerivationForm a, const DerivationForm &b) { return a += b; }
    friend DerivationForm operator*(const Scalar &s, const DerivationForm &d);

    [[nodiscard]] const std::vector<Term> &terms() const { return terms_; }

  private:
    std::vector<Term> terms_;
};

Element apply_derivation(const DerivationForm &d, const Element &x);
// d([x,y]) - [d(x),y] - [x,d(y)] in B.
Element leibniz_residual(const DerivationForm &d, const Element &x, const Element &y);

// Homogeneous linear map of first-index degree `degree` on a window: every
// source L[b,j] in the window whose target column degree+b is also in the
// window has an image supported on that column, rows 0..i_max.
struct WindowedMap {
    std::int64_t degree = 0;
    Window window;
    std::map<BasisIndex, Element> images;

    // Sources (b, j) with b and degree+b in the window's alpha range.
    [[nodiscard]] static std::vector<BasisIndex> sources(std::int64_t degree, const Window &w);

    // Image of a derivation form on every source, truncated to the window.
    static WindowedMap from_derivation(const DerivationForm &d, std::int64_t degree, const Window &w);
    // Same map seen on a smaller window (row- and column-wise truncation).
    [[nodiscard]] WindowedMap restrict_to(const Window &inner) const;

    // Coefficient of L[degree+b, k] in the image of L[b, j]; zero when absent.
    [[nodiscard]] Scalar entry(std::int64_t b, std::int64_t j, std::int64_t k) const;
    [[nodiscard]] bool is_zero() const;
};

// Unknown e^{(k)}_{b,j}: coefficient of L[degree+b, k] in D(L[b, j]).
struct UnknownLabel {
    std::int64_t beta = 0;
    std::int64_t j = 0;
    std::int64_t k = 0;
    friend auto operator<=>(const UnknownLabel &, const UnknownLabel &) = default;
};

struct ConstraintRow {
    BasisIndex left;         // L[b, j]
    BasisIndex right;        // L[g, k]
    std::int64_t output_row; // row of L[degree+b+g, .] the equation reads off
    linalg::IntRow coefficients;
};

struct ConstraintSystem {
    std::int64_t degree = 0;
    Window window;
    std::vector<UnknownLabel> unknowns; // (beta asc, j asc, k asc)
    std::map<UnknownLabel, std::size_t> column;
    std::vector<ConstraintRow> rows; // lexicographic in (left, right, output_row)

    [[nodiscard]] WindowedMap to_map(const linalg::RatRow &solution) const;
};

struct SolutionBasis {
    std::vector<WindowedMap> maps;
};

ConstraintSystem build_constraints(std::int64_t degree, const Window &window);
SolutionBasis solve_nullspace(const ConstraintSystem &sys);

struct H1Report {
    std::size_t solutions = 0;       // nullity of the window system
    std::size_t solution_rank = 0;   // dim S on the interior
    std::size_t inner_rank = 0;      // dim I on the interior
    std::size_t combined_rank = 0;   // dim (S + I)
    std::size_t h1 = 0;              // dim (S + I) - dim I
    std::size_t beyond_d0 = 0;       // dim (S + I + F d0) - dim (I + F d0)
    bool d0_in_solutions = false;    // degree 0 only: d0 restricted to the interior lies in S
    std::vector<WindowedMap> restricted; // solver solutions on the interior
};

// Throws WindowTooSmallError unless the interior sits inside the window with
// at least 2 columns of margin on both sides and 1 row on top.
H1Report h1_report(std::int64_t degree, const Window &window, const Window &interior);
std::size_t h1_dimension(std::int64_t degree, const Window &window, const Window &interior);

// Checks the leading-row recurrences of a windowed derivation over its own
// window. The leading row is e_{b,j} := coefficient of L[degree+b, i0+j] in
// D(L[b, j]) where i0 is the largest offset k-j carrying a nonzero entry.
// Returns a human-readable line per violated identity.
std::vector<std::string> recurrence_check(const WindowedMap &solution);

// Whether some u supported on `window` has ad_u = d on every source of `interior`.
bool inner_realization_exists(const DerivationForm &d, const Window &window, const Window &interior);

} // namespace block
