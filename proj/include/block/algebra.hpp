#pragma once

// Finitely supported elements of the Block type Lie algebra B with basis
// L[a,i] (a in Z, i >= 0), the family B(s,Z) with basis x[a,i], and the
// central extension BHat = B + F c.
//
//   B:      [L[a,i], L[b,j]] = ((a-1)(j+1) - (b-1)(i+1)) L[a+b,i+j]
//   B(s,Z): [x[a,i], x[b,j]] = s(b-a) x[a+b,i+j] + ((a-1+s)j - (b-1+s)i) x[a+b,i+j-1]
//   BHat:   B bracket + delta(a+b,0) delta(i,0) delta(j,0) (a^3-a)/6 c

#include "block/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace block {

struct BasisIndex {
    std::int64_t alpha = 0;
    std::int64_t i = 0;

    friend auto operator<=>(const BasisIndex &, const BasisIndex &) = default;
};

// Throws std::invalid_argument when i < 0.
BasisIndex make_index(std::int64_t alpha, std::int64_t i);

// Finite linear combination of basis vectors plus an optional central part.
// Terms are kept sorted by (alpha, i) and never hold a zero coefficient.
class Element {
  public:
    using TermMap = std::map<BasisIndex, Scalar>;

    Element() = default;

    static Element basis(std::int64_t alpha, std::int64_t i, const Scalar &coeff = Scalar(1));
    static Element central_unit(const Scalar &coeff = Scalar(1));

    void add_term(const BasisIndex &idx, const Scalar &coeff);
    void add_central(const Scalar &coeff) { central_ += coeff; }

    [[nodiscard]] const TermMap &terms() const { return terms_; }
    [[nodiscard]] const Scalar &central() const { return central_; }
    [[nodiscard]] Scalar coefficient(const BasisIndex &idx) const;
    [[nodiscard]] bool is_zero() const { return terms_.empty() && central_.is_zero(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    // Same element with the central part dropped.
    [[nodiscard]] Element without_central() const;

    Element &operator+=(const Element &o);
    Element &operator-=(const Element &o);
    Element &operator*=(const Scalar &s);

    friend Element operator+(Element a, const Element &b) { return a += b; }
    friend Element operator-(Element a, const Element &b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Scalar(-1); }
    friend Element operator*(const Scalar &s, Element a) { return a *= s; }
    friend bool operator==(const Element &, const Element &) = default;

  private:
    TermMap terms_;
    Scalar central_;
};

Element add(const Element &x, const Element &y);
Element scale(const Scalar &lambda, const Element &x);

enum class AlgebraKind { B, BsG, BHat };

struct AlgebraVariant {
    AlgebraKind kind = AlgebraKind::B;
    int s = 0; // only meaningful for BsG; 0 or 1

    static AlgebraVariant b() { return {AlgebraKind::B, 0}; }
    static AlgebraVariant bsg(int s);
    static AlgebraVariant bhat() { return {AlgebraKind::BHat, 0}; }

    // "B", "BsG0", "BsG1", "BHat"
    [[nodiscard]] std::string name() const;
    static AlgebraVariant from_name(const std::string &name);

    friend bool operator==(const AlgebraVariant &, const AlgebraVariant &) = default;
};

// Rectangle alpha_min..alpha_max by 0..i_max of basis indices.
struct Window {
    std::int64_t alpha_min = 0;
    std::int64_t alpha_max = 0;
    std::int64_t i_max = 0;

    // Validates alpha_min <= alpha_max and i_max >= 0; throws WindowError.
    static Window make(std::int64_t alpha_min, std::int64_t alpha_max, std::int64_t i_max);
    // "amin:amax:imax"
    static Window parse(const std::string &spec);
    [[nodiscard]] std::string str() const;

    [[nodiscard]] bool contains_alpha(std::int64_t a) const { return alpha_min <= a && a <= alpha_max; }
    [[nodiscard]] bool contains(const BasisIndex &idx) const {
        return contains_alpha(idx.alpha) && idx.i >= 0 && idx.i <= i_max;
    }
    [[nodiscard]] bool contains(const Window &inner) const;
    // All indices in (alpha asc, i asc) order.
    [[nodiscard]] std::vector<BasisIndex> basis() const;

    friend bool operator==(const Window &, const Window &) = default;
};

// Structure constant of B: [L[a], L[b]] = b_coefficient(a, b) L[a + b].
std::int64_t b_coefficient(const BasisIndex &a, const BasisIndex &b);

Element bracket_b(const Element &x, const Element &y);
Element bracket_bsg(int s, const Element &x, const Element &y);
Element bracket_hat(const Element &x, const Element &y);
Element bracket(const AlgebraVariant &v, const Element &x, const Element &y);

// Sends L[a,i] to x[a,i+1], brackets in B(0,Z), shifts back and subtracts bracket_b.
Element shift_iso_residual(const Element &x, const Element &y);

Element jacobi_residual(const AlgebraVariant &v, const Element &x, const Element &y, const Element &z);

// Common a+i of every term (the ad L[0,0] eigenvalue is its negative).
// nullopt when terms disagree; throws ZeroElementError on 0.
std::optional<std::int64_t> eigen_degree(const Element &x);
// Common first index a of every term.
std::optional<std::int64_t> first_grade(const Element &x);

enum class CocycleKind {
    PhiEq12, // (a-1) delta(a+b,2) delta(i,0) delta(j,0) on B(0,Z)
    PsiHat,  // delta(a+b,0) delta(i,0) delta(j,0) (a^3-a)/6 on B
};

Scalar cocycle_basis(CocycleKind kind, const BasisIndex &a, const BasisIndex &b);
Scalar cocycle_value(CocycleKind kind, const Element &x, const Element &y);
// phi([x,y],z) + phi([y,z],x) + phi([z,x],y) with the bracket the cocycle lives on.
Scalar cocycle_residual(CocycleKind kind, const Element &x, const Element &y, const Element &z);

} // namespace block
