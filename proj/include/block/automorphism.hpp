#pragma once

// Automorphisms of B and the ad-local-finiteness probe.
//
// Every automorphism has the form
//     tau(mu, nu, xi): L[a,i] -> xi mu^a nu^i L[xi(a+i)-i, i]
// with mu, nu nonzero and xi = +-1. Composition (outer after inner):
//     (mu2, nu2, xi2) o (mu1, nu1, xi1) = (mu1 mu2^xi1, nu1 nu2 mu2^(xi1-1), xi1 xi2)
// so the xi = +1 maps form a normal subgroup F* x F* and rho_{-1} = (1,1,-1)
// acts on it by (mu, nu) -> (1/mu, nu/mu^2).

#include "block/algebra.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace block {

class AutParams {
  public:
    // Throws std::invalid_argument if mu or nu is zero or xi is not +-1.
    AutParams(Scalar mu, Scalar nu, int xi);

    static AutParams identity() { return {Scalar(1), Scalar(1), 1}; }
    static AutParams phi(const Scalar &mu) { return {mu, Scalar(1), 1}; }
    static AutParams phi_prime(const Scalar &nu) { return {Scalar(1), nu, 1}; }
    static AutParams rho(int xi) { return {Scalar(1), Scalar(1), xi}; }

    [[nodiscard]] const Scalar &mu() const { return mu_; }
    [[nodiscard]] const Scalar &nu() const { return nu_; }
    [[nodiscard]] int xi() const { return xi_; }

    // "mu,nu,xi"
    [[nodiscard]] std::string str() const;
    static AutParams parse(const std::string &text);

    friend bool operator==(const AutParams &, const AutParams &) = default;

  private:
    Scalar mu_;
    Scalar nu_;
    int xi_;
};

BasisIndex aut_image_index(const AutParams &t, const BasisIndex &b);
Element aut_apply(const AutParams &t, const Element &x);
AutParams aut_compose(const AutParams &outer, const AutParams &inner);
AutParams aut_invert(const AutParams &t);
// t [x,y] - [t x, t y] in B.
Element hom_residual(const AutParams &t, const Element &x, const Element &y);

// Automorphisms of the Witt subalgebra N = span{L[a,0]}:
//   chi_mu: L[a,0] -> mu^a L[a,0],   chi'_s: L[a,0] -> s L[s a,0].
// Inside B the bracket on N is [L[a,0], L[b,0]] = (a-b) L[a+b,0]; the
// abstract Witt basis w_a with [w_a, w_b] = (b-a) w_{a+b} corresponds to
// w_a = -L[a,0].
struct ChiMu {
    Scalar mu;
};
struct ChiPrime {
    int s;
};
using WittAutParams = std::variant<ChiMu, ChiPrime>;

// Throws NotInWittError if x has a term with i > 0.
Element witt_apply(const WittAutParams &w, const Element &x);
Element witt_hom_residual(const WittAutParams &w, const Element &x, const Element &y);

struct MinimalTerm {
    std::int64_t alpha0;
    std::int64_t i0;
    Scalar coeff;
    friend bool operator==(const MinimalTerm &, const MinimalTerm &) = default;
};

// Smallest alpha, then largest i at that alpha. Throws ZeroElementError.
MinimalTerm minimal_term(const Element &x);

// Coefficient of L[a0+beta, i0+j] in [L[a0,i0], L[beta,j]].
Scalar step_coefficient(std::int64_t a0, std::int64_t i0, std::int64_t beta, std::int64_t j);

struct Stabilized {
    std::size_t dim;
    friend bool operator==(const Stabilized &, const Stabilized &) = default;
};
// Evidence only: the Krylov space was still growing at this depth.
struct GrowingAtDepth {
    std::size_t depth;
    friend bool operator==(const GrowingAtDepth &, const GrowingAtDepth &) = default;
};
using ProbeVerdict = std::variant<Stabilized, GrowingAtDepth>;

struct ProbeReport {
    std::vector<std::size_t> dims; // dims[k] = dim span{v, ..., ad_S^k v}
    ProbeVerdict verdict;
    std::vector<Element> spanning; // v, ad_S v, ... up to the last power computed
};

// Throws std::invalid_argument when depth < 1.
ProbeReport probe_local_finiteness(const Element &s, const Element &v, std::size_t depth);

// Whether ad_S maps every spanning vector back into their span.
bool krylov_invariant(const Element &s, const std::vector<Element> &spanning);

struct FoundZeroAt {
    std::size_t k;
    friend bool operator==(const FoundZeroAt &, const FoundZeroAt &) = default;
};
struct NonzeroThrough {
    std::size_t depth;
    friend bool operator==(const NonzeroThrough &, const NonzeroThrough &) = default;
};
using NilpotencyVerdict = std::variant<FoundZeroAt, NonzeroThrough>;

// Smallest k in 1..depth with ad_S^k v = 0.
NilpotencyVerdict nilpotency_check(const Element &s, const Element &v, std::size_t depth);

} // namespace block
