#include "block/automorphism.hpp"

#include "block/errors.hpp"
#include "block/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace block {

AutParams::AutParams(Scalar mu, Scalar nu, int xi) : mu_(std::move(mu)), nu_(std::move(nu)), xi_(xi) {
    if (mu_.is_zero() || nu_.is_zero())
        throw std::invalid_argument("automorphism parameters mu and nu must be nonzero");
    if (xi_ != 1 && xi_ != -1)
        throw std::invalid_argument("automorphism parameter xi must be +1 or -1");
}

std::string AutParams::str() const { return mu_.str() + "," + nu_.str() + "," + std::to_string(xi_); }

AutParams AutParams::parse(const std::string &text) {
    const auto c1 = text.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : text.find(',', c1 + 1);
    if (c2 == std::string::npos || text.find(',', c2 + 1) != std::string::npos)
        throw std::invalid_argument("automorphism '" + text + "' is not of the form mu,nu,xi");
    const std::string xi = text.substr(c2 + 1);
    if (xi != "1" && xi != "+1" && xi != "-1")
        throw std::invalid_argument("xi must be 1 or -1, got '" + xi + "'");
    return {Scalar::parse(text.substr(0, c1)), Scalar::parse(text.substr(c1 + 1, c2 - c1 - 1)), xi == "-1" ? -1 : 1};
}

BasisIndex aut_image_index(const AutParams &t, const BasisIndex &b) {
    return {t.xi() * (b.alpha + b.i) - b.i, b.i};
}

Element aut_apply(const AutParams &t, const Element &x) {
    Element out;
    for (const auto &[idx, c] : x.terms()) {
        const Scalar k = Scalar(t.xi()) * t.mu().pow(idx.alpha) * t.nu().pow(idx.i);
        out.add_term(aut_image_index(t, idx), k * c);
    }
    return out;
}

AutParams aut_compose(const AutParams &outer, const AutParams &inner) {
    const int xi1 = inner.xi();
    return {inner.mu() * outer.mu().pow(xi1), inner.nu() * outer.nu() * outer.mu().pow(xi1 - 1),
            xi1 * outer.xi()};
}

AutParams aut_invert(const AutParams &t) {
    // Solve compose(inv, t) = identity for inv.
    const Scalar mu = t.mu().pow(-t.xi());
    return {mu, (t.nu() * mu.pow(t.xi() - 1)).inverse(), t.xi()};
}

Element hom_residual(const AutParams &t, const Element &x, const Element &y) {
    const Element xs = x.without_central(), ys = y.without_central();
    return aut_apply(t, bracket_b(xs, ys)) - bracket_b(aut_apply(t, xs), aut_apply(t, ys));
}

namespace {

void require_witt(const Element &x) {
    for (const auto &[idx, c] : x.terms())
        if (idx.i != 0)
            throw NotInWittError();
}

} // namespace

Element witt_apply(const WittAutParams &w, const Element &x) {
    require_witt(x);
    Element out;
    for (const auto &[idx, c] : x.terms()) {
        if (const auto *chi = std::get_if<ChiMu>(&w)) {
            out.add_term(idx, chi->mu.pow(idx.alpha) * c);
        } else {
            const int s = std::get<ChiPrime>(w).s;
            if (s != 1 && s != -1)
                throw std::invalid_argument("chi' requires s = +1 or -1");
            out.add_term({s * idx.alpha, 0}, Scalar(s) * c);
        }
    }
    return out;
}

Element witt_hom_residual(const WittAutParams &w, const Element &x, const Element &y) {
    const Element xs = x.without_central(), ys = y.without_central();
    return witt_apply(w, bracket_b(xs, ys)) - bracket_b(witt_apply(w, xs), witt_apply(w, ys));
}

MinimalTerm minimal_term(const Element &x) {
    if (x.terms().empty())
        throw ZeroElementError();
    // Terms are sorted by (alpha asc, i asc): take the last term of the first column.
    const auto a0 = x.terms().begin()->first.alpha;
    auto it = x.terms().lower_bound({a0 + 1, 0});
    --it;
    return {it->first.alpha, it->first.i, it->second};
}

Scalar step_coefficient(std::int64_t a0, std::int64_t i0, std::int64_t beta, std::int64_t j) {
    return Scalar((a0 - 1) * (j + 1) - (beta - 1) * (i0 + 1));
}

namespace {

// Coordinates for elements of B, assigned on first sight.
class ElementCoordinates {
  public:
    linalg::RatRow of(const Element &x) {
        linalg::RatRow row;
        for (const auto &[idx, c] : x.terms()) {
            auto [it, _] = index_.try_emplace(idx, index_.size());
            row.emplace_back(it->second, c);
        }
        std::sort(row.begin(), row.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        return row;
    }

  private:
    std::map<BasisIndex, std::size_t> index_;
};

} // namespace

ProbeReport probe_local_finiteness(const Element &s, const Element &v, std::size_t depth) {
    if (depth < 1)
        throw std::invalid_argument("probe depth must be at least 1");
    const Element ss = s.without_central();
    ElementCoordinates coords;
    linalg::EchelonBasis span;
    ProbeReport rep{{}, GrowingAtDepth{depth}, {}};

    Element w = v.without_central();
    span.insert(coords.of(w));
    rep.dims.push_back(span.rank());
    rep.spanning.push_back(w);
    for (std::size_t k = 1; k <= depth; ++k) {
        w = bracket_b(ss, w);
        span.insert(coords.of(w));
        rep.dims.push_back(span.rank());
        rep.spanning.push_back(w);
        if (rep.dims[k] == rep.dims[k - 1]) {
            rep.verdict = Stabilized{rep.dims[k]};
            return rep;
        }
    }
    return rep;
}

bool krylov_invariant(const Element &s, const std::vector<Element> &spanning) {
    ElementCoordinates coords;
    linalg::EchelonBasis span;
    for (const auto &w : spanning)
        span.insert(coords.of(w));
    const Element ss = s.without_central();
    for (const auto &w : spanning)
        if (!span.contains(coords.of(bracket_b(ss, w))))
            return false;
    return true;
}

NilpotencyVerdict nilpotency_check(const Element &s, const Element &v, std::size_t depth) {
    if (depth < 1)
        throw std::invalid_argument("nilpotency depth must be at least 1");
    const Element ss = s.without_central();
    Element w = v.without_central();
    for (std::size_t k = 1; k <= depth; ++k) {
        w = bracket_b(ss, w);
        if (w.is_zero())
            return FoundZeroAt{k};
    }
    return NonzeroThrough{depth};
}

} // namespace block
