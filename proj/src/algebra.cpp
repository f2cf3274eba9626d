#include "block/algebra.hpp"

#include "block/errors.hpp"

#include <charconv>
#include <stdexcept>

namespace block {

BasisIndex make_index(std::int64_t alpha, std::int64_t i) {
    if (i < 0)
        throw std::invalid_argument("negative second index " + std::to_string(i));
    return {alpha, i};
}

Element Element::basis(std::int64_t alpha, std::int64_t i, const Scalar &coeff) {
    Element e;
    e.add_term(make_index(alpha, i), coeff);
    return e;
}

Element Element::central_unit(const Scalar &coeff) {
    Element e;
    e.central_ = coeff;
    return e;
}

void Element::add_term(const BasisIndex &idx, const Scalar &coeff) {
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(idx, coeff);
    if (inserted)
        return;
    it->second += coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

Scalar Element::coefficient(const BasisIndex &idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Element Element::without_central() const {
    Element e = *this;
    e.central_ = Scalar(0);
    return e;
}

Element &Element::operator+=(const Element &o) {
    for (const auto &[idx, c] : o.terms_)
        add_term(idx, c);
    central_ += o.central_;
    return *this;
}

Element &Element::operator-=(const Element &o) {
    for (const auto &[idx, c] : o.terms_)
        add_term(idx, -c);
    central_ -= o.central_;
    return *this;
}

Element &Element::operator*=(const Scalar &s) {
    if (s.is_zero()) {
        terms_.clear();
        central_ = Scalar(0);
        return *this;
    }
    for (auto &[idx, c] : terms_)
        c *= s;
    central_ *= s;
    return *this;
}

Element add(const Element &x, const Element &y) { return x + y; }
Element scale(const Scalar &lambda, const Element &x) { return lambda * x; }

AlgebraVariant AlgebraVariant::bsg(int s) {
    if (s != 0 && s != 1)
        throw std::invalid_argument("B(s,Z) requires s in {0,1}");
    return {AlgebraKind::BsG, s};
}

std::string AlgebraVariant::name() const {
    switch (kind) {
    case AlgebraKind::B:
        return "B";
    case AlgebraKind::BsG:
        return s == 0 ? "BsG0" : "BsG1";
    case AlgebraKind::BHat:
        return "BHat";
    }
    return "?";
}

AlgebraVariant AlgebraVariant::from_name(const std::string &name) {
    if (name == "B")
        return b();
    if (name == "BsG0")
        return bsg(0);
    if (name == "BsG1")
        return bsg(1);
    if (name == "BHat")
        return bhat();
    throw std::invalid_argument("unknown algebra '" + name + "' (expected B, BsG0, BsG1 or BHat)");
}

Window Window::make(std::int64_t alpha_min, std::int64_t alpha_max, std::int64_t i_max) {
    if (alpha_min > alpha_max)
        throw WindowError("window alpha_min > alpha_max");
    if (i_max < 0)
        throw WindowError("window i_max < 0");
    return {alpha_min, alpha_max, i_max};
}

Window Window::parse(const std::string &spec) {
    std::int64_t vals[3];
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        const auto end = k < 2 ? spec.find(':', pos) : spec.size();
        if (end == std::string::npos)
            throw WindowError("window '" + spec + "' is not of the form amin:amax:imax");
        const char *first = spec.data() + pos;
        const char *last = spec.data() + end;
        auto [p, ec] = std::from_chars(first, last, vals[k]);
        if (ec != std::errc() || p != last || first == last)
            throw WindowError("window '" + spec + "' is not of the form amin:amax:imax");
        pos = end + 1;
    }
    return make(vals[0], vals[1], vals[2]);
}

std::string Window::str() const {
    return std::to_string(alpha_min) + ":" + std::to_string(alpha_max) + ":" + std::to_string(i_max);
}

bool Window::contains(const Window &inner) const {
    return alpha_min <= inner.alpha_min && inner.alpha_max <= alpha_max && inner.i_max <= i_max;
}

std::vector<BasisIndex> Window::basis() const {
    std::vector<BasisIndex> out;
    out.reserve(static_cast<std::size_t>((alpha_max - alpha_min + 1) * (i_max + 1)));
    for (auto a = alpha_min; a <= alpha_max; ++a)
        for (std::int64_t i = 0; i <= i_max; ++i)
            out.push_back({a, i});
    return out;
}

std::int64_t b_coefficient(const BasisIndex &a, const BasisIndex &b) {
    return (a.alpha - 1) * (b.i + 1) - (b.alpha - 1) * (a.i + 1);
}

namespace {

void require_no_central(const Element &x, const char *op) {
    if (!x.central().is_zero())
        throw std::invalid_argument(std::string(op) + ": central component must be zero");
}

Scalar psi_hat_basis(const BasisIndex &a, const BasisIndex &b) {
    if (a.alpha + b.alpha != 0 || a.i != 0 || b.i != 0)
        return Scalar(0);
    return Scalar(a.alpha * a.alpha * a.alpha - a.alpha, 6);
}

} // namespace

Element bracket_b(const Element &x, const Element &y) {
    require_no_central(x, "bracket_b");
    require_no_central(y, "bracket_b");
    Element out;
    for (const auto &[a, ca] : x.terms())
        for (const auto &[b, cb] : y.terms()) {
            const auto k = b_coefficient(a, b);
            if (k != 0)
                out.add_term({a.alpha + b.alpha, a.i + b.i}, Scalar(k) * ca * cb);
        }
    return out;
}

Element bracket_bsg(int s, const Element &x, const Element &y) {
    if (s != 0 && s != 1)
        throw std::invalid_argument("bracket_bsg: s must be 0 or 1");
    require_no_central(x, "bracket_bsg");
    require_no_central(y, "bracket_bsg");
    Element out;
    for (const auto &[a, ca] : x.terms())
        for (const auto &[b, cb] : y.terms()) {
            const Scalar w = ca * cb;
            const auto first = s * (b.alpha - a.alpha);
            if (first != 0)
                out.add_term({a.alpha + b.alpha, a.i + b.i}, Scalar(first) * w);
            const auto second = (a.alpha - 1 + s) * b.i - (b.alpha - 1 + s) * a.i;
            if (a.i + b.i - 1 < 0) {
                if (second != 0)
                    throw std::logic_error("bracket_bsg: nonzero coefficient on a negative second index");
                continue;
            }
            if (second != 0)
                out.add_term({a.alpha + b.alpha, a.i + b.i - 1}, Scalar(second) * w);
        }
    return out;
}

Element bracket_hat(const Element &x, const Element &y) {
    Element out = bracket_b(x.without_central(), y.without_central());
    for (const auto &[a, ca] : x.terms())
        for (const auto &[b, cb] : y.terms()) {
            const Scalar c = psi_hat_basis(a, b);
            if (!c.is_zero())
                out.add_central(c * ca * cb);
        }
    return out;
}

Element bracket(const AlgebraVariant &v, const Element &x, const Element &y) {
    switch (v.kind) {
    case AlgebraKind::B:
        return bracket_b(x, y);
    case AlgebraKind::BsG:
        return bracket_bsg(v.s, x, y);
    case AlgebraKind::BHat:
        return bracket_hat(x, y);
    }
    throw std::logic_error("unknown algebra kind");
}

Element shift_iso_residual(const Element &x, const Element &y) {
    auto up = [](const Element &e) {
        Element out;
        for (const auto &[idx, c] : e.terms())
            out.add_term({idx.alpha, idx.i + 1}, c);
        return out;
    };
    const Element lifted = bracket_bsg(0, up(x.without_central()), up(y.without_central()));
    Element down;
    for (const auto &[idx, c] : lifted.terms()) {
        if (idx.i == 0)
            throw std::logic_error("shift_iso_residual: bracket left the image of the shift");
        down.add_term({idx.alpha, idx.i - 1}, c);
    }
    return down - bracket_b(x.without_central(), y.without_central());
}

Element jacobi_residual(const AlgebraVariant &v, const Element &x, const Element &y, const Element &z) {
    auto br = [&v](const Element &a, const Element &b) { return bracket(v, a, b); };
    // c is central, so the central part of an inner bracket brackets to zero.
    return br(br(x, y).without_central(), z) + br(br(y, z).without_central(), x) +
           br(br(z, x).without_central(), y);
}

namespace {

template <class Grade> std::optional<std::int64_t> common_grade(const Element &x, Grade grade) {
    if (x.terms().empty())
        throw ZeroElementError();
    const auto g = grade(x.terms().begin()->first);
    for (const auto &[idx, c] : x.terms())
        if (grade(idx) != g)
            return std::nullopt;
    return g;
}

} // namespace

std::optional<std::int64_t> eigen_degree(const Element &x) {
    return common_grade(x, [](const BasisIndex &b) { return b.alpha + b.i; });
}

std::optional<std::int64_t> first_grade(const Element &x) {
    return common_grade(x, [](const BasisIndex &b) { return b.alpha; });
}

Scalar cocycle_basis(CocycleKind kind, const BasisIndex &a, const BasisIndex &b) {
    switch (kind) {
    case CocycleKind::PhiEq12:
        if (a.alpha + b.alpha != 2 || a.i != 0 || b.i != 0)
            return Scalar(0);
        return Scalar(a.alpha - 1);
    case CocycleKind::PsiHat:
        return psi_hat_basis(a, b);
    }
    throw std::logic_error("unknown cocycle kind");
}

Scalar cocycle_value(CocycleKind kind, const Element &x, const Element &y) {
    Scalar out;
    for (const auto &[a, ca] : x.terms())
        for (const auto &[b, cb] : y.terms()) {
            const Scalar c = cocycle_basis(kind, a, b);
            if (!c.is_zero())
                out += c * ca * cb;
        }
    return out;
}

Scalar cocycle_residual(CocycleKind kind, const Element &x, const Element &y, const Element &z) {
    auto br = [kind](const Element &a, const Element &b) {
        return kind == CocycleKind::PhiEq12 ? bracket_bsg(0, a, b) : bracket_b(a, b);
    };
    const Element xs = x.without_central(), ys = y.without_central(), zs = z.without_central();
    return cocycle_value(kind, br(xs, ys), zs) + cocycle_value(kind, br(ys, zs), xs) +
           cocycle_value(kind, br(zs, xs), ys);
}

} // namespace block
