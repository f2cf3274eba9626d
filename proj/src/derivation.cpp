#include "block/derivation.hpp"

#include "block/errors.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace block {

DerivationForm DerivationForm::d0() {
    DerivationForm d;
    d.add(Scalar(1), D0Atom{});
    return d;
}

DerivationForm DerivationForm::inner(const Element &u) {
    DerivationForm d;
    d.add(Scalar(1), InnerAtom{u.without_central()});
    return d;
}

DerivationForm &DerivationForm::add(const Scalar &weight, const DerivationAtom &atom) {
    if (weight.is_zero())
        return *this;
    if (const auto *in = std::get_if<InnerAtom>(&atom); in && in->u.is_zero())
        return *this;
    terms_.push_back({weight, atom});
    return *this;
}

DerivationForm &DerivationForm::operator+=(const DerivationForm &o) {
    for (const auto &t : o.terms_)
        add(t.weight, t.atom);
    return *this;
}

DerivationForm operator*(const Scalar &s, const DerivationForm &d) {
    DerivationForm out;
    for (const auto &t : d.terms())
        out.add(s * t.weight, t.atom);
    return out;
}

Element apply_derivation(const DerivationForm &d, const Element &x) {
    const Element xs = x.without_central();
    Element out;
    for (const auto &t : d.terms()) {
        if (const auto *in = std::get_if<InnerAtom>(&t.atom)) {
            out += t.weight * bracket_b(in->u, xs);
        } else {
            for (const auto &[idx, c] : xs.terms())
                out.add_term(idx, t.weight * Scalar(idx.alpha) * c);
        }
    }
    return out;
}

Element leibniz_residual(const DerivationForm &d, const Element &x, const Element &y) {
    return apply_derivation(d, bracket_b(x, y)) - bracket_b(apply_derivation(d, x), y) -
           bracket_b(x, apply_derivation(d, y));
}

std::vector<BasisIndex> WindowedMap::sources(std::int64_t degree, const Window &w) {
    std::vector<BasisIndex> out;
    for (const auto &idx : w.basis())
        if (w.contains_alpha(degree + idx.alpha))
            out.push_back(idx);
    return out;
}

WindowedMap WindowedMap::from_derivation(const DerivationForm &d, std::int64_t degree, const Window &w) {
    WindowedMap m{degree, w, {}};
    for (const auto &src : sources(degree, w)) {
        const Element img = apply_derivation(d, Element::basis(src.alpha, src.i));
        Element kept;
        for (const auto &[idx, c] : img.terms())
            if (idx.alpha == degree + src.alpha && idx.i <= w.i_max)
                kept.add_term(idx, c);
        m.images.emplace(src, std::move(kept));
    }
    return m;
}

WindowedMap WindowedMap::restrict_to(const Window &inner) const {
    WindowedMap m{degree, inner, {}};
    for (const auto &src : sources(degree, inner)) {
        Element kept;
        if (auto it = images.find(src); it != images.end())
            for (const auto &[idx, c] : it->second.terms())
                if (idx.i <= inner.i_max)
                    kept.add_term(idx, c);
        m.images.emplace(src, std::move(kept));
    }
    return m;
}

Scalar WindowedMap::entry(std::int64_t b, std::int64_t j, std::int64_t k) const {
    auto it = images.find({b, j});
    if (it == images.end() || k < 0)
        return Scalar(0);
    return it->second.coefficient({degree + b, k});
}

bool WindowedMap::is_zero() const {
    for (const auto &[src, img] : images)
        if (!img.is_zero())
            return false;
    return true;
}

WindowedMap ConstraintSystem::to_map(const linalg::RatRow &solution) const {
    WindowedMap m{degree, window, {}};
    for (const auto &src : WindowedMap::sources(degree, window))
        m.images.emplace(src, Element{});
    for (const auto &[col, value] : solution) {
        const auto &u = unknowns.at(col);
        m.images[{u.beta, u.j}].add_term({degree + u.beta, u.k}, value);
    }
    return m;
}

ConstraintSystem build_constraints(std::int64_t degree, const Window &window) {
    ConstraintSystem sys;
    sys.degree = degree;
    sys.window = window;
    const auto srcs = WindowedMap::sources(degree, window);
    for (const auto &s : srcs)
        for (std::int64_t k = 0; k <= window.i_max; ++k) {
            UnknownLabel u{s.alpha, s.i, k};
            sys.column.emplace(u, sys.unknowns.size());
            sys.unknowns.push_back(u);
        }

    auto col = [&sys](std::int64_t b, std::int64_t j, std::int64_t k) { return sys.column.at({b, j, k}); };
    const auto a = degree;
    const auto top = window.i_max;

    // Unordered pairs: the swapped pair yields the negated equation.
    for (std::size_t p = 0; p < srcs.size(); ++p)
        for (std::size_t q = p; q < srcs.size(); ++q) {
            const BasisIndex &x = srcs[p];
            const BasisIndex &y = srcs[q];
            const auto sum_alpha = x.alpha + y.alpha;
            if (!window.contains_alpha(sum_alpha) || !window.contains_alpha(a + sum_alpha) ||
                x.i + y.i > top)
                continue;
            const auto c = b_coefficient(x, y);
            for (std::int64_t r = 0; r <= top; ++r) {
                std::map<std::size_t, mpz_class> acc;
                // D([x,y]) = c D(L[x+y])
                if (c != 0)
                    acc[col(sum_alpha, x.i + y.i, r)] += c;
                // - [D x, y]: e(x, m) [L[a+bx, m], y] lands on row m + y.i
                if (const auto m = r - y.i; m >= 0) {
                    const auto k = b_coefficient({a + x.alpha, m}, y);
                    if (k != 0)
                        acc[col(x.alpha, x.i, m)] -= k;
                }
                // - [x, D y]
                if (const auto m = r - x.i; m >= 0) {
                    const auto k = b_coefficient(x, {a + y.alpha, m});
                    if (k != 0)
                        acc[col(y.alpha, y.i, m)] -= k;
                }
                linalg::IntRow row;
                for (auto &[cidx, v] : acc)
                    if (v != 0)
                        row.emplace_back(cidx, std::move(v));
                if (!row.empty())
                    sys.rows.push_back({x, y, r, std::move(row)});
            }
        }
    return sys;
}

SolutionBasis solve_nullspace(const ConstraintSystem &sys) {
    linalg::EchelonBasis echelon;
    for (const auto &row : sys.rows)
        echelon.insert(row.coefficients);
    SolutionBasis out;
    for (const auto &v : echelon.nullspace(sys.unknowns.size()))
        out.maps.push_back(sys.to_map(v));
    return out;
}

namespace {

// Coordinates of a windowed map on a fixed window, ordered like the solver's unknowns.
class MapCoordinates {
  public:
    MapCoordinates(std::int64_t degree, const Window &w) : degree_(degree), window_(w) {
        for (const auto &s : WindowedMap::sources(degree, w))
            for (std::int64_t k = 0; k <= w.i_max; ++k)
                index_.emplace(UnknownLabel{s.alpha, s.i, k}, index_.size());
    }

    [[nodiscard]] linalg::RatRow of(const WindowedMap &m) const {
        const WindowedMap r = m.window == window_ ? m : m.restrict_to(window_);
        linalg::RatRow out;
        for (const auto &[src, img] : r.images)
            for (const auto &[idx, c] : img.terms()) {
                auto it = index_.find({src.alpha, src.i, idx.i});
                if (it != index_.end() && idx.alpha == degree_ + src.alpha)
                    out.emplace_back(it->second, c);
            }
        std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
        return out;
    }

  private:
    std::int64_t degree_;
    Window window_;
    std::map<UnknownLabel, std::size_t> index_;
};

void require_margins(const Window &window, const Window &interior) {
    if (!window.contains(interior))
        throw WindowTooSmallError("interior " + interior.str() + " is not inside window " + window.str());
    if (interior.alpha_min - window.alpha_min < 2 || window.alpha_max - interior.alpha_max < 2)
        throw WindowTooSmallError("interior needs an alpha margin of at least 2 inside the window");
    if (window.i_max - interior.i_max < 1)
        throw WindowTooSmallError("interior needs an i margin of at least 1 inside the window");
}

} // namespace

H1Report h1_report(std::int64_t degree, const Window &window, const Window &interior) {
    require_margins(window, interior);
    const SolutionBasis basis = solve_nullspace(build_constraints(degree, window));
    const MapCoordinates coords(degree, interior);

    H1Report rep;
    rep.solutions = basis.maps.size();

    linalg::EchelonBasis s_span, inner_span, combined;
    for (const auto &m : basis.maps) {
        WindowedMap r = m.restrict_to(interior);
        const auto v = coords.of(r);
        s_span.insert(v);
        combined.insert(v);
        if (!r.is_zero())
            rep.restricted.push_back(std::move(r));
    }
    std::vector<linalg::RatRow> inner_vectors;
    for (std::int64_t p = 0; p <= interior.i_max; ++p) {
        const auto ad = DerivationForm::inner(Element::basis(degree, p));
        inner_vectors.push_back(coords.of(WindowedMap::from_derivation(ad, degree, interior)));
        inner_span.insert(inner_vectors.back());
        combined.insert(inner_vectors.back());
    }
    rep.solution_rank = s_span.rank();
    rep.inner_rank = inner_span.rank();
    rep.combined_rank = combined.rank();
    rep.h1 = rep.combined_rank - rep.inner_rank;

    const auto d0v = coords.of(WindowedMap::from_derivation(DerivationForm::d0(), degree, interior));
    rep.d0_in_solutions = degree == 0 && s_span.reduce(linalg::to_integer_row(d0v)).empty();
    auto with_d0 = inner_span;
    with_d0.insert(d0v);
    auto all = combined;
    all.insert(d0v);
    rep.beyond_d0 = all.rank() - with_d0.rank();
    return rep;
}

std::size_t h1_dimension(std::int64_t degree, const Window &window, const Window &interior) {
    return h1_report(degree, window, interior).h1;
}

namespace {

class LeadingRow {
  public:
    LeadingRow(const WindowedMap &m, std::int64_t offset) : m_(m), offset_(offset) {}

    // e_{b,j}; nullopt where it is not determined by the window. Rows below 0
    // do not exist and read as zero.
    [[nodiscard]] std::optional<Scalar> operator()(std::int64_t b, std::int64_t j) const {
        if (j < 0 || !m_.images.count({b, j}))
            return std::nullopt;
        const auto row = offset_ + j;
        if (row < 0)
            return Scalar(0);
        if (row > m_.window.i_max)
            return std::nullopt;
        return m_.entry(b, j, row);
    }

  private:
    const WindowedMap &m_;
    std::int64_t offset_;
};

} // namespace

std::vector<std::string> recurrence_check(const WindowedMap &solution) {
    std::vector<std::string> violations;
    std::optional<std::int64_t> top;
    for (const auto &[src, img] : solution.images)
        for (const auto &[idx, c] : img.terms())
            if (idx.alpha == solution.degree + src.alpha)
                top = std::max(top.value_or(idx.i - src.i), idx.i - src.i);
    if (!top)
        return violations;

    const std::int64_t a = solution.degree;
    const std::int64_t i = *top;
    const LeadingRow e(solution, i);
    const Window &w = solution.window;

    auto report = [&violations](const std::string &name, std::int64_t b, std::int64_t j, const Scalar &lhs,
                                const Scalar &rhs) {
        if (lhs == rhs)
            return;
        std::ostringstream os;
        os << name << " fails at beta=" << b << " j=" << j << ": " << lhs << " != " << rhs;
        violations.push_back(os.str());
    };

    // Leading-row Leibniz constraint for every pair.
    for (const auto &x : solution.images)
        for (const auto &y : solution.images) {
            const auto [b, j] = x.first;
            const auto [g, k] = y.first;
            const auto ebj = e(b, j), egk = e(g, k), esum = e(b + g, j + k);
            if (!ebj || !egk || !esum)
                continue;
            const Scalar lhs = Scalar((a + b - 1) * (k + 1) - (g - 1) * (i + j + 1)) * *ebj +
                               Scalar((b - 1) * (i + k + 1) - (a + g - 1) * (j + 1)) * *egk;
            const Scalar rhs = Scalar((b - 1) * (k + 1) - (g - 1) * (j + 1)) * *esum;
            if (lhs != rhs) {
                std::ostringstream os;
                os << "leading Leibniz constraint fails for (" << b << "," << j << "),(" << g << "," << k
                   << "): " << lhs << " != " << rhs;
                violations.push_back(os.str());
            }
        }

    const auto e00 = e(0, 0), e10 = e(1, 0), em10 = e(-1, 0), e01 = e(0, 1);
    for (std::int64_t b = w.alpha_min; b <= w.alpha_max; ++b)
        for (std::int64_t j = 0; j <= w.i_max; ++j) {
            const auto ebj = e(b, j);
            if (!ebj)
                continue;
            if (a + i != 0) {
                if (e00)
                    report("(a+i) e_{b,j} = ((a-1)(j+1)-(b-1)(i+1)) e_{0,0}", b, j, Scalar(a + i) * *ebj,
                           Scalar((a - 1) * (j + 1) - (b - 1) * (i + 1)) * *e00);
                continue;
            }
            // a + i == 0 from here on.
            const auto eprev = e(b - 1, j);
            if (eprev && e10)
                report("bracket with L[1,0]", b, j,
                       Scalar(b - i - 2) * *eprev + Scalar((b - 2) * (i + 1) + i * (j + 1)) * *e10,
                       Scalar(b - 2) * *ebj);
            if (eprev && em10)
                report("bracket with L[-1,0]", b, j,
                       Scalar(b + i + 2 * j + 1) * *ebj + Scalar((b - 1) * (i + 1) + (i + 2) * (j + 1)) * *em10,
                       Scalar(b + 2 * j + 1) * *eprev);
            if (i != 0) {
                if (e10)
                    report("e_{b,j} = (b+j) e_{1,0}", b, j, *ebj, Scalar(b + j) * *e10);
            } else {
                if (const auto e0j = e(0, j); e10 && e0j)
                    report("e_{b,j} = b e_{1,0} + e_{0,j}", b, j, *ebj, Scalar(b) * *e10 + *e0j);
                if (e10 && e01)
                    report("e_{b,j} = b e_{1,0} + j e_{0,1}", b, j, *ebj, Scalar(b) * *e10 + Scalar(j) * *e01);
            }
        }

    if (a + i == 0) {
        if (i != 0 && e00)
            report("e_{0,0} = 0", 0, 0, *e00, Scalar(0));
        if (e10 && em10)
            report("e_{-1,0} + e_{1,0} = 0", 0, 0, *em10 + *e10, Scalar(0));
    }
    return violations;
}

bool inner_realization_exists(const DerivationForm &d, const Window &window, const Window &interior) {
    // Coordinates: (source in interior, output basis index).
    std::map<std::pair<BasisIndex, BasisIndex>, std::size_t> coord;
    auto vectorize = [&coord](const BasisIndex &src, const Element &img, linalg::RatRow &out) {
        for (const auto &[idx, c] : img.terms()) {
            auto [it, _] = coord.try_emplace({src, idx}, coord.size());
            out.emplace_back(it->second, c);
        }
    };
    const auto sources = interior.basis();

    linalg::RatRow target;
    for (const auto &src : sources)
        vectorize(src, apply_derivation(d, Element::basis(src.alpha, src.i)), target);

    std::vector<linalg::RatRow> generators;
    for (const auto &u : window.basis()) {
        linalg::RatRow g;
        for (const auto &src : sources)
            vectorize(src, bracket_b(Element::basis(u.alpha, u.i), Element::basis(src.alpha, src.i)), g);
        generators.push_back(std::move(g));
    }
    auto sorted = [](linalg::RatRow r) {
        std::sort(r.begin(), r.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
        return r;
    };
    for (auto &g : generators)
        g = sorted(std::move(g));
    return linalg::in_span(generators, sorted(std::move(target)));
}

} // namespace block
