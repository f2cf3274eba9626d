#include "block/derivation.hpp"
#include "block/errors.hpp"
#include "block/sampling.hpp"

#include <doctest.h>

#include <algorithm>
#include <tuple>

using namespace block;

namespace {

Element L(std::int64_t a, std::int64_t i, const Scalar &c = Scalar(1)) { return Element::basis(a, i, c); }

Element truncate_rows(const Element &x, std::int64_t i_max) {
    Element out;
    for (const auto &[idx, c] : x.terms())
        if (idx.i <= i_max)
            out.add_term(idx, c);
    return out;
}

// Independent check of a windowed map: evaluates the truncated Leibniz rule
// with element brackets on every admissible pair and returns the number of
// failing pairs.
std::size_t truncated_leibniz_failures(const WindowedMap &m) {
    const Window &w = m.window;
    auto image = [&m](const BasisIndex &b) { return m.images.at(b); };
    std::size_t failures = 0;
    for (const auto &[x, dx] : m.images)
        for (const auto &[y, dy] : m.images) {
            const BasisIndex sum{x.alpha + y.alpha, x.i + y.i};
            if (!m.images.count(sum))
                continue;
            const Element lhs = Scalar(b_coefficient(x, y)) * image(sum);
            const Element rhs =
                truncate_rows(bracket_b(dx, L(y.alpha, y.i)) + bracket_b(L(x.alpha, x.i), dy), w.i_max);
            if (!(lhs == rhs))
                ++failures;
        }
    return failures;
}

} // namespace

TEST_CASE("applying derivation forms") {
    CHECK(apply_derivation(DerivationForm::d0(), L(5, 2)) == L(5, 2, 5));
    CHECK(apply_derivation(DerivationForm::d0(), L(0, 7)).is_zero());
    CHECK(apply_derivation(DerivationForm::inner(L(0, 0)), L(3, 2)) == L(3, 2, -5));
    const DerivationForm combo = DerivationForm::inner(L(0, 0)) + Scalar(2) * DerivationForm::d0();
    CHECK(apply_derivation(combo, L(3, 2)) == L(3, 2, 1));
    CHECK(DerivationForm::inner(Element{}).terms().empty());
    CHECK((Scalar(0) * DerivationForm::d0()).terms().empty());
}

TEST_CASE("Leibniz rule") {
    CHECK(leibniz_residual(DerivationForm::d0(), L(2, 1), L(3, 2)).is_zero());
    Sampler rng(7);
    for (int k = 0; k < 200; ++k) {
        DerivationForm d = DerivationForm::inner(rng.element());
        if (rng.coin())
            d += rng.coefficient() * DerivationForm::d0();
        const Element x = rng.element(), y = rng.element();
        CHECK(leibniz_residual(d, x, y).is_zero());
    }
    // The i-grading operator is a derivation: -ad_{L[0,0]} - d0.
    const DerivationForm grade_i = Scalar(-1) * DerivationForm::inner(L(0, 0)) + Scalar(-1) * DerivationForm::d0();
    CHECK(apply_derivation(grade_i, L(4, 3)) == L(4, 3, 3));
}

TEST_CASE("constraint system on a single column") {
    const auto sys = build_constraints(0, Window::make(0, 0, 0));
    CHECK(sys.unknowns.size() == 1);
    CHECK(sys.rows.empty());
    CHECK(solve_nullspace(sys).maps.size() == 1);
}

TEST_CASE("constraint system layout is deterministic") {
    const Window w = Window::make(-2, 2, 1);
    const auto a = build_constraints(1, w), b = build_constraints(1, w);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t k = 0; k < a.rows.size(); ++k)
        CHECK(a.rows[k].coefficients == b.rows[k].coefficients);
    CHECK(std::is_sorted(a.unknowns.begin(), a.unknowns.end()));
    CHECK(std::is_sorted(a.rows.begin(), a.rows.end(), [](const ConstraintRow &x, const ConstraintRow &y) {
        return std::tie(x.left, x.right, x.output_row) < std::tie(y.left, y.right, y.output_row);
    }));
    for (const auto &row : a.rows)
        for (const auto &[col, v] : row.coefficients)
            CHECK(col < a.unknowns.size());
}

TEST_CASE("known derivations solve the windowed system") {
    const Window w = Window::make(-4, 4, 2);
    for (std::int64_t degree = -2; degree <= 2; ++degree) {
        const auto sys = build_constraints(degree, w);
        std::vector<WindowedMap> known;
        for (std::int64_t p = 0; p <= w.i_max; ++p)
            known.push_back(WindowedMap::from_derivation(DerivationForm::inner(L(degree, p)), degree, w));
        if (degree == 0)
            known.push_back(WindowedMap::from_derivation(DerivationForm::d0(), degree, w));
        for (const auto &m : known) {
            CHECK(truncated_leibniz_failures(m) == 0);
            for (const auto &row : sys.rows) {
                Scalar s;
                for (const auto &[col, v] : row.coefficients) {
                    const auto &u = sys.unknowns[col];
                    s += Scalar(mpq_class(v)) * m.entry(u.beta, u.j, u.k);
                }
                REQUIRE(s.is_zero());
            }
        }
    }
}

TEST_CASE("solver solutions pass the independent Leibniz check") {
    for (const auto &[degree, w] : {std::pair{0, Window::make(-2, 2, 1)}, std::pair{3, Window::make(-6, 6, 3)},
                                    std::pair{-1, Window::make(-4, 4, 2)}}) {
        const auto basis = solve_nullspace(build_constraints(degree, w));
        for (const auto &m : basis.maps)
            CHECK(truncated_leibniz_failures(m) == 0);
    }
}

TEST_CASE("degree 0 on a small window satisfies the leading-row recurrences") {
    const Window w = Window::make(-2, 2, 1);
    const auto basis = solve_nullspace(build_constraints(0, w));
    CHECK_FALSE(basis.maps.empty());
    for (const auto &m : basis.maps) {
        const auto v = recurrence_check(m);
        CHECK_MESSAGE(v.empty(), (v.empty() ? "" : v.front()));
    }
}

TEST_CASE("degree 3 solutions are exactly the windowed inner derivations") {
    const Window w = Window::make(-6, 6, 3);
    const auto sys = build_constraints(3, w);
    const auto basis = solve_nullspace(sys);
    // ad_{L[3,p]} for p = 0..3 are the only degree-3 derivations visible on the window.
    CHECK(basis.maps.size() == 4);
    std::vector<linalg::RatRow> vectors;
    auto vectorize = [&sys](const WindowedMap &m) {
        linalg::RatRow v;
        for (std::size_t c = 0; c < sys.unknowns.size(); ++c) {
            const auto &u = sys.unknowns[c];
            if (const Scalar e = m.entry(u.beta, u.j, u.k); !e.is_zero())
                v.emplace_back(c, e);
        }
        return v;
    };
    linalg::EchelonBasis solutions;
    for (const auto &m : basis.maps)
        solutions.insert(vectorize(m));
    CHECK(solutions.rank() == 4);
    for (std::int64_t p = 0; p <= 3; ++p)
        CHECK(solutions.contains(vectorize(WindowedMap::from_derivation(DerivationForm::inner(L(3, p)), 3, w))));
}

TEST_CASE("windowed H^1") {
    const Window window = Window::make(-6, 6, 4), interior = Window::make(-3, 3, 2);
    CHECK(h1_dimension(1, window, interior) == 0);
    CHECK(h1_dimension(0, window, interior) == 1);
    CHECK(h1_dimension(-2, window, interior) == 0);

    const H1Report rep = h1_report(0, window, interior);
    CHECK(rep.inner_rank == static_cast<std::size_t>(interior.i_max + 1));
    CHECK(rep.d0_in_solutions);
    CHECK(rep.beyond_d0 == 0);

    CHECK_THROWS_AS(h1_dimension(0, window, Window::make(-5, 3, 2)), WindowTooSmallError);
    CHECK_THROWS_AS(h1_dimension(0, window, Window::make(-3, 3, 4)), WindowTooSmallError);
    CHECK_THROWS_AS(h1_dimension(0, window, Window::make(-7, 3, 2)), WindowTooSmallError);
    CHECK_NOTHROW(h1_dimension(0, window, Window::make(-4, 4, 3)));
}

TEST_CASE("recurrence check") {
    const Window w = Window::make(-3, 3, 2);
    // e_{b,j} = b with e_{1,0} = 1, e_{0,1} = 0
    CHECK(recurrence_check(WindowedMap::from_derivation(DerivationForm::d0(), 0, w)).empty());
    // e_{b,j} = -(b+j)
    const auto ad00 = WindowedMap::from_derivation(DerivationForm::inner(L(0, 0)), 0, w);
    CHECK(ad00.entry(2, 1, 1) == Scalar(-3));
    CHECK(recurrence_check(ad00).empty());
    CHECK(recurrence_check(WindowedMap{0, w, {}}).empty());
    // a + i = 0 with i = 2
    CHECK(recurrence_check(WindowedMap::from_derivation(DerivationForm::inner(L(-2, 2)), -2, w)).empty());
    CHECK(recurrence_check(WindowedMap::from_derivation(DerivationForm::inner(L(1, 1) + L(1, 0)), 1, w)).empty());

    // The identity map is not a derivation.
    WindowedMap id{0, w, {}};
    for (const auto &src : WindowedMap::sources(0, w))
        id.images.emplace(src, L(src.alpha, src.i));
    CHECK_FALSE(recurrence_check(id).empty());
}

TEST_CASE("d0 is outer at window scale") {
    const Window window = Window::make(-6, 6, 4), interior = Window::make(-3, 3, 2);
    CHECK_FALSE(inner_realization_exists(DerivationForm::d0(), window, interior));
    const DerivationForm inner = DerivationForm::inner(L(2, 1) - L(0, 0, Scalar(1, 3)));
    CHECK(inner_realization_exists(inner, window, interior));
}
