#include "block/suites.hpp"

#include "block/automorphism.hpp"
#include "block/derivation.hpp"
#include "block/sampling.hpp"
#include "block/text.hpp"

#include <chrono>
#include <sstream>

namespace block::suites {

namespace {

// Counts checks and keeps the first failure message.
class Tally {
  public:
    void check(bool ok, const std::string &what) {
        ++checks_;
        if (!ok && first_failure_.empty())
            first_failure_ = what;
    }
    [[nodiscard]] bool ok() const { return first_failure_.empty(); }
    [[nodiscard]] std::size_t checks() const { return checks_; }
    [[nodiscard]] const std::string &failure() const { return first_failure_; }

  private:
    std::size_t checks_ = 0;
    std::string first_failure_;
};

template <class Body> SuiteResult timed(int id, std::string name, double budget, Body body) {
    SuiteResult r{id, std::move(name), false, {}, 0.0, budget};
    const auto t0 = std::chrono::steady_clock::now();
    Tally tally;
    std::string extra;
    try {
        extra = body(tally);
    } catch (const std::exception &e) {
        tally.check(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = tally.ok();
    std::ostringstream os;
    if (tally.ok())
        os << tally.checks() << " checks" << (extra.empty() ? "" : "; ") << extra;
    else
        os << tally.failure();
    r.detail = os.str();
    return r;
}

std::string show(const Element &x) { return render_element(x); }

std::size_t or_default(std::size_t n, std::size_t dflt) { return n == 0 ? dflt : n; }

} // namespace

SuiteResult lie_axioms(const SampleOptions &opt) {
    return timed(1, "Lie axioms (antisymmetry, Jacobi) on B, BsG0, BsG1, BHat", 5.0, [&](Tally &t) {
        const std::size_t n = or_default(opt.samples, 500);
        for (const auto &v : {AlgebraVariant::b(), AlgebraVariant::bsg(0), AlgebraVariant::bsg(1),
                              AlgebraVariant::bhat()}) {
            Sampler rng(opt.seed);
            const bool hat = v.kind == AlgebraKind::BHat;
            for (std::size_t k = 0; k < n; ++k) {
                const Element x = rng.element(hat), y = rng.element(hat), z = rng.element(hat);
                const Element anti = bracket(v, x, y) + bracket(v, y, x);
                t.check(anti.is_zero(), v.name() + " antisymmetry fails for " + show(x) + ", " + show(y));
                const Element jac = jacobi_residual(v, x, y, z);
                t.check(jac.is_zero(), v.name() + " Jacobi residual " + show(jac));
            }
        }
        return std::string();
    });
}

SuiteResult shift_isomorphism(const SampleOptions &opt) {
    return timed(2, "shift isomorphism L[a,i] = x[a,i+1] into B(0,Z)", 2.0, [&](Tally &t) {
        Sampler rng(opt.seed);
        const std::size_t n = or_default(opt.samples, 200);
        for (std::size_t k = 0; k < n; ++k) {
            const Element x = rng.element(), y = rng.element();
            const Element r = shift_iso_residual(x, y);
            t.check(r.is_zero(), "residual " + show(r) + " for " + show(x) + ", " + show(y));
        }
        return std::string();
    });
}

SuiteResult cocycles() {
    return timed(3, "2-cocycles PhiEq12 and PsiHat on alpha in [-4,4], i <= 2", 30.0, [&](Tally &t) {
        const auto basis = Window::make(-4, 4, 2).basis();
        for (const auto kind : {CocycleKind::PhiEq12, CocycleKind::PsiHat}) {
            const std::string name = kind == CocycleKind::PhiEq12 ? "PhiEq12" : "PsiHat";
            std::vector<Element> elems;
            for (const auto &b : basis)
                elems.push_back(Element::basis(b.alpha, b.i));
            for (const auto &x : elems)
                for (const auto &y : elems)
                    t.check(cocycle_value(kind, x, y) == -cocycle_value(kind, y, x),
                            name + " antisymmetry fails for " + show(x) + ", " + show(y));
            for (const auto &x : elems)
                for (const auto &y : elems)
                    for (const auto &z : elems) {
                        const Scalar r = cocycle_residual(kind, x, y, z);
                        t.check(r.is_zero(), name + " cocycle residual " + r.str() + " on " + show(x) + ", " +
                                                 show(y) + ", " + show(z));
                    }
        }
        return std::string();
    });
}

SuiteResult derivations(const SampleOptions &opt) {
    return timed(4, "derivations: Leibniz rule and d0 outer on the window", 10.0, [&](Tally &t) {
        Sampler rng(opt.seed);
        const std::size_t n = or_default(opt.samples, 200);
        const DerivationForm d0 = DerivationForm::d0();
        for (std::size_t k = 0; k < n; ++k) {
            const Element x = rng.element(), y = rng.element();
            t.check(leibniz_residual(d0, x, y).is_zero(), "d0 Leibniz fails on " + show(x) + ", " + show(y));
        }
        for (std::size_t k = 0; k < n; ++k) {
            DerivationForm d = DerivationForm::inner(rng.element());
            if (rng.coin())
                d += rng.coefficient() * DerivationForm::d0();
            if (rng.coin())
                d += rng.coefficient() * DerivationForm::inner(rng.element());
            const Element x = rng.element(), y = rng.element();
            const Element r = leibniz_residual(d, x, y);
            t.check(r.is_zero(), "Leibniz residual " + show(r));
        }
        const Window window = Window::make(-6, 6, 4), interior = Window::make(-3, 3, 2);
        const bool feasible = inner_realization_exists(d0, window, interior);
        t.check(!feasible, "found u in the window with ad_u = d0 on the interior");
        return std::string("ad_u = d0 infeasible on ") + window.str() + " / " + interior.str();
    });
}

SuiteResult h1_windows() {
    return timed(5, "windowed H^1: 1 at degree 0, 0 at degrees -3..-1, 1..3", 60.0, [&](Tally &t) {
        const std::pair<Window, Window> configs[] = {{Window::make(-6, 6, 4), Window::make(-3, 3, 2)},
                                                     {Window::make(-8, 8, 5), Window::make(-4, 4, 3)}};
        std::ostringstream values;
        for (const auto &[window, interior] : configs) {
            values << window.str() << "/" << interior.str() << ":";
            for (std::int64_t a = -3; a <= 3; ++a) {
                const auto h = h1_dimension(a, window, interior);
                const std::size_t expected = a == 0 ? 1 : 0;
                values << ' ' << h;
                t.check(h == expected, "h1(degree " + std::to_string(a) + ", " + window.str() + ", " +
                                           interior.str() + ") = " + std::to_string(h) + ", expected " +
                                           std::to_string(expected));
            }
            values << "; ";
        }
        std::string s = values.str();
        return s.substr(0, s.size() - 2);
    });
}

SuiteResult recurrences() {
    return timed(6, "solver solutions satisfy the leading-row recurrences", 10.0, [&](Tally &t) {
        const std::pair<Window, Window> configs[] = {{Window::make(-6, 6, 4), Window::make(-3, 3, 2)},
                                                     {Window::make(-8, 8, 5), Window::make(-4, 4, 3)}};
        std::size_t maps = 0;
        for (const auto &[window, interior] : configs)
            for (std::int64_t a = -3; a <= 3; ++a) {
                const H1Report rep = h1_report(a, window, interior);
                for (const auto &m : rep.restricted) {
                    ++maps;
                    const auto v = recurrence_check(m);
                    t.check(v.empty(), "degree " + std::to_string(a) + ": " + (v.empty() ? "" : v.front()));
                }
            }
        return std::to_string(maps) + " solutions";
    });
}

SuiteResult automorphisms(const SampleOptions &opt) {
    return timed(7, "automorphisms: homomorphism, composition law, group structure", 10.0, [&](Tally &t) {
        Sampler rng(opt.seed);
        const std::size_t n = or_default(opt.samples, 100);
        for (std::size_t k = 0; k < n; ++k) {
            const AutParams p = rng.aut_params();
            const Element x = rng.element(), y = rng.element();
            const Element r = hom_residual(p, x, y);
            t.check(r.is_zero(), "hom residual " + show(r) + " for " + p.str());
        }
        const auto basis = Window::make(-5, 5, 3).basis();
        for (std::size_t k = 0; k < n; ++k) {
            const AutParams outer = rng.aut_params(), inner = rng.aut_params();
            const AutParams c = aut_compose(outer, inner);
            for (const auto &b : basis) {
                const Element e = Element::basis(b.alpha, b.i);
                t.check(aut_apply(c, e) == aut_apply(outer, aut_apply(inner, e)),
                        "compose(" + outer.str() + ", " + inner.str() + ") disagrees on " + show(e));
            }
        }
        const AutParams rho = AutParams::rho(-1);
        t.check(aut_compose(rho, rho) == AutParams::identity(), "rho_{-1}^2 != id");
        t.check(aut_invert(rho) == rho, "rho_{-1} is not an involution");
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar m1 = rng.coefficient(), m2 = rng.coefficient();
            t.check(aut_compose(AutParams::phi(m1), AutParams::phi(m2)) == AutParams::phi(m1 * m2),
                    "phi_mu1 phi_mu2 != phi_mu1mu2");
            t.check(aut_compose(AutParams::phi_prime(m1), AutParams::phi_prime(m2)) ==
                        AutParams::phi_prime(m1 * m2),
                    "phi'_nu1 phi'_nu2 != phi'_nu1nu2");
            const AutParams a = rng.aut_params(), b = rng.aut_params(), c = rng.aut_params();
            t.check(aut_compose(aut_compose(a, b), c) == aut_compose(a, aut_compose(b, c)), "compose not associative");
            t.check(aut_compose(aut_invert(a), a) == AutParams::identity() &&
                        aut_compose(a, aut_invert(a)) == AutParams::identity(),
                    "invert is not a two-sided inverse for " + a.str());
            const AutParams plus1(a.mu(), a.nu(), 1), plus2(b.mu(), b.nu(), 1);
            t.check(aut_compose(plus1, plus2) == AutParams(a.mu() * b.mu(), a.nu() * b.nu(), 1),
                    "xi=+1 maps do not multiply componentwise");
            const AutParams conj = aut_compose(aut_compose(rho, plus1), aut_invert(rho));
            t.check(conj.xi() == 1, "conjugation by rho_{-1} leaves the xi=+1 subgroup");
        }
        return std::string();
    });
}

SuiteResult restrictions(const SampleOptions &opt) {
    return timed(8, "restrictions to L[a,0] and L[0,i]", 2.0, [&](Tally &t) {
        Sampler rng(opt.seed);
        const std::size_t n = or_default(opt.samples, 50);
        for (std::size_t k = 0; k < n; ++k) {
            const AutParams p = rng.aut_params();
            const Scalar xi(p.xi());
            for (std::int64_t a = -6; a <= 6; ++a)
                t.check(aut_apply(p, Element::basis(a, 0)) == Element::basis(p.xi() * a, 0, xi * p.mu().pow(a)),
                        "L[" + std::to_string(a) + ",0] image mismatch for " + p.str());
            for (std::int64_t i = 0; i <= 4; ++i)
                t.check(aut_apply(p, Element::basis(0, i)) == Element::basis((p.xi() - 1) * i, i, xi * p.nu().pow(i)),
                        "L[0," + std::to_string(i) + "] image mismatch for " + p.str());
        }
        return std::string();
    });
}

SuiteResult probes() {
    return timed(9, "ad-local finiteness and nilpotency probes", 2.0, [&](Tally &t) {
        const ProbeReport p1 = probe_local_finiteness(Element::basis(0, 0), Element::basis(3, 2), 10);
        t.check(p1.verdict == ProbeVerdict{Stabilized{1}}, "probe(L[0,0], L[3,2], 10) did not stabilize at 1");
        t.check(krylov_invariant(Element::basis(0, 0), p1.spanning), "stabilized span is not ad-invariant");
        const ProbeReport p2 = probe_local_finiteness(Element::basis(1, 0), Element::basis(2, 0), 6);
        t.check(p2.verdict == ProbeVerdict{GrowingAtDepth{6}}, "probe(L[1,0], L[2,0], 6) stabilized");
        t.check(p2.dims == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7}, "probe(L[1,0], L[2,0], 6) dims differ");
        for (std::int64_t a = -6; a <= 6; ++a)
            for (std::int64_t i = 0; i <= 4; ++i) {
                if (a + i == 0)
                    continue;
                t.check(nilpotency_check(Element::basis(0, 0), Element::basis(a, i), 5) ==
                            NilpotencyVerdict{NonzeroThrough{5}},
                        "ad_{L[0,0]} killed L[" + std::to_string(a) + "," + std::to_string(i) + "]");
            }
        return std::string();
    });
}

SuiteResult bracket_identities() {
    return timed(10, "fixed bracket identity families", 2.0, [&](Tally &t) {
        auto L = [](std::int64_t a, std::int64_t i, const Scalar &c = Scalar(1)) { return Element::basis(a, i, c); };
        for (std::int64_t b = -5; b <= 5; ++b)
            for (std::int64_t j = 0; j <= 4; ++j) {
                t.check(bracket_b(L(b - 1, j), L(1, 0)) == L(b, j, Scalar(b - 2)),
                        "[L[b-1,j],L[1,0]] at b=" + std::to_string(b) + " j=" + std::to_string(j));
                t.check(bracket_b(L(b, j), L(-1, 0)) == L(b - 1, j, Scalar(b + 2 * j + 1)),
                        "[L[b,j],L[-1,0]] at b=" + std::to_string(b) + " j=" + std::to_string(j));
            }
        for (std::int64_t i = 0; i <= 4; ++i) {
            t.check(bracket_b(L(0, i), L(0, 1)) == L(0, i + 1, Scalar(i - 1)), "[L[0,i],L[0,1]] at i=" + std::to_string(i));
            t.check(bracket_b(L(-1, 0), bracket_b(L(1, 0), L(0, i))) == L(0, i, Scalar(-2 * (i + 1))),
                    "[L[-1,0],[L[1,0],L[0,i]]] at i=" + std::to_string(i));
        }
        for (std::int64_t a = -6; a <= 6; ++a)
            for (std::int64_t b = -6; b <= 6; ++b)
                t.check(bracket_b(L(a, 0), L(b, 0)) == L(a + b, 0, Scalar(a - b)), "Witt bracket");
        return std::string();
    });
}

SuiteResult text_and_export(const SampleOptions &opt) {
    return timed(11, "parse/render round trip and JSON/CSV export agreement", 5.0, [&](Tally &t) {
        Sampler rng(opt.seed);
        const std::size_t n = or_default(opt.samples, 500);
        for (std::size_t k = 0; k < n; ++k) {
            const Element x = rng.element(true);
            const std::string text = render_element(x);
            const Element back = parse_element(text, AlgebraVariant::bhat());
            t.check(back == x, "round trip changed " + text);
            t.check(render_element(back) == text, "render(parse(.)) not idempotent on " + text);
        }
        const std::pair<AlgebraVariant, Window> exports[] = {
            {AlgebraVariant::b(), Window::make(-3, 3, 2)},
            {AlgebraVariant::bsg(0), Window::make(-2, 2, 2)},
            {AlgebraVariant::bsg(1), Window::make(-2, 2, 2)},
            {AlgebraVariant::bhat(), Window::make(-2, 2, 1)},
        };
        std::size_t records = 0;
        for (const auto &[v, w] : exports) {
            std::stringstream json, csv;
            export_structure_constants(v, w, ExportFormat::Json, json);
            export_structure_constants(v, w, ExportFormat::Csv, csv);
            const auto from_json = read_structure_json(json);
            const auto from_csv = read_structure_csv(csv);
            records += from_json.size();
            t.check(from_json == from_csv, v.name() + " JSON and CSV exports disagree on " + w.str());
            t.check(from_json == structure_constants(v, w), v.name() + " export does not match the bracket table");
        }
        return std::to_string(records) + " export records";
    });
}

std::vector<SuiteResult> run_all(std::uint64_t seed) {
    const SampleOptions opt{seed, 0};
    return {lie_axioms(opt),    shift_isomorphism(opt), cocycles(),          derivations(opt),
            h1_windows(),       recurrences(),          automorphisms(opt), restrictions(opt),
            probes(),           bracket_identities(),     text_and_export(opt)};
}

std::string format_report(std::uint64_t seed, const std::vector<SuiteResult> &results) {
    std::ostringstream os;
    os << "seed=" << seed << '\n';
    for (const auto &r : results) {
        os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << '\n';
    }
    return os.str();
}

} // namespace block::suites
