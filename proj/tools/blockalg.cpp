// blockalg: command-line front end for the Block type Lie algebra library.
//
// Exit codes: 0 success / all properties hold, 1 a property was violated,
// 2 usage, parse or window error.

#include "block/automorphism.hpp"
#include "block/derivation.hpp"
#include "block/errors.hpp"
#include "block/sampling.hpp"
#include "block/suites.hpp"
#include "block/text.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace block;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

int report(const std::vector<suites::SuiteResult> &results, std::uint64_t seed) {
    std::cout << suites::format_report(seed, results);
    bool ok = true;
    for (const auto &r : results)
        if (!r.passed) {
            ok = false;
            std::cerr << "violation in [" << r.id << "] " << r.name << ": " << r.detail << '\n';
        }
    return ok ? kOk : kViolated;
}

std::string verdict_text(const ProbeVerdict &v) {
    if (const auto *s = std::get_if<Stabilized>(&v))
        return "Stabilized(" + std::to_string(s->dim) + ")";
    return "GrowingAtDepth(" + std::to_string(std::get<GrowingAtDepth>(v).depth) +
           ") [heuristic evidence, not a proof of infinite dimension]";
}

std::string nilpotency_text(const NilpotencyVerdict &v) {
    if (const auto *z = std::get_if<FoundZeroAt>(&v))
        return "FoundZeroAt(" + std::to_string(z->k) + ")";
    return "NonzeroThrough(" + std::to_string(std::get<NonzeroThrough>(v).depth) + ")";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact computations in the Block type Lie algebra B = span{L[a,i]}"};
    app.require_subcommand(1);

    std::string algebra = "B";
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::function<int()> action;

    // bracket
    auto *bracket_cmd = app.add_subcommand("bracket", "Print the bracket of two elements");
    std::string lhs, rhs;
    bracket_cmd->add_option("--algebra", algebra, "B, BsG0, BsG1 or BHat")->capture_default_str();
    bracket_cmd->add_option("x", lhs, "left element")->required();
    bracket_cmd->add_option("y", rhs, "right element")->required();
    bracket_cmd->callback([&] {
        action = [&] {
            const auto v = AlgebraVariant::from_name(algebra);
            std::cout << render_element(bracket(v, parse_element(lhs, v), parse_element(rhs, v))) << '\n';
            return kOk;
        };
    });

    // verify
    auto *verify_cmd = app.add_subcommand("verify", "Run property suites");
    verify_cmd->require_subcommand(1);
    auto add_sampling = [&](CLI::App *cmd) {
        cmd->add_option("--samples", samples, "number of random samples (0 = suite default)");
        cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    };
    auto *vj = verify_cmd->add_subcommand("jacobi", "Antisymmetry and Jacobi on every variant");
    auto *vc = verify_cmd->add_subcommand("cocycle", "Exhaustive 2-cocycle checks");
    auto *vs = verify_cmd->add_subcommand("shift-iso", "Shift isomorphism from B(0,Z)");
    auto *va = verify_cmd->add_subcommand("all", "Every acceptance suite");
    for (auto *c : {vj, vc, vs})
        add_sampling(c);
    va->add_option("--seed", seed, "random seed")->capture_default_str();
    vj->callback([&] { action = [&] { return report({suites::lie_axioms({seed, samples})}, seed); }; });
    vc->callback([&] { action = [&] { return report({suites::cocycles()}, seed); }; });
    vs->callback([&] { action = [&] { return report({suites::shift_isomorphism({seed, samples})}, seed); }; });
    va->callback([&] { action = [&] { return report(suites::run_all(seed), seed); }; });

    // derive
    auto *derive_cmd = app.add_subcommand("derive", "Derivations of B");
    derive_cmd->require_subcommand(1);
    auto *dd0 = derive_cmd->add_subcommand("d0", "Apply d0: L[b,j] -> b L[b,j]");
    std::string derive_expr;
    dd0->add_option("x", derive_expr, "element")->required();
    dd0->callback([&] {
        action = [&] {
            std::cout << render_element(apply_derivation(DerivationForm::d0(), parse_element(derive_expr))) << '\n';
            return kOk;
        };
    });
    auto *dcheck = derive_cmd->add_subcommand("check", "Leibniz rule suite");
    add_sampling(dcheck);
    dcheck->callback([&] { action = [&] { return report({suites::derivations({seed, samples})}, seed); }; });

    // cohomology
    auto *coh_cmd = app.add_subcommand("cohomology", "Windowed first cohomology");
    coh_cmd->require_subcommand(1);
    auto *h1 = coh_cmd->add_subcommand("h1", "dim of derivations modulo inner ones at one degree");
    std::int64_t degree = 0;
    std::string window_spec = "-6:6:4", interior_spec = "-3:3:2";
    h1->add_option("--degree", degree, "first-index degree of the derivations")->required();
    h1->add_option("--window", window_spec, "solver window amin:amax:imax")->capture_default_str();
    h1->add_option("--interior", interior_spec, "interior amin:amax:imax")->capture_default_str();
    h1->callback([&] {
        action = [&] {
            std::cout << h1_dimension(degree, Window::parse(window_spec), Window::parse(interior_spec)) << '\n';
            return kOk;
        };
    });
    auto *hsuite = coh_cmd->add_subcommand("suite", "Degrees -3..3 against 1 at degree 0 and 0 elsewhere");
    hsuite->add_option("--window", window_spec, "solver window amin:amax:imax")->capture_default_str();
    hsuite->add_option("--interior", interior_spec, "interior amin:amax:imax")->capture_default_str();
    hsuite->callback([&] {
        action = [&] {
            const Window w = Window::parse(window_spec), in = Window::parse(interior_spec);
            bool ok = true;
            for (std::int64_t a = -3; a <= 3; ++a) {
                const auto h = h1_dimension(a, w, in);
                const std::size_t expected = a == 0 ? 1 : 0;
                std::cout << "degree " << a << ": h1=" << h << " expected=" << expected
                          << (h == expected ? " ok" : " MISMATCH") << '\n';
                ok = ok && h == expected;
            }
            return ok ? kOk : kViolated;
        };
    });

    // aut
    auto *aut_cmd = app.add_subcommand("aut", "Automorphisms tau(mu,nu,xi)");
    aut_cmd->require_subcommand(1);
    auto *aapply = aut_cmd->add_subcommand("apply", "Apply L[a,i] -> xi mu^a nu^i L[xi(a+i)-i,i]");
    std::string mu = "1", nu = "1", aut_expr;
    int xi = 1;
    aapply->add_option("--mu", mu, "nonzero rational")->capture_default_str();
    aapply->add_option("--nu", nu, "nonzero rational")->capture_default_str();
    aapply->add_option("--xi", xi, "+1 or -1")->capture_default_str();
    aapply->add_option("x", aut_expr, "element")->required();
    aapply->callback([&] {
        action = [&] {
            const AutParams t(Scalar::parse(mu), Scalar::parse(nu), xi);
            std::cout << render_element(aut_apply(t, parse_element(aut_expr))) << '\n';
            return kOk;
        };
    });
    auto *acompose = aut_cmd->add_subcommand("compose", "Parameters of outer o inner");
    std::string outer_spec, inner_spec;
    acompose->add_option("--outer", outer_spec, "mu,nu,xi")->required();
    acompose->add_option("--inner", inner_spec, "mu,nu,xi")->required();
    acompose->callback([&] {
        action = [&] {
            std::cout << aut_compose(AutParams::parse(outer_spec), AutParams::parse(inner_spec)).str() << '\n';
            return kOk;
        };
    });
    auto *averify = aut_cmd->add_subcommand("verify", "Automorphism property suite");
    add_sampling(averify);
    averify->callback([&] {
        action = [&] {
            return report({suites::automorphisms({seed, samples}), suites::restrictions({seed, samples})}, seed);
        };
    });

    // probe
    auto *probe_cmd = app.add_subcommand("probe", "Krylov dimensions of span{ad_S^m v}");
    std::string probe_s, probe_v;
    std::size_t depth = 10;
    probe_cmd->add_option("--element", probe_s, "S")->required();
    probe_cmd->add_option("--vector", probe_v, "v")->required();
    probe_cmd->add_option("--depth", depth, "maximal power of ad_S")->capture_default_str()->check(CLI::PositiveNumber);
    probe_cmd->callback([&] {
        action = [&] {
            const Element s = parse_element(probe_s), v = parse_element(probe_v);
            const ProbeReport rep = probe_local_finiteness(s, v, depth);
            std::cout << "dims:";
            for (auto d : rep.dims)
                std::cout << ' ' << d;
            std::cout << "\nverdict: " << verdict_text(rep.verdict) << '\n';
            std::cout << "nilpotency: " << nilpotency_text(nilpotency_check(s, v, depth)) << '\n';
            return kOk;
        };
    });

    // export
    auto *export_cmd = app.add_subcommand("export", "Export tables");
    export_cmd->require_subcommand(1);
    auto *estruct = export_cmd->add_subcommand("structure", "Structure constants over a window");
    std::string format = "json", out_path;
    estruct->add_option("--algebra", algebra, "B, BsG0, BsG1 or BHat")->capture_default_str();
    estruct->add_option("--window", window_spec, "amin:amax:imax")->required();
    estruct->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    estruct->add_option("--out", out_path, "output file")->required();
    estruct->callback([&] {
        action = [&] {
            const auto v = AlgebraVariant::from_name(algebra);
            const Window w = Window::parse(window_spec);
            std::ofstream out(out_path, std::ios::binary);
            if (!out)
                throw std::ios_base::failure("cannot open '" + out_path + "' for writing");
            export_structure_constants(v, w, format == "json" ? ExportFormat::Json : ExportFormat::Csv, out);
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action ? action() : kUsage;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const WindowError &e) {
        std::cerr << "window error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kUsage;
    } catch (const std::ios_base::failure &e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kViolated;
    }
}
