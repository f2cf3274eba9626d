// Acceptance runner: one PASS/FAIL line per criterion, each held to its
// runtime budget. Criterion 11 additionally runs the CLI `verify all --seed 0`
// twice and compares the output bytes.
//
// usage: acceptance [path/to/blockalg]

#include "block/suites.hpp"

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sys/wait.h>

namespace {

struct CliRun {
    int status = -1;
    std::string output;
};

CliRun run_cli(const std::string &command) {
    CliRun run;
    FILE *pipe = popen(command.c_str(), "r");
    if (pipe == nullptr)
        return run;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        run.output.append(buf, n);
    const int raw = pclose(pipe);
    run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return run;
}

void append(block::suites::SuiteResult &r, const std::string &note) { r.detail += "; " + note; }

} // namespace

int main(int argc, char **argv) {
    using namespace block::suites;
    const std::string cli = argc > 1 ? argv[1] : "";

    auto results = run_all(0);

    auto &last = results.back();
    if (format_report(0, results) != format_report(0, run_all(0))) {
        last.passed = false;
        append(last, "in-process report differs between runs");
    }
    if (cli.empty()) {
        last.passed = false;
        append(last, "no blockalg path given");
    } else {
        const std::string cmd = "\"" + cli + "\" verify all --seed 0";
        const CliRun a = run_cli(cmd), b = run_cli(cmd);
        if (a.status != 0 || b.status != 0) {
            last.passed = false;
            append(last, "verify all exited " + std::to_string(a.status) + "/" + std::to_string(b.status));
        } else if (a.output != b.output) {
            last.passed = false;
            append(last, "verify all output is not byte-reproducible");
        } else {
            append(last, "verify all exit 0, reproducible");
        }
    }

    bool all = true;
    for (const auto &r : results) {
        const bool in_budget = r.seconds < r.budget_seconds;
        const bool ok = r.passed && in_budget;
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " [" << std::setw(2) << r.id << "] " << r.name << " ("
                  << std::fixed << std::setprecision(2) << r.seconds << "s / " << std::setprecision(0)
                  << r.budget_seconds << "s budget)";
        if (!in_budget)
            std::cout << " over budget";
        std::cout << ": " << r.detail << '\n';
    }
    std::cout << (all ? "all criteria passed" : "some criteria failed") << '\n';
    return all ? 0 : 1;
}
