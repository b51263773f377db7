// Acceptance harness: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and budgets are pinned here and in the suite sources.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hyperg/suites.hpp"

using namespace hyperg;

namespace {

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

bool run_suite_criterion(int id, const std::string& label, const std::string& suite,
                         double budget_s) {
    suites::SuiteOptions opt; // full profile, seed 42
    auto r = suites::run_suite(suite, opt);
    int fails = 0;
    for (const auto& row : r.rows)
        if (!row.pass) ++fails;
    bool ok = r.pass && r.seconds <= budget_s;
    std::string note;
    if (fails > 0) note = ", " + std::to_string(fails) + " failing checks";
    if (r.seconds > budget_s) note += ", over time budget";
    std::printf("[%s] criterion %2d: %s (%zu checks, %.1f s%s)\n", ok ? "PASS" : "FAIL", id,
                label.c_str(), r.rows.size(), r.seconds, note.c_str());
    for (const auto& row : r.rows)
        if (!row.pass)
            std::printf("    failed: %s (computed=%.6e, reference=%.6e)\n", row.id.c_str(),
                        row.computed, row.reference);
    std::fflush(stdout);
    return ok;
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(HYPERG_CLI_PATH) + " " + args;
    int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    if (WIFEXITED(rc)) return WEXITSTATUS(rc);
    return -1;
}

bool run_cli_criterion() {
    double t0 = now_s();
    int rc_quick = run_cli(
        "verify all --profile quick --format json --out acceptance_quick.json "
        "2> acceptance_quick.log");
    double quick_s = now_s() - t0;
    bool quick_ok = rc_quick == 0 && quick_s <= 300.0;

    t0 = now_s();
    int rc_full = run_cli(
        "verify all --profile full --format json --out acceptance_full.json "
        "2> acceptance_full.log");
    double full_s = now_s() - t0;

    bool names_ok = false;
    {
        std::ifstream is("acceptance_full.json");
        std::stringstream ss;
        ss << is.rdbuf();
        std::string doc = ss.str();
        names_ok = !doc.empty();
        for (const auto& name : suites::suite_names())
            names_ok = names_ok && doc.find("\"name\": \"" + name + "\"") != std::string::npos;
    }
    bool full_ok = rc_full == 0 && names_ok;

    bool ok = quick_ok && full_ok;
    std::printf("[%s] criterion 12: command line verify profiles "
                "(quick: exit %d in %.1f s; full: exit %d in %.1f s, all suites %s)\n",
                ok ? "PASS" : "FAIL", rc_quick, quick_s, rc_full, full_s,
                names_ok ? "reported" : "missing");
    std::fflush(stdout);
    return ok;
}

} // namespace

int main() {
    int passed = 0;
    struct Item {
        int id;
        const char* label;
        const char* suite;
        double budget;
    };
    const std::vector<Item> items = {
        {1, "special function engine", "specfun", 10.0},
        {2, "eigenfunction differential equation", "ode", 30.0},
        {3, "wronskian closed form vs finite differences", "wronskian", 10.0},
        {4, "spectral measure atoms and density", "measure", 20.0},
        {5, "eigenfunction orthogonality", "orthogonality", 10.0},
        {6, "transform unitarity and inversion", "unitarity", 600.0},
        {7, "bessel operator intertwining", "bessel", 60.0},
        {8, "fourier-hankel factorization", "hankel", 60.0},
        {9, "isotypic plancherel decomposition", "branching", 1800.0},
        {10, "closed-form hankel integral identities", "integrals", 30.0},
        {11, "composed kernel power law and constant", "kernels", 60.0},
    };
    for (const auto& it : items)
        if (run_suite_criterion(it.id, it.label, it.suite, it.budget)) ++passed;
    if (run_cli_criterion()) ++passed;

    std::printf("%d/12 criteria passed\n", passed);
    return passed == 12 ? 0 : 1;
}
