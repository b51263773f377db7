#ifndef HYPERG_SUITES_HPP
#define HYPERG_SUITES_HPP

#include <string>
#include <vector>

namespace hyperg::suites {

struct CheckRow {
    std::string id;
    double computed = 0.0;  // measured error or value
    double reference = 0.0; // bound for residual rows, expected value otherwise
    double rel_err = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckRow> rows;
    double seconds = 0.0;
    bool pass = true;

    // residual row: pass if err <= tol
    void bound(const std::string& id, double err, double tol);
    // value row: pass if |got - want| <= tol * max(|want|, 1)
    void value(const std::string& id, double got, double want, double tol);
    // boolean row
    void flag(const std::string& id, bool ok, double computed = 0.0);
};

struct SuiteOptions {
    std::string profile = "full"; // "full" or "quick"
    unsigned seed = 42;
};

// Registry order; "all" is accepted by run_suite and expands to this list.
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});
std::vector<SuiteResult> run_all(const SuiteOptions& opt = {});

SuiteResult run_specfun(const SuiteOptions& opt = {});       // gamma, 2F1, K-Bessel
SuiteResult run_ode(const SuiteOptions& opt = {});           // eigenfunction residuals
SuiteResult run_wronskian(const SuiteOptions& opt = {});     // closed form vs finite differences
SuiteResult run_measure(const SuiteOptions& opt = {});       // atom masses and density coherence
SuiteResult run_orthogonality(const SuiteOptions& opt = {}); // atom Gram matrix, cross pairings
SuiteResult run_unitarity(const SuiteOptions& opt = {});     // norm preservation, grid refinement
SuiteResult run_bessel(const SuiteOptions& opt = {});        // intertwining and symmetry
SuiteResult run_hankel(const SuiteOptions& opt = {});        // Fourier factorization, spherical vector
SuiteResult run_branching(const SuiteOptions& opt = {});     // isotypic Plancherel, atom census
SuiteResult run_integrals(const SuiteOptions& opt = {});     // closed-form Hankel integrals
SuiteResult run_kernels(const SuiteOptions& opt = {});       // composed kernel power law and constant

} // namespace hyperg::suites

#endif
