#ifndef HYPERG_PRECISION_HPP
#define HYPERG_PRECISION_HPP

#include <stdexcept>

namespace hyperg {

// Error budget shared by the special-function evaluators.
struct PrecisionPolicy {
    double target_rel_err = 1e-12;
    int series_max_terms = 2000;
    int quad_panels = 64;

    void validate() const {
        if (!(target_rel_err > 0.0))
            throw std::invalid_argument("PrecisionPolicy: target_rel_err must be > 0");
        if (series_max_terms < 16)
            throw std::invalid_argument("PrecisionPolicy: series_max_terms must be >= 16");
        if (quad_panels < 1)
            throw std::invalid_argument("PrecisionPolicy: quad_panels must be >= 1");
    }
};

inline const PrecisionPolicy& default_policy() {
    static const PrecisionPolicy p{};
    return p;
}

// Thrown when an iterative evaluation exhausts its term or refinement budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hyperg

#endif
