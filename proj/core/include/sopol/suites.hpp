#ifndef SOPOL_SUITES_HPP
#define SOPOL_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sopol/report.hpp"

namespace sopol {

/// Parameters shared by the verification suites. Each suite reads the fields
/// that apply to it and pins everything else internally.
struct SuiteParams {
    int r = 2;
    double alpha = -1.0;
    int nmax = 12;
    std::uint64_t seed = 12345;
    double tol_scale = 1.0;
    std::string family = "y"; ///< orthogonality family: y, expsum, phi-monomial, phi-hermite
};

/// The registered suite names, in canonical order.
const std::vector<std::string>& suite_names();

/// Run one verification suite. Throws std::invalid_argument for unknown names.
Report run_suite(const std::string& name, const SuiteParams& params);

} // namespace sopol

#endif
