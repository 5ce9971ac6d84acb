#ifndef SOPOL_DIFFOP_HPP
#define SOPOL_DIFFOP_HPP

#include <string>
#include <vector>

#include "sopol/poly.hpp"

namespace sopol {

/// Linear differential operator D = sum_k d_k(z) (d/dz)^k with polynomial
/// coefficients. Immutable; application is linear and pure.
class LinearDiffOp {
public:
    explicit LinearDiffOp(std::vector<CPoly> coeffs);

    static LinearDiffOp identity() { return LinearDiffOp({CPoly::one()}); }
    /// Constant-coefficient operator p(d/dz): coefficient k of p multiplies the
    /// k-th derivative.
    static LinearDiffOp constant_coefficients(const CPoly& p);

    int order() const { return static_cast<int>(d_.size()) - 1; }
    const CPoly& coeff(int k) const { return d_[static_cast<size_t>(k)]; }

    /// sum_k d_k * y^{(k)}, combined at the coefficient level. Each product
    /// d_k * y^{(k)} is materialized before accumulation so that residual
    /// checks against family constructors cancel exactly.
    CPoly apply(const CPoly& y) const;

    /// Largest coefficient magnitude among the individual products
    /// d_k * y^{(k)}: the scale at which apply(y) cancels, and the natural
    /// normalization for its residuals.
    double term_scale(const CPoly& y) const;

private:
    std::vector<CPoly> d_;
};

/// Outcome of the degree-preservation test: D maps degree-n polynomials to
/// degree-n polynomials for all n up to the bound iff (a) deg d_k <= k for
/// every k and (b) the diagonal sums sum_j [n]_j d_{j,j} never vanish.
struct DegreeCheck {
    bool ok = true;
    int bad_coeff = -1;   ///< first k with deg d_k > k, or -1
    int bad_n = -1;       ///< first n with vanishing diagonal sum, or -1
    std::string detail;   ///< human-readable description of the first violation
};

/// Diagonal sum sum_j [n]_j d_{j,j} controlling the degree-n leading coefficient
/// of D z^n.
cplx diagonal_sum(const LinearDiffOp& op, int n);

/// Degree-preservation test for all n <= n_max. The vanishing test is relative:
/// |sum| must exceed 1e-12 times the magnitude scale sum_j [n]_j |d_{j,j}|.
DegreeCheck check_degree_preserving(const LinearDiffOp& op, int n_max);

/// The unique polynomial y with deg y = deg u and D y = u, by back-substitution
/// on the triangular coefficient system (leading coefficient first). Requires
/// the operator to pass check_degree_preserving up to deg u; throws
/// UnsolvableOperatorError carrying the diagnostic otherwise.
CPoly solve_poly_ode(const LinearDiffOp& op, const CPoly& u);

} // namespace sopol

#endif
