#ifndef SOPOL_SOBOLEV_HPP
#define SOPOL_SOBOLEV_HPP

#include <optional>
#include <vector>

#include "sopol/poly.hpp"
#include "sopol/quadrature.hpp"

namespace sopol {

/// Measurable factor G(z) with polynomial entries g_{l,k} (0 <= l <= rho,
/// 0 <= k <= beta). The induced matrix weight is M0(z) = G(z) G*(z).
struct WeightFactor {
    std::vector<std::vector<CPoly>> entries; ///< entries[l][k]

    int rho() const { return static_cast<int>(entries.size()) - 1; }
    int beta() const { return entries.empty() ? -1 : static_cast<int>(entries[0].size()) - 1; }

    /// Single-column factor (beta = 0) from the column g_{0,0}..g_{rho,0}.
    static WeightFactor column(std::vector<CPoly> g);

    /// M0(z) = G(z) G*(z) evaluated pointwise; row-major (rho+1)^2 values.
    std::vector<std::vector<cplx>> weight_at(cplx z) const;
};

/// Smallest eigenvalue of the Hermitian matrix M0(z); the factor-induced weight
/// satisfies min_eig >= -1e-12 * trace at every point.
double min_weight_eigenvalue(const WeightFactor& weight, cplx z);

/// g_{f;k} = sum_l g_{l,k} f^{(l)} for k = 0..beta, combined at the coefficient
/// level (never pointwise) so that factorial-scale cancellations are exact.
std::vector<CPoly> factor_map(const WeightFactor& weight, const CPoly& f);

/// Dense matrix weight: polynomial entries of M0(z), evaluated pointwise.
using DenseWeight = std::vector<std::vector<CPoly>>;

/// A realized Sobolev space: a matrix weight (factored or dense) over a
/// quadrature-backed measure. Exactly one of factor/dense must be set; when
/// both are present the factor route is used.
struct SobolevSpaceSpec {
    std::optional<WeightFactor> factor;
    std::optional<DenseWeight> dense;
    QuadratureRule rule;

    int rho() const;
};

/// The matrix-weight Sobolev pairing of f and h. With a factor, computes
/// sum_k <g_{f;k}, g_{h;k}> through factor_map and plain L2 quadrature; with a
/// dense weight, computes the derivative-vector sandwich pointwise. Throws
/// InsufficientRuleError when the rule's exactness degree cannot cover the
/// integrand.
cplx sobolev_inner(const SobolevSpaceSpec& spec, const CPoly& f, const CPoly& h);

/// Monic orthogonal polynomials of degrees 0..n_max by modified Gram-Schmidt
/// (with one reorthogonalization pass) on the monomial basis. Positivity is
/// checked degree by degree through the orthogonalization pivots; the first
/// non-positive-definite degree raises DegenerateFormError.
std::vector<CPoly> gram_schmidt_sobolev(const SobolevSpaceSpec& spec, int n_max);

/// Same orthogonalization applied to a caller-supplied graded basis
/// (deg basis[n] = n required). Feeding back its own output reproduces it.
std::vector<CPoly> gram_schmidt_sobolev(const SobolevSpaceSpec& spec,
                                        std::vector<CPoly> basis);

/// Weight extension for a single-column factor: appends the column
/// d_l = g_{l,0}' + g_{l-1,0} (with g_{-1,0} = 0) plus the corner entry
/// g_{rho,0}, yielding a (rho+2) x 2 factor whose form adds the pairing of the
/// differentiated images. Only beta = 0 factors are supported (throws
/// std::invalid_argument otherwise).
WeightFactor extend_weight(const WeightFactor& weight, int k0 = 0);

} // namespace sopol

#endif
