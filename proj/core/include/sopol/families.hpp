#ifndef SOPOL_FAMILIES_HPP
#define SOPOL_FAMILIES_HPP

#include <span>
#include <vector>

#include "sopol/poly.hpp"
#include "sopol/series.hpp"

namespace sopol {

/// e^{2*pi*i*m/r}
cplx unit_root(int r, long m);

/// Parameters of the constant-coefficient family: the monic degree-n solutions
/// of alpha*y^{(r)} + y = z^n.
struct FamilyParams {
    int r = 1;
    double alpha = 0.0;
    int branch = 0; ///< which r-th root the asymptotic scaling constant uses

    /// (-1/alpha)^{1/r}, principal value rotated by the chosen branch.
    cplx scaling_root() const;
    /// sqrt(-1/alpha); requires alpha < 0.
    double decay_rate() const;
};

/// Monic degree-n solution of alpha*y^{(r)} + y = z^n. Built by the two-term
/// coefficient recurrence mu_s = -alpha*[s+r]_r*mu_{s+r} with the factor
/// product ordered exactly as CPoly::derivative accumulates it, so the
/// defining-equation residual cancels to floating-point zero.
CPoly y_family(const FamilyParams& params, int n);

/// The r = 2 specialization (requires alpha < 0, throws std::domain_error
/// otherwise); the family with the three-term style recurrence and the
/// two-sided Laplace integral representation.
CPoly w_family(double alpha, int n);

/// Two-sided Laplace integral representation of w_n, realized by a
/// Gauss-Laguerre rule after substituting x = t +- s/beta:
///   w_n(t) = 1/2 * int_0^inf [(t + s/beta)^n + (t - s/beta)^n] e^{-s} ds.
double w_integral_rep(double alpha, int n, double t);

/// First n_terms Taylor coefficients in z of e^{tz} / (1 + alpha z^2); the n-th
/// coefficient equals w_n(t)/n!.
std::vector<cplx> w_generating_coeff(double alpha, cplx t, int n_terms);

/// Monic-up-to-sign degree-n solution of y' - y = z^n; equals the scaled
/// exponential partial sum -n! * sum_{k<=n} z^k/k!.
CPoly expsum_family(int n);

/// Physicists' Hermite polynomial H_n (H_{n+1} = 2t H_n - 2n H_{n-1}).
CPoly hermite(int n);

enum class GSystem { Monomials, Hermite };

/// Base-family coefficient rows 0..n_max (row n = ascending coefficients of the
/// n-th polynomial of the system).
using CoeffTable = std::vector<std::vector<cplx>>;
CoeffTable coefficient_table(GSystem system, int n_max);

/// Data of an exponential generating function f(w) e^{t u(w)} / p(u(w)):
/// a polynomial p with p(0) != 0, a series u with u(0) = 0, a prefactor series
/// f, and the base system g_n the exponential part generates.
struct GenFnSpec {
    CPoly p;
    TruncatedSeries u;
    TruncatedSeries f;
    GSystem g = GSystem::Monomials;

    GenFnSpec(CPoly p_, TruncatedSeries u_, TruncatedSeries f_, GSystem g_);

    /// g_n = t^n with u = w, f = 1.
    static GenFnSpec monomials(CPoly p, int order);
    /// g_n = H_n with u = 2w, f = e^{-w^2}.
    static GenFnSpec hermite(CPoly p, int order);

    CPoly g_poly(int n) const;
};

/// Derivatives at 0 of 1/p(u(w)): b_j = j! * [w^j] recip(p o u).
std::vector<cplx> genfn_b_coeffs(const GenFnSpec& spec, int count);

/// phi_n(t) = sum_j C(n,j) b_j g_{n-j}(t); degree n since b_0 = 1/p(0) != 0.
CPoly phi_family(const GenFnSpec& spec, int n);

/// Contour form of phi_n: n!/(2*pi*i) times the circle integral of
/// F(t,w) w^{-n-1} over |w| = R2, discretized by the M-node trapezoid rule.
/// R2 must sit strictly inside the analyticity disk (for linear u this is the
/// smallest root modulus of p scaled by |u'(0)|); throws ContourError otherwise.
cplx phi_contour_rep(const GenFnSpec& spec, int n, cplx t, double r2, int m_nodes);

/// y-hat_n = sum_j xi_{n,j} y_j(r,alpha): the lift of the base system with rows
/// xi through the family. Requires a nonzero leading entry xi_{n,n}.
CPoly yhat_family(const CoeffTable& xi, const FamilyParams& params, int n);

/// Two-sided Laplace representation of y-hat_n for r = 2, alpha < 0: the same
/// Gauss-Laguerre realization as w_integral_rep with p_n in place of x^n.
cplx yhat_integral_rep(const CoeffTable& xi, double alpha, int n, double z);

/// (1/r) sum_k e^{-2*pi*i*l*k/r} exp(alpha_r e^{2*pi*i*k/r} z): the locally
/// uniform limit of the scaled family along the residue class l mod r.
cplx asymptotic_limit(const FamilyParams& params, int l, cplx z);

/// Max over the grid of |S_m(z) - asymptotic_limit(z)| where S_m is the scaled
/// partial sum sum_{j<=m} (alpha_r z)^{rj+l}/(rj+l)! -- the factorial-overflow-
/// free form of alpha_r^{rm+l}/(rm+l)! * y_{rm+l}.
double asymptotic_error(const FamilyParams& params, int l, int m,
                        std::span<const cplx> grid);

struct RootLocationReport {
    int n = 0;
    int zero_multiplicity = 0;
    int expected_zero_multiplicity = 0;
    double min_nonzero_modulus = 0.0; ///< +inf when every root is at the origin
    bool pass = false;
    std::vector<cplx> roots;
};

/// Root-location check for alpha <= -1 (throws std::domain_error otherwise):
/// exactly n mod r roots at the origin when r >= 2, all others with
/// |z| >= 1 - 1e-8.
RootLocationReport check_root_location(const FamilyParams& params, int n);

} // namespace sopol

#endif
