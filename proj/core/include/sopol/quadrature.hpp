#ifndef SOPOL_QUADRATURE_HPP
#define SOPOL_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "sopol/poly.hpp"

namespace sopol {

enum class Domain { UnitCircle, RealLineHermite, RealLineLaguerre, IntervalLegendre };

enum class GaussKind { Hermite, Laguerre, Legendre };

/// Nodes/weights realizing a concrete measure, tagged with the largest
/// polynomial degree the rule integrates exactly. For the circle rule the tag
/// bounds |k - m| in the monomial pairings z^k conj(z)^m.
struct QuadratureRule {
    Domain domain;
    std::vector<cplx> nodes;
    std::vector<double> weights;
    int exactness_degree = 0;
};

/// Equispaced nodes e^{2*pi*i*j/N} with weights 1/N, realizing the normalized
/// arc-length measure on the unit circle. Exact for monomial pairings with
/// |k - m| <= N-1.
QuadratureRule make_unit_circle_rule(int n_nodes);

/// Gauss rule from the three-term recurrence of the classical family
/// (Golub-Welsch: eigenvalues/first eigenvector components of the Jacobi
/// matrix). Weight functions: exp(-t^2) on R, exp(-s) on [0,inf), 1 on [-1,1].
/// Exact for polynomial degree <= 2N-1.
QuadratureRule make_gauss_rule(GaussKind kind, int n_nodes);

/// sum_i w_i f(x_i)
cplx integrate(const QuadratureRule& rule, const std::function<cplx(cplx)>& f);

/// sum_i w_i f(x_i) conj(h(x_i)) -- the plain L2 pairing under the rule.
cplx l2_inner(const QuadratureRule& rule, const CPoly& f, const CPoly& h);

} // namespace sopol

#endif
