#include "sopol/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace sopol {

QuadratureRule make_unit_circle_rule(int n_nodes) {
    if (n_nodes < 1) throw std::invalid_argument("circle rule needs at least one node");
    QuadratureRule rule;
    rule.domain = Domain::UnitCircle;
    rule.exactness_degree = n_nodes - 1;
    rule.nodes.reserve(static_cast<size_t>(n_nodes));
    rule.weights.assign(static_cast<size_t>(n_nodes), 1.0 / n_nodes);
    for (int j = 0; j < n_nodes; ++j) {
        double theta = 2.0 * std::numbers::pi * j / n_nodes;
        rule.nodes.emplace_back(std::cos(theta), std::sin(theta));
    }
    return rule;
}

namespace {

// Three-term recurrence data: x p_k = b_k p_{k-1} + a_k p_k + b_{k+1} p_{k+1}
// for the orthonormal family of the weight, plus the total mass mu0.
struct Recurrence {
    std::vector<double> a; // a[k], k = 0..n-1
    std::vector<double> b; // b[k], k = 1..n (b[0] unused)
    double mu0 = 0.0;
};

Recurrence recurrence_for(GaussKind kind, int n) {
    Recurrence rec;
    rec.a.assign(static_cast<size_t>(n), 0.0);
    rec.b.assign(static_cast<size_t>(n) + 1, 0.0);
    switch (kind) {
        case GaussKind::Hermite:
            rec.mu0 = std::sqrt(std::numbers::pi);
            for (int k = 1; k <= n; ++k) rec.b[static_cast<size_t>(k)] = std::sqrt(k / 2.0);
            break;
        case GaussKind::Laguerre:
            rec.mu0 = 1.0;
            for (int k = 0; k < n; ++k) rec.a[static_cast<size_t>(k)] = 2.0 * k + 1.0;
            for (int k = 1; k <= n; ++k) rec.b[static_cast<size_t>(k)] = k;
            break;
        case GaussKind::Legendre:
            rec.mu0 = 2.0;
            for (int k = 1; k <= n; ++k)
                rec.b[static_cast<size_t>(k)] = k / std::sqrt(4.0 * k * k - 1.0);
            break;
    }
    return rec;
}

// Orthonormal values at x: the degree-n polynomial, its derivative, and the
// reciprocal Christoffel function sum_{k<n} p_k(x)^2.
void orthonormal_eval(const Recurrence& rec, int n, double x, double& pn, double& dpn,
                      double& christoffel) {
    double pm1 = 0.0, dpm1 = 0.0;
    double p = 1.0 / std::sqrt(rec.mu0), dp = 0.0;
    christoffel = p * p;
    for (int k = 0; k < n; ++k) {
        double bk1 = rec.b[static_cast<size_t>(k) + 1];
        double pk1 = ((x - rec.a[static_cast<size_t>(k)]) * p - (k > 0 ? rec.b[static_cast<size_t>(k)] * pm1 : 0.0)) / bk1;
        double dpk1 = ((x - rec.a[static_cast<size_t>(k)]) * dp + p -
                       (k > 0 ? rec.b[static_cast<size_t>(k)] * dpm1 : 0.0)) /
                      bk1;
        pm1 = p;
        dpm1 = dp;
        p = pk1;
        dp = dpk1;
        if (k + 1 < n) christoffel += p * p;
    }
    pn = p;
    dpn = dp;
}

} // namespace

QuadratureRule make_gauss_rule(GaussKind kind, int n_nodes) {
    if (n_nodes < 1) throw std::invalid_argument("gauss rule needs at least one node");
    const int n = n_nodes;
    Recurrence rec = recurrence_for(kind, n);

    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) jacobi(k, k) = rec.a[static_cast<size_t>(k)];
    for (int k = 1; k < n; ++k)
        jacobi(k - 1, k) = jacobi(k, k - 1) = rec.b[static_cast<size_t>(k)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);

    QuadratureRule rule;
    rule.domain = (kind == GaussKind::Hermite)    ? Domain::RealLineHermite
                  : (kind == GaussKind::Laguerre) ? Domain::RealLineLaguerre
                                                  : Domain::IntervalLegendre;
    rule.exactness_degree = 2 * n - 1;
    rule.nodes.reserve(static_cast<size_t>(n));
    rule.weights.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Eigenvalues are ~1e-14-accurate starting points; a couple of Newton
        // steps on the orthonormal recurrence polish them to the last ulp, and
        // the Christoffel sum then gives the weight.
        double x = es.eigenvalues()(i);
        double pn, dpn, chr;
        for (int it = 0; it < 3; ++it) {
            orthonormal_eval(rec, n, x, pn, dpn, chr);
            if (dpn == 0.0) break;
            double step = pn / dpn;
            x -= step;
            if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
        }
        orthonormal_eval(rec, n, x, pn, dpn, chr);
        rule.nodes.emplace_back(x, 0.0);
        rule.weights.push_back(1.0 / chr);
    }
    return rule;
}

cplx integrate(const QuadratureRule& rule, const std::function<cplx(cplx)>& f) {
    cplx acc(0.0);
    for (size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}

cplx l2_inner(const QuadratureRule& rule, const CPoly& f, const CPoly& h) {
    cplx acc(0.0);
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(rule.nodes[i]) * std::conj(h(rule.nodes[i]));
    return acc;
}

} // namespace sopol
