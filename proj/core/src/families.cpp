#include "sopol/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sopol/diffop.hpp"
#include "sopol/errors.hpp"
#include "sopol/quadrature.hpp"

namespace sopol {

namespace {

double factorial_d(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double real_pow_int(double base, int n) {
    double out = 1.0;
    for (int i = 0; i < n; ++i) out *= base;
    return out;
}

} // namespace

cplx unit_root(int r, long m) {
    long mm = m % r;
    if (mm < 0) mm += r;
    double theta = 2.0 * std::numbers::pi * static_cast<double>(mm) / r;
    return {std::cos(theta), std::sin(theta)};
}

cplx FamilyParams::scaling_root() const {
    if (alpha == 0.0) throw std::domain_error("scaling root undefined for alpha = 0");
    if (r < 1) throw std::invalid_argument("family order r must be positive");
    cplx w(-1.0 / alpha, 0.0);
    double mag = std::pow(std::abs(w), 1.0 / r);
    double arg = std::arg(w) / r;
    return mag * cplx(std::cos(arg), std::sin(arg)) * unit_root(r, branch);
}

double FamilyParams::decay_rate() const {
    if (alpha >= 0.0) throw std::domain_error("decay rate requires alpha < 0");
    return std::sqrt(-1.0 / alpha);
}

CPoly y_family(const FamilyParams& params, int n) {
    if (params.r < 1) throw std::invalid_argument("family order r must be positive");
    if (n < 0) throw std::invalid_argument("family degree must be nonnegative");
    const int r = params.r;
    std::vector<cplx> mu(static_cast<size_t>(n) + 1, cplx(0.0));
    mu[static_cast<size_t>(n)] = cplx(1.0);
    if (params.alpha != 0.0) {
        for (int s = n - 1; s >= 0; --s) {
            if (s > n - r) continue;
            // Mirror of the k-th derivative product order (top factor first).
            cplx t = mu[static_cast<size_t>(s + r)];
            for (int m = s + r; m > s; --m) t *= static_cast<double>(m);
            mu[static_cast<size_t>(s)] = -(params.alpha * t);
        }
    }
    return CPoly(std::move(mu));
}

CPoly w_family(double alpha, int n) {
    if (alpha >= 0.0) throw std::domain_error("w family requires alpha < 0");
    return y_family({.r = 2, .alpha = alpha}, n);
}

double w_integral_rep(double alpha, int n, double t) {
    if (alpha >= 0.0) throw std::domain_error("integral representation requires alpha < 0");
    const double beta = std::sqrt(-1.0 / alpha);
    QuadratureRule rule = make_gauss_rule(GaussKind::Laguerre, n + 8);
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        double s = rule.nodes[i].real();
        acc += rule.weights[i] *
               (real_pow_int(t + s / beta, n) + real_pow_int(t - s / beta, n));
    }
    return 0.5 * acc;
}

std::vector<cplx> w_generating_coeff(double alpha, cplx t, int n_terms) {
    TruncatedSeries denom =
        TruncatedSeries::from_poly(CPoly{cplx(1.0), cplx(0.0), cplx(alpha)}, n_terms);
    TruncatedSeries expo = TruncatedSeries::exp_quadratic(cplx(0.0), t, n_terms);
    TruncatedSeries prod = series_recip(denom) * expo;
    return {prod.coeffs().begin(), prod.coeffs().end()};
}

CPoly expsum_family(int n) {
    LinearDiffOp op({CPoly{cplx(-1.0)}, CPoly{cplx(1.0)}});
    return solve_poly_ode(op, CPoly::monomial(n));
}

CPoly hermite(int n) {
    CPoly prev = CPoly::one();
    if (n == 0) return prev;
    CPoly cur = CPoly::monomial(1, cplx(2.0));
    CPoly two_t = CPoly::monomial(1, cplx(2.0));
    for (int k = 1; k < n; ++k) {
        CPoly next = two_t * cur - cplx(2.0 * k) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

CoeffTable coefficient_table(GSystem system, int n_max) {
    CoeffTable table;
    table.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        CPoly p = (system == GSystem::Monomials) ? CPoly::monomial(n) : hermite(n);
        std::vector<cplx> row(static_cast<size_t>(n) + 1, cplx(0.0));
        for (int j = 0; j <= n; ++j) row[static_cast<size_t>(j)] = p.coeff(j);
        table.push_back(std::move(row));
    }
    return table;
}

GenFnSpec::GenFnSpec(CPoly p_, TruncatedSeries u_, TruncatedSeries f_, GSystem g_)
    : p(std::move(p_)), u(std::move(u_)), f(std::move(f_)), g(g_) {
    if (p(cplx(0.0)) == cplx(0.0))
        throw std::domain_error("generating function: p(0) must be nonzero");
    if (u.constant_term() != cplx(0.0))
        throw std::domain_error("generating function: u(0) must be zero");
}

GenFnSpec GenFnSpec::monomials(CPoly p, int order) {
    TruncatedSeries u(order);
    u += TruncatedSeries::from_poly(CPoly::monomial(1), order);
    return GenFnSpec(std::move(p), std::move(u), TruncatedSeries::one(order),
                     GSystem::Monomials);
}

GenFnSpec GenFnSpec::hermite(CPoly p, int order) {
    TruncatedSeries u(order);
    u += TruncatedSeries::from_poly(CPoly::monomial(1, cplx(2.0)), order);
    TruncatedSeries f = TruncatedSeries::exp_quadratic(cplx(-1.0), cplx(0.0), order);
    return GenFnSpec(std::move(p), std::move(u), std::move(f), GSystem::Hermite);
}

CPoly GenFnSpec::g_poly(int n) const {
    return (g == GSystem::Monomials) ? CPoly::monomial(n) : sopol::hermite(n);
}

std::vector<cplx> genfn_b_coeffs(const GenFnSpec& spec, int count) {
    if (count > spec.u.order())
        throw std::invalid_argument("generating function series order too small");
    TruncatedSeries recip = series_recip(series_compose(spec.p, spec.u));
    std::vector<cplx> b(static_cast<size_t>(count));
    double fact = 1.0;
    for (int j = 0; j < count; ++j) {
        if (j > 0) fact *= j;
        b[static_cast<size_t>(j)] = fact * recip.coeff(j);
    }
    return b;
}

CPoly phi_family(const GenFnSpec& spec, int n) {
    if (n >= spec.u.order())
        throw std::invalid_argument("generating function series order too small");
    TruncatedSeries recip = series_recip(series_compose(spec.p, spec.u));
    CPoly acc = CPoly::zero();
    // C(n,j) b_j = [n]_j * [w^j] recip(p o u); accumulate highest degree first.
    for (int j = 0; j <= n; ++j) {
        cplx w = falling_factorial(cplx(static_cast<double>(n)), j) * recip.coeff(j);
        if (w != cplx(0.0)) acc += w * spec.g_poly(n - j);
    }
    return acc;
}

cplx phi_contour_rep(const GenFnSpec& spec, int n, cplx t, double r2, int m_nodes) {
    if (r2 <= 0.0) throw std::invalid_argument("contour radius must be positive");
    if (m_nodes < 1) throw std::invalid_argument("contour needs at least one node");
    // Analyticity radius for linear u: the smallest zero of p(u(w)) has modulus
    // min|root(p)| / |u'(0)|.
    bool u_linear = true;
    for (int k = 2; k < spec.u.order(); ++k)
        if (spec.u.coeff(k) != cplx(0.0)) u_linear = false;
    if (u_linear && spec.u.coeff(1) != cplx(0.0) && spec.p.degree() >= 1) {
        double r1 = std::numeric_limits<double>::infinity();
        for (const cplx& z : poly_roots(spec.p))
            r1 = std::min(r1, std::abs(z) / std::abs(spec.u.coeff(1)));
        if (r2 >= r1) throw ContourError("contour radius reaches the nearest singularity");
    }
    cplx acc(0.0);
    for (int j = 0; j < m_nodes; ++j) {
        cplx w = r2 * unit_root(m_nodes, j);
        cplx uv = spec.u(w);
        cplx val = spec.f(w) * std::exp(t * uv) / spec.p(uv);
        acc += val / pow_int(w, n);
    }
    return factorial_d(n) * acc / static_cast<double>(m_nodes);
}

CPoly yhat_family(const CoeffTable& xi, const FamilyParams& params, int n) {
    if (n < 0 || static_cast<size_t>(n) >= xi.size())
        throw std::invalid_argument("coefficient table too short");
    const auto& row = xi[static_cast<size_t>(n)];
    if (static_cast<size_t>(n) >= row.size() || row[static_cast<size_t>(n)] == cplx(0.0))
        throw std::domain_error("degenerate leading coefficient in table row");
    CPoly acc = CPoly::zero();
    for (int j = n; j >= 0; --j) {
        cplx c = (static_cast<size_t>(j) < row.size()) ? row[static_cast<size_t>(j)]
                                                       : cplx(0.0);
        if (c != cplx(0.0)) acc += c * y_family(params, j);
    }
    return acc;
}

cplx yhat_integral_rep(const CoeffTable& xi, double alpha, int n, double z) {
    if (alpha >= 0.0) throw std::domain_error("integral representation requires alpha < 0");
    if (n < 0 || static_cast<size_t>(n) >= xi.size())
        throw std::invalid_argument("coefficient table too short");
    const double beta = std::sqrt(-1.0 / alpha);
    CPoly pn{std::vector<cplx>(xi[static_cast<size_t>(n)])};
    QuadratureRule rule = make_gauss_rule(GaussKind::Laguerre, n + 8);
    cplx acc(0.0);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        double s = rule.nodes[i].real();
        acc += rule.weights[i] * (pn(cplx(z + s / beta)) + pn(cplx(z - s / beta)));
    }
    return 0.5 * acc;
}

cplx asymptotic_limit(const FamilyParams& params, int l, cplx z) {
    if (params.alpha == 0.0)
        throw std::domain_error("asymptotic limit undefined for alpha = 0");
    const int r = params.r;
    const cplx ar = params.scaling_root();
    cplx acc(0.0);
    for (int k = 0; k < r; ++k)
        acc += unit_root(r, -static_cast<long>(l) * k) * std::exp(ar * unit_root(r, k) * z);
    return acc / static_cast<double>(r);
}

double asymptotic_error(const FamilyParams& params, int l, int m,
                        std::span<const cplx> grid) {
    const int r = params.r;
    const cplx ar = params.scaling_root();
    double worst = 0.0;
    for (const cplx& z : grid) {
        cplx term = pow_int(ar * z, l) / factorial_d(l);
        cplx sum = term;
        for (int j = 0; j < m; ++j) {
            cplx num = pow_int(ar * z, r);
            double den = 1.0;
            for (int i = 1; i <= r; ++i) den *= static_cast<double>(r * j + l + i);
            term *= num / den;
            sum += term;
        }
        worst = std::max(worst, std::abs(sum - asymptotic_limit(params, l, z)));
    }
    return worst;
}

RootLocationReport check_root_location(const FamilyParams& params, int n) {
    if (params.alpha > -1.0)
        throw std::domain_error("root location claim requires alpha <= -1");
    RootLocationReport rep;
    rep.n = n;
    rep.expected_zero_multiplicity = (params.r >= 2) ? n % params.r : 0;
    rep.min_nonzero_modulus = std::numeric_limits<double>::infinity();
    if (n >= 1) rep.roots = poly_roots(y_family(params, n));
    for (const cplx& z : rep.roots) {
        if (std::abs(z) <= 1e-8)
            ++rep.zero_multiplicity;
        else
            rep.min_nonzero_modulus = std::min(rep.min_nonzero_modulus, std::abs(z));
    }
    rep.pass = rep.zero_multiplicity == rep.expected_zero_multiplicity &&
               (rep.roots.size() == static_cast<size_t>(rep.zero_multiplicity) ||
                rep.min_nonzero_modulus >= 1.0 - 1e-8);
    return rep;
}

} // namespace sopol
