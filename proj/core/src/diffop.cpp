#include "sopol/diffop.hpp"

#include <cmath>
#include <sstream>

#include "sopol/errors.hpp"

namespace sopol {

LinearDiffOp::LinearDiffOp(std::vector<CPoly> coeffs) : d_(std::move(coeffs)) {
    if (d_.empty()) d_.push_back(CPoly::zero());
}

LinearDiffOp LinearDiffOp::constant_coefficients(const CPoly& p) {
    std::vector<CPoly> d;
    for (int k = 0; k <= p.degree(); ++k) d.push_back(CPoly{p.coeff(k)});
    return LinearDiffOp(std::move(d));
}

CPoly LinearDiffOp::apply(const CPoly& y) const {
    CPoly acc = CPoly::zero();
    CPoly der = y;
    for (size_t k = 0; k < d_.size(); ++k) {
        if (!d_[k].is_zero() && !der.is_zero()) acc += d_[k] * der;
        der = der.derivative();
    }
    return acc;
}

double LinearDiffOp::term_scale(const CPoly& y) const {
    double scale = 0.0;
    CPoly der = y;
    for (size_t k = 0; k < d_.size(); ++k) {
        if (!d_[k].is_zero() && !der.is_zero())
            scale = std::max(scale, (d_[k] * der).max_abs_coeff());
        der = der.derivative();
    }
    return scale;
}

cplx diagonal_sum(const LinearDiffOp& op, int n) {
    cplx s(0.0);
    for (int j = 0; j <= op.order(); ++j)
        s += falling_factorial(cplx(static_cast<double>(n)), j) * op.coeff(j).coeff(j);
    return s;
}

DegreeCheck check_degree_preserving(const LinearDiffOp& op, int n_max) {
    DegreeCheck out;
    for (int k = 0; k <= op.order(); ++k) {
        if (op.coeff(k).degree() > k) {
            out.ok = false;
            out.bad_coeff = k;
            std::ostringstream os;
            os << "coefficient d_" << k << " has degree " << op.coeff(k).degree()
               << " > " << k;
            out.detail = os.str();
            return out;
        }
    }
    for (int n = 0; n <= n_max; ++n) {
        cplx s = diagonal_sum(op, n);
        double scale = 0.0;
        for (int j = 0; j <= op.order(); ++j) {
            double f = std::abs(falling_factorial(cplx(static_cast<double>(n)), j));
            scale += std::max(1.0, f) * std::abs(op.coeff(j).coeff(j));
        }
        if (std::abs(s) <= 1e-12 * scale) {
            out.ok = false;
            out.bad_n = n;
            std::ostringstream os;
            os << "diagonal sum vanishes at n = " << n;
            out.detail = os.str();
            return out;
        }
    }
    return out;
}

CPoly solve_poly_ode(const LinearDiffOp& op, const CPoly& u) {
    const int n = u.degree();
    DegreeCheck chk = check_degree_preserving(op, std::max(0, n));
    if (!chk.ok) throw UnsolvableOperatorError(chk.detail);
    if (n < 0) return CPoly::zero();

    const int r = op.order();
    std::vector<cplx> mu(static_cast<size_t>(n) + 1, cplx(0.0));
    mu[static_cast<size_t>(n)] = u.coeff(n) / diagonal_sum(op, n);
    for (int s = n - 1; s >= 0; --s) {
        cplx acc = u.coeff(s);
        for (int j = s + 1; j <= n; ++j) {
            cplx c(0.0);
            for (int l = 0; l <= r; ++l) {
                int m = l + s - j;
                if (m >= 0) c += falling_factorial(cplx(static_cast<double>(j)), l) *
                                 op.coeff(l).coeff(m);
            }
            acc -= mu[static_cast<size_t>(j)] * c;
        }
        mu[static_cast<size_t>(s)] = acc / diagonal_sum(op, s);
    }
    return CPoly(std::move(mu));
}

} // namespace sopol
