#ifndef SOPOL_POLY_HPP
#define SOPOL_POLY_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace sopol {

using cplx = std::complex<double>;

/// Falling factorial [c]_k = c(c-1)...(c-k+1), with [c]_0 = 1.
cplx falling_factorial(cplx c, int k);

/// z^k by repeated multiplication (0^0 = 1); avoids the NaN of complex pow at 0.
cplx pow_int(cplx z, int k);

/// Complex polynomial stored as ascending-degree coefficients.
///
/// Normalized form: the coefficient vector is empty (the zero polynomial) or its
/// last entry is nonzero. Values are immutable after construction; all operations
/// return new polynomials and are safe to call concurrently.
class CPoly {
public:
    CPoly() = default;
    CPoly(std::initializer_list<cplx> coeffs) : c_(coeffs) { normalize(); }
    explicit CPoly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static CPoly zero() { return CPoly{}; }
    static CPoly one() { return CPoly{cplx(1.0)}; }
    /// c * z^n
    static CPoly monomial(int n, cplx coeff = cplx(1.0));

    /// Index of the last structurally nonzero coefficient; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of z^k; zero outside the stored range.
    cplx coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)]
                                                           : cplx(0.0);
    }
    std::span<const cplx> coeffs() const { return c_; }
    cplx leading() const { return c_.empty() ? cplx(0.0) : c_.back(); }

    /// Horner evaluation.
    cplx operator()(cplx z) const;

    /// k-th derivative; the degree drops by k or the result is zero.
    CPoly derivative(int k = 1) const;

    CPoly operator-() const;
    CPoly& operator+=(const CPoly& rhs);
    CPoly& operator-=(const CPoly& rhs);

    friend CPoly operator+(CPoly lhs, const CPoly& rhs) { return lhs += rhs; }
    friend CPoly operator-(CPoly lhs, const CPoly& rhs) { return lhs -= rhs; }
    friend CPoly operator*(const CPoly& lhs, const CPoly& rhs);
    friend CPoly operator*(cplx s, const CPoly& p);
    friend CPoly operator*(const CPoly& p, cplx s) { return s * p; }
    friend bool operator==(const CPoly& lhs, const CPoly& rhs) { return lhs.c_ == rhs.c_; }

    /// Largest coefficient magnitude (0 for the zero polynomial).
    double max_abs_coeff() const;

private:
    void normalize();
    std::vector<cplx> c_;
};

/// All deg(p) roots with multiplicity (Aberth-Ehrlich simultaneous iteration).
/// Exact zero roots are deflated structurally first. Throws std::domain_error
/// for the zero polynomial; a nonzero constant has no roots.
std::vector<cplx> poly_roots(const CPoly& p);

} // namespace sopol

#endif
