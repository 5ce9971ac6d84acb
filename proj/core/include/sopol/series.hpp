#ifndef SOPOL_SERIES_HPP
#define SOPOL_SERIES_HPP

#include <vector>

#include "sopol/poly.hpp"

namespace sopol {

/// Power series truncated at a fixed order N: coefficients of w^0 .. w^{N-1}.
/// Arithmetic is closed at order N; everything of order >= N is dropped.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(static_cast<size_t>(order), cplx(0.0)) {}
    TruncatedSeries(std::vector<cplx> coeffs, int order);

    static TruncatedSeries from_poly(const CPoly& p, int order);
    static TruncatedSeries one(int order);
    /// exp(a*w^2 + b*w) truncated; the workhorse for exponential generating functions.
    static TruncatedSeries exp_quadratic(cplx a, cplx b, int order);

    int order() const { return static_cast<int>(c_.size()); }
    cplx coeff(int k) const {
        return (k >= 0 && k < order()) ? c_[static_cast<size_t>(k)] : cplx(0.0);
    }
    std::span<const cplx> coeffs() const { return c_; }
    cplx constant_term() const { return c_.empty() ? cplx(0.0) : c_[0]; }

    /// Horner evaluation of the truncation (a polynomial of degree < N).
    cplx operator()(cplx w) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(cplx s, const TruncatedSeries& a);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

private:
    std::vector<cplx> c_;
};

/// t with s*t = 1 + O(w^N). Throws SingularSeriesError when s(0) = 0.
TruncatedSeries series_recip(const TruncatedSeries& s);

/// outer(inner(w)) truncated at inner's order. The inner series must have zero
/// constant term (throws std::domain_error otherwise).
TruncatedSeries series_compose(const CPoly& outer, const TruncatedSeries& inner);

} // namespace sopol

#endif
