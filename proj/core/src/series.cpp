#include "sopol/series.hpp"

#include <stdexcept>

#include "sopol/errors.hpp"

namespace sopol {

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs, int order)
    : c_(std::move(coeffs)) {
    c_.resize(static_cast<size_t>(order), cplx(0.0));
}

TruncatedSeries TruncatedSeries::from_poly(const CPoly& p, int order) {
    TruncatedSeries s(order);
    for (int k = 0; k < order; ++k) s.c_[static_cast<size_t>(k)] = p.coeff(k);
    return s;
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    if (order > 0) s.c_[0] = cplx(1.0);
    return s;
}

TruncatedSeries TruncatedSeries::exp_quadratic(cplx a, cplx b, int order) {
    // exp(aw^2 + bw) satisfies f' = (2aw + b) f, giving the coefficient
    // recurrence (k+1) f_{k+1} = b f_k + 2a f_{k-1}.
    TruncatedSeries s(order);
    if (order == 0) return s;
    s.c_[0] = cplx(1.0);
    for (int k = 0; k + 1 < order; ++k) {
        cplx v = b * s.c_[static_cast<size_t>(k)];
        if (k >= 1) v += 2.0 * a * s.c_[static_cast<size_t>(k - 1)];
        s.c_[static_cast<size_t>(k + 1)] = v / static_cast<double>(k + 1);
    }
    return s;
}

cplx TruncatedSeries::operator()(cplx w) const {
    cplx acc(0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * w + *it;
    return acc;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    if (rhs.order() > order()) c_.resize(rhs.c_.size(), cplx(0.0));
    for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    if (rhs.order() > order()) c_.resize(rhs.c_.size(), cplx(0.0));
    for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::max(a.order(), b.order());
    TruncatedSeries out(n);
    for (int i = 0; i < n; ++i) {
        cplx acc(0.0);
        for (int j = 0; j <= i; ++j) acc += a.coeff(j) * b.coeff(i - j);
        out.c_[static_cast<size_t>(i)] = acc;
    }
    return out;
}

TruncatedSeries operator*(cplx s, const TruncatedSeries& a) {
    TruncatedSeries out = a;
    for (auto& v : out.c_) v = s * v;
    return out;
}

TruncatedSeries series_recip(const TruncatedSeries& s) {
    if (s.order() == 0) return s;
    cplx s0 = s.constant_term();
    if (s0 == cplx(0.0))
        throw SingularSeriesError("series reciprocal: constant term is zero");
    TruncatedSeries t(s.order());
    std::vector<cplx> out(static_cast<size_t>(s.order()));
    out[0] = cplx(1.0) / s0;
    for (int k = 1; k < s.order(); ++k) {
        cplx acc(0.0);
        for (int j = 1; j <= k; ++j) acc += s.coeff(j) * out[static_cast<size_t>(k - j)];
        out[static_cast<size_t>(k)] = -acc / s0;
    }
    return TruncatedSeries(std::move(out), s.order());
}

TruncatedSeries series_compose(const CPoly& outer, const TruncatedSeries& inner) {
    if (inner.constant_term() != cplx(0.0))
        throw std::domain_error("series composition: inner constant term must be zero");
    int n = inner.order();
    // Horner in the series ring.
    TruncatedSeries acc(n);
    for (int k = outer.degree(); k >= 0; --k) {
        acc = acc * inner;
        acc += TruncatedSeries::from_poly(CPoly{outer.coeff(k)}, n);
    }
    return acc;
}

} // namespace sopol
