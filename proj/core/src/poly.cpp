#include "sopol/poly.hpp"

#include <algorithm>
#include <cmath>

namespace sopol {

cplx falling_factorial(cplx c, int k) {
    cplx out(1.0);
    for (int i = 0; i < k; ++i) out *= (c - cplx(static_cast<double>(i)));
    return out;
}

cplx pow_int(cplx z, int k) {
    cplx out(1.0);
    for (int i = 0; i < k; ++i) out *= z;
    return out;
}

CPoly CPoly::monomial(int n, cplx coeff) {
    if (coeff == cplx(0.0)) return zero();
    std::vector<cplx> c(static_cast<size_t>(n) + 1, cplx(0.0));
    c.back() = coeff;
    CPoly p;
    p.c_ = std::move(c);
    return p;
}

void CPoly::normalize() {
    while (!c_.empty() && c_.back() == cplx(0.0)) c_.pop_back();
}

cplx CPoly::operator()(cplx z) const {
    cplx acc(0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

CPoly CPoly::derivative(int k) const {
    // Repeated single derivatives: coefficient of z^e picks up the factors
    // (e+k)(e+k-1)...(e+1) one at a time, top factor first. The family
    // constructors mirror exactly this product order so that defining-equation
    // residuals cancel to zero in floating point, not just to rounding.
    std::vector<cplx> cur(c_.begin(), c_.end());
    for (int pass = 0; pass < k && !cur.empty(); ++pass) {
        std::vector<cplx> next(cur.size() > 1 ? cur.size() - 1 : 0);
        for (size_t e = 1; e < cur.size(); ++e)
            next[e - 1] = cur[e] * static_cast<double>(e);
        cur = std::move(next);
    }
    return CPoly(std::move(cur));
}

CPoly CPoly::operator-() const {
    CPoly out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
}

CPoly& CPoly::operator+=(const CPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), cplx(0.0));
    for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    normalize();
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), cplx(0.0));
    for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    normalize();
    return *this;
}

CPoly operator*(const CPoly& lhs, const CPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return CPoly::zero();
    std::vector<cplx> out(lhs.c_.size() + rhs.c_.size() - 1, cplx(0.0));
    for (size_t i = 0; i < lhs.c_.size(); ++i)
        for (size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
    return CPoly(std::move(out));
}

CPoly operator*(cplx s, const CPoly& p) {
    if (s == cplx(0.0)) return CPoly::zero();
    CPoly out = p;
    for (auto& v : out.c_) v = s * v;
    out.normalize();
    return out;
}

double CPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
}

} // namespace sopol
