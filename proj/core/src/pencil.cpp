#include "sopol/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sopol {

BandedMatrix::BandedMatrix(int size, int lower, int upper)
    : size_(size), lower_(lower), upper_(upper),
      diag_(static_cast<size_t>(lower + upper) + 1,
            std::vector<cplx>(static_cast<size_t>(size), cplx(0.0))) {
    if (size < 1 || lower < 0 || upper < 0)
        throw std::invalid_argument("banded matrix: bad shape");
}

cplx BandedMatrix::at(int i, int j) const {
    if (i < 0 || i >= size_ || j < 0 || j >= size_) return cplx(0.0);
    int o = j - i;
    if (o < -lower_ || o > upper_) return cplx(0.0);
    return diag_[static_cast<size_t>(o + lower_)][static_cast<size_t>(i)];
}

void BandedMatrix::add(int i, int j, cplx v) {
    int o = j - i;
    if (i < 0 || i >= size_ || j < 0 || j >= size_ || o < -lower_ || o > upper_)
        throw std::out_of_range("banded matrix: entry outside declared bands");
    diag_[static_cast<size_t>(o + lower_)][static_cast<size_t>(i)] += v;
}

std::vector<cplx> BandedMatrix::apply(std::span<const cplx> v) const {
    if (static_cast<int>(v.size()) < size_)
        throw std::invalid_argument("banded matrix: vector shorter than truncation");
    std::vector<cplx> out(static_cast<size_t>(size_), cplx(0.0));
    for (int i = 0; i < size_; ++i) {
        cplx acc(0.0);
        for (int o = -lower_; o <= upper_; ++o) {
            int j = i + o;
            if (j < 0 || j >= size_) continue;
            acc += diag_[static_cast<size_t>(o + lower_)][static_cast<size_t>(i)] *
                   v[static_cast<size_t>(j)];
        }
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

BandedPencil pencil_from_recurrence(PencilFamily family, const PencilParams& params,
                                    int truncation) {
    const int T = truncation;
    auto in_window = [T](int j) { return j >= 0 && j < T; };
    switch (family) {
        case PencilFamily::Monomials: {
            BandedMatrix L(T, 0, 0), M(T, 1, 0);
            for (int n = 0; n < T; ++n) L.add(n, n, cplx(1.0));
            for (int n = 1; n < T; ++n) M.add(n, n - 1, cplx(1.0));
            return {std::move(L), std::move(M)};
        }
        case PencilFamily::W: {
            const double a = params.alpha;
            BandedMatrix L(T, 1, 1), M(T, 2, 0);
            for (int n = 0; n < T; ++n) {
                if (in_window(n + 1)) L.add(n, n + 1, cplx(1.0));
                if (in_window(n - 1))
                    L.add(n, n - 1, cplx(a * n * (n + 1.0)));
                M.add(n, n, cplx(1.0));
                if (in_window(n - 2))
                    M.add(n, n - 2, cplx(a * (n - 1.0) * n));
            }
            return {std::move(L), std::move(M)};
        }
        case PencilFamily::PhiMonomial:
        case PencilFamily::PhiHermite: {
            const CPoly& c = params.c;
            const int d = c.degree();
            if (d < 0 || c.coeff(0) == cplx(0.0))
                throw std::invalid_argument("pencil: p must have a nonzero constant term");
            const bool herm = family == PencilFamily::PhiHermite;
            BandedMatrix L(T, herm ? d + 1 : std::max(0, d - 1), 1), M(T, d, 0);
            auto inv_fact = [](int m) {
                double f = 1.0;
                for (int i = 2; i <= m; ++i) f *= i;
                return 1.0 / f;
            };
            for (int n = 0; n < T; ++n) {
                for (int k = 0; k <= d; ++k) {
                    cplx ck = c.coeff(k) * (herm ? pow_int(cplx(2.0), k) : cplx(1.0));
                    if (int j = n + 1 - k; in_window(j))
                        L.add(n, j, static_cast<double>(n + 1) * ck * inv_fact(j));
                    if (herm) {
                        if (int j = n - 1 - k; in_window(j))
                            L.add(n, j, 2.0 * ck * inv_fact(j));
                    }
                    if (int j = n - k; in_window(j))
                        M.add(n, j, (herm ? 2.0 : 1.0) * ck * inv_fact(j));
                }
            }
            return {std::move(L), std::move(M)};
        }
    }
    throw std::invalid_argument("pencil: unsupported family");
}

double pencil_residual(const BandedPencil& pencil, std::span<const CPoly> polys,
                       std::span<const cplx> z_samples) {
    const int T = pencil.L.size();
    const int lower = std::max(pencil.L.lower(), pencil.M.lower());
    const int upper = std::max(pencil.L.upper(), pencil.M.upper());
    if (static_cast<int>(polys.size()) < T + lower + upper)
        throw std::invalid_argument("pencil residual: polynomial sequence too short");
    double worst = 0.0;
    for (const cplx& z : z_samples) {
        std::vector<cplx> vals(static_cast<size_t>(T));
        for (int j = 0; j < T; ++j) vals[static_cast<size_t>(j)] = polys[static_cast<size_t>(j)](z);
        auto ly = pencil.L.apply(vals);
        auto my = pencil.M.apply(vals);
        for (int n = lower; n + upper < T; ++n) {
            cplx rhs = z * my[static_cast<size_t>(n)];
            // The row combinations cancel factorially graded values down to a
            // monomial-sized result; normalize by the largest term actually
            // summed, not only by the cancelled row value.
            double scale = std::abs(rhs);
            for (int o = -lower; o <= upper; ++o) {
                int j = n + o;
                if (j < 0 || j >= T) continue;
                double vj = std::abs(vals[static_cast<size_t>(j)]);
                scale = std::max(scale, std::abs(pencil.L.at(n, j)) * vj);
                scale = std::max(scale, std::abs(z) * std::abs(pencil.M.at(n, j)) * vj);
            }
            double res = std::abs(ly[static_cast<size_t>(n)] - rhs) / (1.0 + scale);
            worst = std::max(worst, res);
        }
    }
    return worst;
}

double diff_pencil_residual(const DiffPencil& pencil, const CPoly& yn, int n) {
    CPoly lhs = pencil.R.apply(yn);
    cplx lam = pencil.lambda(n);
    CPoly rhs = lam * pencil.S.apply(yn);
    double scale = std::max({1.0, pencil.R.term_scale(yn),
                             std::abs(lam) * pencil.S.term_scale(yn)});
    return (lhs - rhs).max_abs_coeff() / scale;
}

DiffPencil diff_pencil_for(PencilFamily family, const PencilParams& params) {
    switch (family) {
        case PencilFamily::Monomials: {
            // z y' = n y
            LinearDiffOp R({CPoly::zero(), CPoly::monomial(1)});
            return {std::move(R), LinearDiffOp::identity(),
                    [](int n) { return cplx(static_cast<double>(n)); }};
        }
        case PencilFamily::W: {
            // alpha z y^{(r+1)} + z y' = n (alpha y^{(r)} + y)
            const int r = params.r;
            std::vector<CPoly> rc(static_cast<size_t>(r) + 2, CPoly::zero());
            rc[1] = CPoly::monomial(1);
            rc[static_cast<size_t>(r) + 1] = CPoly::monomial(1, cplx(params.alpha));
            std::vector<CPoly> sc(static_cast<size_t>(r) + 1, CPoly::zero());
            sc[0] = CPoly::one();
            sc[static_cast<size_t>(r)] = CPoly{cplx(params.alpha)};
            return {LinearDiffOp(std::move(rc)), LinearDiffOp(std::move(sc)),
                    [](int n) { return cplx(static_cast<double>(n)); }};
        }
        case PencilFamily::PhiMonomial: {
            // t sum_k c_k y^{(k+1)} = n sum_k c_k y^{(k)}
            const CPoly& c = params.c;
            const int d = c.degree();
            std::vector<CPoly> rc(static_cast<size_t>(d) + 2, CPoly::zero());
            for (int k = 0; k <= d; ++k)
                rc[static_cast<size_t>(k) + 1] = CPoly::monomial(1, c.coeff(k));
            return {LinearDiffOp(std::move(rc)), LinearDiffOp::constant_coefficients(c),
                    [](int n) { return cplx(static_cast<double>(n)); }};
        }
        case PencilFamily::PhiHermite: {
            // sum_k c_k y^{(k+2)} - 2t sum_k c_k y^{(k+1)} = -2n sum_k c_k y^{(k)}
            const CPoly& c = params.c;
            const int d = c.degree();
            std::vector<CPoly> rc(static_cast<size_t>(d) + 3, CPoly::zero());
            for (int k = 0; k <= d; ++k) {
                rc[static_cast<size_t>(k) + 2] += CPoly{c.coeff(k)};
                rc[static_cast<size_t>(k) + 1] += CPoly::monomial(1, -2.0 * c.coeff(k));
            }
            return {LinearDiffOp(std::move(rc)), LinearDiffOp::constant_coefficients(c),
                    [](int n) { return cplx(-2.0 * n); }};
        }
    }
    throw std::invalid_argument("pencil: unsupported family");
}

} // namespace sopol
