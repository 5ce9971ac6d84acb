#include <doctest.h>

#include <cmath>

#include "sopol/errors.hpp"
#include "sopol/series.hpp"
#include "test_util.hpp"

using sopol::cplx;
using sopol::CPoly;
using sopol::TruncatedSeries;
using test_util::Rng;

namespace {

double max_coeff_dev(const TruncatedSeries& a, const TruncatedSeries& b) {
    double worst = 0.0;
    for (int k = 0; k < std::max(a.order(), b.order()); ++k)
        worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
    return worst;
}

TruncatedSeries random_series(Rng& rng, int order, bool unit_constant) {
    std::vector<cplx> c(static_cast<size_t>(order));
    for (auto& v : c) v = rng.unit_disk();
    if (unit_constant) c[0] = cplx(1.0) + 0.5 * rng.unit_disk();
    return TruncatedSeries(std::move(c), order);
}

} // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("reciprocal basics") {
    CHECK(sopol::series_recip(TruncatedSeries::one(6)) == TruncatedSeries::one(6));

    // 1/(1-w) is the geometric series
    TruncatedSeries s = TruncatedSeries::from_poly(CPoly{cplx(1.0), cplx(-1.0)}, 4);
    TruncatedSeries r = sopol::series_recip(s);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(r.coeff(k) - cplx(1.0)) < 1e-15);

    CHECK_THROWS_AS(sopol::series_recip(TruncatedSeries(5)), sopol::SingularSeriesError);
}

TEST_CASE("reciprocal of 1 + a*w^r is geometric in a*w^r") {
    Rng rng(11);
    for (int r : {1, 2, 3}) {
        cplx a = rng.unit_disk() + cplx(0.5);
        const int order = 13;
        TruncatedSeries s(order);
        s += TruncatedSeries::one(order);
        s += TruncatedSeries::from_poly(CPoly::monomial(r, a), order);
        TruncatedSeries rec = sopol::series_recip(s);
        for (int k = 0; k < order; ++k) {
            cplx expect = (k % r == 0) ? sopol::pow_int(-a, k / r) : cplx(0.0);
            CHECK(std::abs(rec.coeff(k) - expect) <= 1e-12 * (1.0 + std::abs(expect)));
        }
    }
}

TEST_CASE("s * recip(s) = 1 up to truncation") {
    Rng rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries s = random_series(rng, 16, true);
        TruncatedSeries t = sopol::series_recip(s);
        double smax = 0.0, tmax = 0.0;
        for (int k = 0; k < 16; ++k) {
            smax = std::max(smax, std::abs(s.coeff(k)));
            tmax = std::max(tmax, std::abs(t.coeff(k)));
        }
        // residual is relative to the convolution terms, which grow when the
        // constant term is small
        CHECK(max_coeff_dev(s * t, TruncatedSeries::one(16)) <= 1e-14 * (1.0 + smax * tmax));
    }
}

TEST_CASE("reciprocal is an involution up to truncation") {
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries s = random_series(rng, 12, true);
        TruncatedSeries rr = sopol::series_recip(sopol::series_recip(s));
        double scale = 0.0;
        for (int k = 0; k < 12; ++k) scale = std::max(scale, std::abs(s.coeff(k)));
        CHECK(max_coeff_dev(rr, s) <= 1e-12 * (1.0 + scale));
    }
}

TEST_CASE("composition") {
    // inner = w reproduces the outer coefficients
    CPoly p{cplx(3.0), cplx(-1.0), cplx(2.0)};
    TruncatedSeries w = TruncatedSeries::from_poly(CPoly::monomial(1), 8);
    TruncatedSeries c = sopol::series_compose(p, w);
    for (int k = 0; k < 8; ++k) CHECK(c.coeff(k) == p.coeff(k));

    // z^2 composed with 2w
    TruncatedSeries two_w = TruncatedSeries::from_poly(CPoly::monomial(1, cplx(2.0)), 5);
    TruncatedSeries sq = sopol::series_compose(CPoly::monomial(2), two_w);
    CHECK(sq.coeff(2) == cplx(4.0));
    CHECK(sq.coeff(0) == cplx(0.0));
    CHECK(sq.coeff(1) == cplx(0.0));

    // (1 + z) o (w + w^2) at order 3
    TruncatedSeries inner =
        TruncatedSeries::from_poly(CPoly{cplx(0.0), cplx(1.0), cplx(1.0)}, 3);
    TruncatedSeries comp = sopol::series_compose(CPoly{cplx(1.0), cplx(1.0)}, inner);
    CHECK(comp.coeff(0) == cplx(1.0));
    CHECK(comp.coeff(1) == cplx(1.0));
    CHECK(comp.coeff(2) == cplx(1.0));

    CHECK_THROWS_AS(sopol::series_compose(p, TruncatedSeries::one(4)), std::domain_error);
}

TEST_CASE("series arithmetic agrees with polynomial arithmetic below the order") {
    Rng rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        CPoly p = rng.poly(rng.uniform_int(0, 6));
        CPoly q = rng.poly(rng.uniform_int(0, 6));
        const int order = 14; // deg(pq) <= 12 < order
        TruncatedSeries prod =
            TruncatedSeries::from_poly(p, order) * TruncatedSeries::from_poly(q, order);
        CHECK(max_coeff_dev(prod, TruncatedSeries::from_poly(p * q, order)) <= 1e-13);
    }
}

TEST_CASE("exp series helper matches factorials") {
    TruncatedSeries e = TruncatedSeries::exp_quadratic(cplx(0.0), cplx(1.0), 10);
    double fact = 1.0;
    for (int k = 0; k < 10; ++k) {
        if (k > 0) fact *= k;
        CHECK(std::abs(e.coeff(k) - cplx(1.0 / fact)) <= 1e-15 / fact);
    }
}

TEST_SUITE_END();
