#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sopol/diffop.hpp"
#include "sopol/errors.hpp"
#include "sopol/families.hpp"
#include "test_util.hpp"

using sopol::cplx;
using sopol::CPoly;
using sopol::FamilyParams;
using sopol::GenFnSpec;
using sopol::GSystem;
using sopol::LinearDiffOp;
using test_util::Rng;

namespace {

double factorial_d(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

LinearDiffOp defining_op(int r, double alpha) {
    std::vector<CPoly> d(static_cast<size_t>(r) + 1, CPoly::zero());
    d[0] = CPoly::one();
    d[static_cast<size_t>(r)] = CPoly{cplx(alpha)};
    return LinearDiffOp(std::move(d));
}

double zero_sum_residual(const std::vector<CPoly>& terms) {
    CPoly sum = CPoly::zero();
    double scale = 1.0;
    for (const CPoly& t : terms) {
        sum += t;
        scale = std::max(scale, t.max_abs_coeff());
    }
    return sum.max_abs_coeff() / scale;
}

} // namespace

TEST_SUITE_BEGIN("families");

TEST_CASE("closed forms of the constant-coefficient family") {
    CHECK(sopol::y_family({.r = 3, .alpha = 0.0}, 7) == CPoly::monomial(7));
    CHECK(sopol::y_family({.r = 2, .alpha = -1.0}, 2) ==
          CPoly{cplx(2.0), cplx(0.0), cplx(1.0)});
    CHECK(sopol::y_family({.r = 1, .alpha = 1.0}, 3) ==
          CPoly{cplx(-6.0), cplx(6.0), cplx(-3.0), cplx(1.0)});
}

TEST_CASE("defining equation cancels exactly") {
    for (auto [r, alpha] : {std::pair{1, 1.0}, {2, -1.0}, {3, 0.5}}) {
        LinearDiffOp op = defining_op(r, alpha);
        for (int n = 0; n <= 20; ++n) {
            CPoly residual =
                op.apply(sopol::y_family({.r = r, .alpha = alpha}, n)) - CPoly::monomial(n);
            CHECK(residual.max_abs_coeff() == 0.0);
        }
    }
}

TEST_CASE("w family closed forms and domain") {
    CHECK(sopol::w_family(-1.0, 0) == CPoly::one());
    CHECK(sopol::w_family(-1.0, 2) == CPoly{cplx(2.0), cplx(0.0), cplx(1.0)});
    CHECK(sopol::w_family(-1.0, 4) ==
          CPoly{cplx(24.0), cplx(0.0), cplx(12.0), cplx(0.0), cplx(1.0)});
    CHECK_THROWS_AS(sopol::w_family(0.5, 3), std::domain_error);
}

TEST_CASE("mixed relation and family ode") {
    const CPoly z = CPoly::monomial(1);
    for (auto [r, alpha] : {std::pair{1, 1.0}, {2, -1.0}, {3, 0.5}}) {
        FamilyParams fp{.r = r, .alpha = alpha};
        for (int n = 0; n <= 20; ++n) {
            CPoly yn = sopol::y_family(fp, n);
            CPoly yn1 = sopol::y_family(fp, n + 1);
            CHECK(zero_sum_residual({cplx(alpha) * yn1.derivative(r), yn1,
                                     -(z * (cplx(alpha) * yn.derivative(r))), -(z * yn)}) <=
                  1e-10);
            CHECK(zero_sum_residual({z * (cplx(alpha) * yn.derivative(r + 1)),
                                     z * yn.derivative(),
                                     cplx(-double(n) * alpha) * yn.derivative(r),
                                     cplx(-double(n)) * yn}) <= 1e-10);
        }
    }
}

TEST_CASE("w recurrence and monomial image identity") {
    for (double alpha : {-1.0, -0.25}) {
        const CPoly z = CPoly::monomial(1);
        std::vector<CPoly> w;
        for (int n = 0; n <= 21; ++n) w.push_back(sopol::w_family(alpha, n));
        auto wat = [&](int n) { return n >= 0 ? w[static_cast<size_t>(n)] : CPoly::zero(); };
        const double beta = std::sqrt(-1.0 / alpha);
        for (int n = 0; n <= 20; ++n) {
            CHECK(zero_sum_residual(
                      {wat(n + 1), cplx(alpha * n * (n + 1.0)) * wat(n - 1), -(z * wat(n)),
                       -(z * (cplx(alpha * (n - 1.0) * n) * wat(n - 2)))}) <= 1e-10);
            CHECK(zero_sum_residual({wat(n),
                                     cplx(-n * (n - 1.0) / (beta * beta)) * wat(n - 2),
                                     -CPoly::monomial(n)}) <= 1e-10);
        }
    }
}

TEST_CASE("laplace integral representation of w") {
    CHECK(sopol::w_integral_rep(-1.0, 0, 0.37) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sopol::w_integral_rep(-1.0, 2, 1.0) == doctest::Approx(3.0).epsilon(1e-10));
    double ref = sopol::w_family(-0.25, 7)(cplx(-2.0)).real();
    CHECK(std::abs(sopol::w_integral_rep(-0.25, 7, -2.0) - ref) <= 1e-8 * std::abs(ref));
    CHECK_THROWS_AS(sopol::w_integral_rep(1.0, 2, 0.0), std::domain_error);
}

TEST_CASE("w generating coefficients") {
    auto c0 = sopol::w_generating_coeff(-1.0, cplx(0.3), 1);
    CHECK(std::abs(c0[0] - cplx(1.0)) < 1e-15);

    double t = 1.3, alpha = -0.5;
    auto c = sopol::w_generating_coeff(alpha, cplx(t), 3);
    CHECK(std::abs(c[2] - cplx((t * t - 2.0 * alpha) / 2.0)) < 1e-13);

    auto cs = sopol::w_generating_coeff(-1.0, cplx(0.7), 13);
    for (int n = 0; n < 13; ++n) {
        double ref = sopol::w_family(-1.0, n)(cplx(0.7)).real() / factorial_d(n);
        CHECK(std::abs(cs[static_cast<size_t>(n)] - cplx(ref)) <= 1e-10 * std::abs(ref));
    }
}

TEST_CASE("exponential partial sum family") {
    CHECK(sopol::expsum_family(0) == CPoly{cplx(-1.0)});
    CHECK(sopol::expsum_family(1) == CPoly{cplx(-1.0), cplx(-1.0)});
    LinearDiffOp shift({CPoly{cplx(-1.0)}, CPoly::one()});
    CHECK(shift.apply(sopol::expsum_family(6)) == CPoly::monomial(6));
}

TEST_CASE("hermite polynomials") {
    CHECK(sopol::hermite(0) == CPoly::one());
    CHECK(sopol::hermite(3) == CPoly{cplx(0.0), cplx(-12.0), cplx(0.0), cplx(8.0)});
    CPoly h5 = sopol::hermite(5);
    CPoly residual = h5.derivative(2) - CPoly::monomial(1, cplx(2.0)) * h5.derivative() +
                     cplx(10.0) * h5;
    CHECK(residual.max_abs_coeff() == 0.0);
}

TEST_CASE("generating-function family basics") {
    // trivial symbol: phi_n collapses to the base system
    GenFnSpec trivial = GenFnSpec::monomials(CPoly::one(), 12);
    CHECK(sopol::phi_family(trivial, 7) == CPoly::monomial(7));
    GenFnSpec trivial_h = GenFnSpec::hermite(CPoly::one(), 12);
    CHECK(test_util::rel_coeff_distance(sopol::phi_family(trivial_h, 6), sopol::hermite(6)) <=
          1e-14);

    // p = alpha z^r + 1 with monomial base reproduces the ode solution route
    for (auto [r, alpha] : {std::pair{2, -1.0}, {3, 0.5}}) {
        std::vector<cplx> pc(static_cast<size_t>(r) + 1, cplx(0.0));
        pc[0] = cplx(1.0);
        pc[static_cast<size_t>(r)] = cplx(alpha);
        GenFnSpec gf = GenFnSpec::monomials(CPoly{std::move(pc)}, 20);
        for (int n : {0, 3, 11}) {
            CPoly via_series = sopol::phi_family(gf, n);
            CPoly via_ode = sopol::y_family({.r = r, .alpha = alpha}, n);
            CHECK(test_util::rel_coeff_distance(via_series, via_ode) <= 1e-12);
        }
    }

    GenFnSpec gf = GenFnSpec::hermite(CPoly{cplx(2.0), cplx(1.0)}, 8);
    auto b = sopol::genfn_b_coeffs(gf, 3);
    CHECK(std::abs(b[0] - cplx(0.5)) < 1e-15);

    CHECK_THROWS_AS(GenFnSpec::monomials(CPoly::monomial(1), 8), std::domain_error);
}

TEST_CASE("contour representation") {
    GenFnSpec trivial = GenFnSpec::monomials(CPoly::one(), 8);
    CHECK(std::abs(sopol::phi_contour_rep(trivial, 0, cplx(0.4, 0.2), 0.5, 64) - cplx(1.0)) <=
          1e-9);

    GenFnSpec gf = GenFnSpec::monomials(CPoly{cplx(1.0), cplx(0.0), cplx(1.0)}, 16);
    cplx ref = sopol::phi_family(gf, 5)(cplx(0.3));
    cplx got = sopol::phi_contour_rep(gf, 5, cplx(0.3), 0.5, 256);
    CHECK(std::abs(got - ref) <= 1e-7 * std::max(1.0, std::abs(ref)));

    cplx coarse = sopol::phi_contour_rep(gf, 5, cplx(0.3), 0.5, 128);
    CHECK(std::abs(got - coarse) <= 1e-9 * std::max(1.0, std::abs(got)));

    CHECK_THROWS_AS(sopol::phi_contour_rep(gf, 2, cplx(0.1), 1.0, 64), sopol::ContourError);
}

TEST_CASE("lifted families from coefficient tables") {
    auto identity = sopol::coefficient_table(GSystem::Monomials, 8);
    FamilyParams fp{.r = 2, .alpha = -1.0};
    CHECK(sopol::yhat_family(identity, fp, 6) == sopol::y_family(fp, 6));

    auto herm = sopol::coefficient_table(GSystem::Hermite, 8);
    FamilyParams fp11{.r = 1, .alpha = 1.0};
    CHECK(sopol::yhat_family(herm, fp11, 1) == CPoly{cplx(-2.0), cplx(2.0)});

    // applying the defining operator returns the base polynomial
    LinearDiffOp op = defining_op(2, -1.0);
    for (int n : {0, 4, 8}) {
        CPoly img = op.apply(sopol::yhat_family(herm, fp, n));
        CHECK(test_util::rel_coeff_distance(img, sopol::hermite(n)) <= 1e-10);
    }

    sopol::CoeffTable degenerate = {{cplx(1.0)}, {cplx(1.0), cplx(0.0)}};
    CHECK_THROWS_AS(sopol::yhat_family(degenerate, fp, 1), std::domain_error);
}

TEST_CASE("laplace representation of lifted families") {
    auto identity = sopol::coefficient_table(GSystem::Monomials, 6);
    for (int n : {0, 3, 6}) {
        double t = 0.8;
        cplx lift = sopol::yhat_integral_rep(identity, -1.0, n, t);
        CHECK(std::abs(lift - cplx(sopol::w_integral_rep(-1.0, n, t))) <= 1e-12);
    }

    auto herm = sopol::coefficient_table(GSystem::Hermite, 5);
    FamilyParams fp{.r = 2, .alpha = -1.0};
    cplx ref = sopol::yhat_family(herm, fp, 3)(cplx(0.5));
    CHECK(std::abs(sopol::yhat_integral_rep(herm, -1.0, 3, 0.5) - ref) <=
          1e-8 * std::max(1.0, std::abs(ref)));

    CHECK(std::abs(sopol::yhat_integral_rep(herm, -1.0, 0, 0.9) - cplx(1.0)) <= 1e-12);
}

TEST_CASE("asymptotic limit function") {
    FamilyParams r1{.r = 1, .alpha = -1.0};
    for (cplx z : {cplx(0.5), cplx(-1.0, 0.7)})
        CHECK(std::abs(sopol::asymptotic_limit(r1, 0, z) - std::exp(z)) <= 1e-14);

    FamilyParams r2{.r = 2, .alpha = -1.0};
    CHECK(std::abs(sopol::asymptotic_limit(r2, 0, cplx(0.8)) - cplx(std::cosh(0.8))) <=
          1e-14);

    FamilyParams r3{.r = 3, .alpha = -2.0};
    CHECK(std::abs(sopol::asymptotic_limit(r3, 0, cplx(0.0)) - cplx(1.0)) <= 1e-15);
    CHECK(std::abs(sopol::asymptotic_limit(r3, 1, cplx(0.0))) <= 1e-15);
    CHECK(std::abs(sopol::asymptotic_limit(r3, 2, cplx(0.0))) <= 1e-15);

    CHECK_THROWS_AS(sopol::asymptotic_limit({.r = 2, .alpha = 0.0}, 0, cplx(1.0)),
                    std::domain_error);
}

TEST_CASE("asymptotic error decay") {
    // scaled partial sums are the exponential Taylor sums; at m = 20 the true
    // remainder (~1/21!) sits far below the evaluation floor, so the measured
    // error is pure rounding
    FamilyParams r1{.r = 1, .alpha = -1.0};
    cplx one(1.0);
    CHECK(sopol::asymptotic_error(r1, 0, 20, std::span<const cplx>(&one, 1)) <= 1e-15);

    std::vector<cplx> grid;
    for (int i = 1; i <= 5; ++i)
        for (int j = 0; j < 5; ++j) grid.push_back(0.2 * i * sopol::unit_root(5, j));
    for (auto [r, alpha] : {std::pair{1, -1.0}, {2, -1.0}}) {
        FamilyParams fp{.r = r, .alpha = alpha};
        for (int l = 0; l < r; ++l) {
            double prev = sopol::asymptotic_error(fp, l, 5, grid);
            for (int m = 6; m <= 30; ++m) {
                double cur = sopol::asymptotic_error(fp, l, m, grid);
                CHECK(std::max(cur, 1e-14) <= std::max(prev, 1e-14));
                prev = cur;
            }
            CHECK(prev <= 1e-10);
        }
    }

    FamilyParams r2{.r = 2, .alpha = -1.0};
    cplx zero(0.0);
    for (int m : {5, 12, 25})
        CHECK(sopol::asymptotic_error(r2, 0, m, std::span<const cplx>(&zero, 1)) == 0.0);
}

TEST_CASE("root locations") {
    sopol::RootLocationReport r2 = sopol::check_root_location({.r = 2, .alpha = -1.0}, 2);
    CHECK(r2.pass);
    CHECK(r2.zero_multiplicity == 0);
    CHECK(r2.min_nonzero_modulus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

    sopol::RootLocationReport r3 = sopol::check_root_location({.r = 2, .alpha = -1.0}, 3);
    CHECK(r3.pass);
    CHECK(r3.zero_multiplicity == 1);
    CHECK(r3.min_nonzero_modulus >= 1.0);

    for (int n = 1; n <= 15; ++n)
        CHECK(sopol::check_root_location({.r = 3, .alpha = -2.0}, n).pass);

    CHECK_THROWS_AS(sopol::check_root_location({.r = 2, .alpha = -0.5}, 4),
                    std::domain_error);
}

TEST_SUITE_END();
