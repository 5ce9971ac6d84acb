#include "sopol/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sopol/diffop.hpp"
#include "sopol/families.hpp"
#include "sopol/pencil.hpp"
#include "sopol/sobolev.hpp"

namespace sopol {
namespace {

// Raw-output uniforms so reports are reproducible across standard libraries.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double u01() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * u01(); }
    double signed_mag(double lo, double hi) {
        double v = uniform(lo, hi);
        return (u01() < 0.5) ? -v : v;
    }
    cplx disk(double radius) {
        double rho = radius * std::sqrt(u01());
        double th = 2.0 * std::numbers::pi * u01();
        return rho * cplx(std::cos(th), std::sin(th));
    }
};

std::string fmt_double(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

double factorial_d(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Residual of an identity written as "these terms sum to zero", relative to the
// largest coefficient magnitude among the terms.
double zero_sum_residual(const std::vector<CPoly>& terms) {
    CPoly sum = CPoly::zero();
    double scale = 1.0;
    for (const CPoly& t : terms) {
        sum += t;
        scale = std::max(scale, t.max_abs_coeff());
    }
    return sum.max_abs_coeff() / scale;
}

double rel_coeff_distance(const CPoly& a, const CPoly& b) {
    double scale = std::max({1e-300, a.max_abs_coeff(), b.max_abs_coeff()});
    return (a - b).max_abs_coeff() / scale;
}

CPoly monic(const CPoly& p) { return (cplx(1.0) / p.leading()) * p; }

WeightFactor y_factor(int r, double alpha) {
    std::vector<CPoly> col(static_cast<size_t>(r) + 1, CPoly::zero());
    col[0] = CPoly::one();
    col[static_cast<size_t>(r)] += CPoly{cplx(alpha)};
    return WeightFactor::column(std::move(col));
}

WeightFactor coeff_factor(const CPoly& c) {
    std::vector<CPoly> col;
    for (int k = 0; k <= c.degree(); ++k) col.push_back(CPoly{c.coeff(k)});
    return WeightFactor::column(std::move(col));
}

const std::vector<CPoly>& sample_symbols() {
    // p(0) != 0 in every case; the degree-3 polynomial factors as
    // (w + 2)(w^2 + 3), keeping all roots away from the contour radii used in
    // the integral-representation checks.
    static const std::vector<CPoly> ps = {
        CPoly{cplx(2.0), cplx(1.0)},
        CPoly{cplx(3.0), cplx(0.0), cplx(1.0)},
        CPoly{cplx(6.0), cplx(3.0), cplx(2.0), cplx(1.0)},
    };
    return ps;
}

constexpr int kSeriesOrder = 40;

void stamp_params(Report& rep, const SuiteParams& P, bool with_family = false) {
    rep.params["r"] = std::to_string(P.r);
    rep.params["alpha"] = fmt_double(P.alpha);
    rep.params["nmax"] = std::to_string(P.nmax);
    rep.params["seed"] = std::to_string(P.seed);
    rep.params["tol_scale"] = fmt_double(P.tol_scale);
    if (with_family) rep.params["family"] = P.family;
}

// ---------------------------------------------------------------- orthogonality

Report orthogonality_suite(const SuiteParams& P) {
    Report rep;
    rep.suite = "orthogonality";
    stamp_params(rep, P, true);
    const double ts = P.tol_scale;
    const int nmax = P.nmax;

    if (P.family == "y" || P.family == "expsum" || P.family == "example21") {
        WeightFactor g = (P.family == "y")
                             ? y_factor(P.r, P.alpha)
                             : WeightFactor::column({CPoly{cplx(-1.0)}, CPoly{cplx(1.0)}});
        SobolevSpaceSpec spec{g, std::nullopt, make_unit_circle_rule(2 * nmax + 1)};
        auto fam = [&](int n) {
            return (P.family == "y") ? y_family({.r = P.r, .alpha = P.alpha}, n)
                                     : expsum_family(n);
        };
        double worst = 0.0;
        for (int n = 0; n <= nmax; ++n)
            for (int m = 0; m <= nmax; ++m) {
                cplx v = sobolev_inner(spec, fam(n), fam(m));
                worst = std::max(worst, std::abs(v - (n == m ? cplx(1.0) : cplx(0.0))));
            }
        rep.add("gram-identity", "sobolev-orthonormality", worst, 1e-9 * ts);
        return rep;
    }

    if (P.family == "phi-monomial" || P.family == "phi-hermite") {
        const bool herm = P.family == "phi-hermite";
        double worst_diag = 0.0;
        for (const CPoly& p : sample_symbols()) {
            GenFnSpec gf = herm ? GenFnSpec::hermite(p, kSeriesOrder)
                                : GenFnSpec::monomials(p, kSeriesOrder);
            QuadratureRule rule =
                herm ? make_gauss_rule(GaussKind::Hermite, nmax + p.degree() + 8)
                     : make_unit_circle_rule(2 * nmax + 1);
            SobolevSpaceSpec spec{coeff_factor(p), std::nullopt, rule};
            for (int n = 0; n <= nmax; ++n) {
                cplx v = sobolev_inner(spec, phi_family(gf, n), phi_family(gf, n));
                double tau = herm ? std::pow(2.0, n) * factorial_d(n) *
                                        std::sqrt(std::numbers::pi)
                                  : 1.0;
                worst_diag = std::max(worst_diag, std::abs(v - tau) / tau);
            }
        }
        rep.add("gram-diagonal", "generating-family-orthogonality", worst_diag, 1e-8 * ts);
        return rep;
    }
    throw std::invalid_argument("orthogonality: unknown family " + P.family);
}

// ------------------------------------------------------------------- recurrence

Report recurrence_suite(const SuiteParams& P) {
    Report rep;
    rep.suite = "recurrence";
    stamp_params(rep, P);
    const double ts = P.tol_scale;
    const int nmax = std::max(P.nmax, 2);
    const double aw = (P.alpha < 0.0) ? P.alpha : -1.0;
    const CPoly z = CPoly::monomial(1);

    {
        double worst = 0.0;
        FamilyParams fp{.r = P.r, .alpha = P.alpha};
        for (int n = 0; n < nmax; ++n) {
            CPoly yn = y_family(fp, n), yn1 = y_family(fp, n + 1);
            worst = std::max(worst, zero_sum_residual({cplx(fp.alpha) * yn1.derivative(fp.r),
                                                       yn1,
                                                       -(z * (cplx(fp.alpha) * yn.derivative(fp.r))),
                                                       -(z * yn)}));
        }
        rep.add("mixed-y", "mixed-relation", worst, 1e-10 * ts);
    }
    {
        double worst = 0.0;
        std::vector<CPoly> w;
        for (int n = 0; n <= nmax + 1; ++n) w.push_back(w_family(aw, n));
        auto wat = [&](int n) { return n >= 0 ? w[static_cast<size_t>(n)] : CPoly::zero(); };
        for (int n = 0; n <= nmax; ++n)
            worst = std::max(
                worst, zero_sum_residual({wat(n + 1), cplx(aw * n * (n + 1.0)) * wat(n - 1),
                                          -(z * wat(n)),
                                          -(z * (cplx(aw * (n - 1.0) * n) * wat(n - 2)))}));
        rep.add("w-three-term", "three-term-recurrence", worst, 1e-10 * ts);

        const double beta2 = -1.0 / aw;
        worst = 0.0;
        for (int n = 0; n <= nmax; ++n)
            worst = std::max(worst,
                             zero_sum_residual({wat(n), cplx(-n * (n - 1.0) / beta2) * wat(n - 2),
                                                -CPoly::monomial(n)}));
        rep.add("w-monomial-image", "monomial-image-identity", worst, 1e-10 * ts);
    }
    {
        const int nphi = 15;
        double worst_m = 0.0, worst_h = 0.0, worst_h0 = 0.0;
        for (const CPoly& p : sample_symbols()) {
            const int d = p.degree();
            GenFnSpec gm = GenFnSpec::monomials(p, kSeriesOrder);
            GenFnSpec gh = GenFnSpec::hermite(p, kSeriesOrder);
            std::vector<CPoly> pm, ph;
            for (int n = 0; n <= nphi + 1; ++n) {
                pm.push_back(phi_family(gm, n));
                ph.push_back(phi_family(gh, n));
            }
            auto comb = [&](const std::vector<CPoly>& f, int n, bool two_pow) {
                CPoly acc = CPoly::zero();
                for (int k = 0; k <= d; ++k) {
                    int idx = n - k;
                    if (idx < 0) continue;
                    cplx c = p.coeff(k) / factorial_d(idx);
                    if (two_pow) c *= pow_int(cplx(2.0), k);
                    acc += c * f[static_cast<size_t>(idx)];
                }
                return acc;
            };
            for (int n = 0; n <= nphi; ++n) {
                worst_m = std::max(worst_m,
                                   zero_sum_residual({cplx(n + 1.0) * comb(pm, n + 1, false),
                                                      -(z * comb(pm, n, false))}));
                if (n >= 1)
                    worst_h = std::max(
                        worst_h,
                        zero_sum_residual({cplx(n + 1.0) * comb(ph, n + 1, true),
                                           cplx(2.0) * comb(ph, n - 1, true),
                                           -(cplx(2.0) * (z * comb(ph, n, true)))}));
            }
            worst_h0 = std::max(
                worst_h0, zero_sum_residual({p.coeff(0) * ph[1], (2.0 * p.coeff(1)) * ph[0],
                                             -(2.0 * p.coeff(0)) * (z * ph[0])}));
        }
        rep.add("phi-monomial-recurrence", "generating-recurrence-monomial", worst_m,
                1e-9 * ts);
        rep.add("phi-hermite-recurrence", "generating-recurrence-hermite", worst_h,
                1e-9 * ts);
        rep.add("phi-hermite-initial", "generating-recurrence-hermite", worst_h0,
                1e-9 * ts);
    }
    return rep;
}

// -------------------------------------------------------------------------- ode

Report ode_suite(const SuiteParams& P) {
    Report rep;
    rep.suite = "ode";
    stamp_params(rep, P);
    const double ts = P.tol_scale;
    const int nmax = P.nmax;

    {
        DiffPencil dp = diff_pencil_for(PencilFamily::W, {.alpha = P.alpha, .r = P.r});
        double worst = 0.0;
        for (int n = 0; n <= nmax; ++n)
            worst = std::max(worst,
                             diff_pencil_residual(dp, y_family({.r = P.r, .alpha = P.alpha}, n), n));
        rep.add("ode-y", "family-ode", worst, 1e-10 * ts);
    }
    {
        double worst_m = 0.0, worst_h = 0.0;
        for (const CPoly& p : sample_symbols()) {
            GenFnSpec gm = GenFnSpec::monomials(p, kSeriesOrder);
            GenFnSpec gh = GenFnSpec::hermite(p, kSeriesOrder);
            DiffPencil dm = diff_pencil_for(PencilFamily::PhiMonomial, {.c = p});
            DiffPencil dh = diff_pencil_for(PencilFamily::PhiHermite, {.c = p});
            for (int n = 0; n <= 15; ++n) {
                worst_m = std::max(worst_m, diff_pencil_residual(dm, phi_family(gm, n), n));
                worst_h = std::max(worst_h, diff_pencil_residual(dh, phi_family(gh, n), n));
            }
        }
        rep.add("ode-phi-monomial", "generating-ode-monomial", worst_m, 1e-9 * ts);
        rep.add("ode-phi-hermite", "generating-ode-hermite", worst_h, 1e-9 * ts);
    }
    {
        double worst = 0.0;
        for (int n = 0; n <= std::min(nmax, 15); ++n) {
            CPoly h = hermite(n);
            worst = std::max(worst,
                             zero_sum_residual({h.derivative(2),
                                                -(CPoly::monomial(1, cplx(2.0)) * h.derivative()),
                                                cplx(2.0 * n) * h}));
        }
        rep.add("ode-hermite", "hermite-ode", worst, 1e-12 * ts);
    }
    return rep;
}

// ------------------------------------------------------------------- generating

Report generating_suite(const SuiteParams& P) {
    Report rep;
    rep.suite = "generating";
    stamp_params(rep, P);
    const double ts = P.tol_scale;
    const double aw = (P.alpha < 0.0) ? P.alpha : -1.0;
    Rng rng(P.seed);

    {
        double worst = 0.0;
        for (int pt = 0; pt < 5; ++pt) {
            double t = rng.signed_mag(0.3, 2.0);
            auto coeffs = w_generating_coeff(aw, cplx(t), 13);
            for (int n = 0; n < 13; ++n) {
                double ref = w_family(aw, n)(cplx(t)).real() / factorial_d(n);
                worst = std::max(worst,
                                 std::abs(coeffs[static_cast<size_t>(n)] - cplx(ref)) /
                                     std::max(1e-30, std::abs(ref)));
            }
        }
        rep.add("w-generating-coefficients", "exp-generating-function", worst, 1e-10 * ts);
    }
    {
        double worst = 0.0, worst_b = 0.0;
        for (const CPoly& p : sample_symbols()) {
            for (bool herm : {false, true}) {
                GenFnSpec gf = herm ? GenFnSpec::hermite(p, kSeriesOrder)
                                    : GenFnSpec::monomials(p, kSeriesOrder);
                for (int n = 0; n <= 15; ++n) {
                    CPoly phi = phi_family(gf, n);
                    std::vector<CPoly> terms;
                    for (int k = 0; k <= p.degree(); ++k)
                        terms.push_back(p.coeff(k) * phi.derivative(k));
                    terms.push_back(-gf.g_poly(n));
                    worst = std::max(worst, zero_sum_residual(terms));
                }
                cplx b0 = genfn_b_coeffs(gf, 1)[0];
                worst_b = std::max(worst_b, std::abs(b0 * p(cplx(0.0)) - cplx(1.0)));
            }
        }
        rep.add("phi-defining-combination", "defining-combination", worst, 1e-9 * ts);
        rep.add("b0-reciprocal", "defining-combination", worst_b, 1e-12 * ts);
    }
    return rep;
}

// ------------------------------------------------------------------ integral-rep

Report integral_rep_suite(const SuiteParams& P) {
    Report rep;
    rep.suite = "integral-rep";
    stamp_params(rep, P);
    const double ts = P.tol_scale;
    const double aw = (P.alpha < 0.0) ? P.alpha : -1.0;
    Rng rng(P.seed);

    {
        double worst = 0.0;
        for (int n : {0, 2, 5, 7, std::min(P.nmax, 12)}) {
            double t = rng.signed_mag(0.3, 2.0);
            double quad = w_integral_rep(aw, n, t);
            double ref = w_family(aw, n)(cplx(t)).real();
            worst = std::max(worst, std::abs(quad - ref) / std::max(1.0, std::abs(ref)));
        }
        rep.add("w-laplace", "laplace-representation", worst, 1e-7 * ts);
    }
    {
        double worst = 0.0;
        CoeffTable xi = coefficient_table(GSystem::Hermite, 5);
        FamilyParams fp{.r = 2, .alpha = aw};
        for (int n = 0; n <= 5; ++n) {
            double zp = rng.signed_mag(0.1, 1.5);
            cplx quad = yhat_integral_rep(xi, aw, n, zp);
            cplx ref = yhat_family(xi, fp, n)(cplx(zp));
            worst = std::max(worst, std::abs(quad - ref) / std::max(1.0, std::abs(ref)));
        }
        rep.add("yhat-laplace", "laplace-representation", worst, 1e-7 * ts);
    }
    {
        double worst = 0.0, worst_conv = 0.0;
        GenFnSpec gm = GenFnSpec::monomials(sample_symbols()[2], kSeriesOrder);
        GenFnSpec gh = GenFnSpec::hermite(sample_symbols()[0], kSeriesOrder);
        for (const GenFnSpec& gf : {gm, gh}) {
            for (int n = 0; n <= 5; ++n) {
                cplx t = rng.disk(1.0);
                cplx v256 = phi_contour_rep(gf, n, t, 0.5, 256);
                cplx ref = phi_family(gf, n)(t);
                worst = std::max(worst, std::abs(v256 - ref) / std::max(1.0, std::abs(ref)));
                cplx v128 = phi_contour_rep(gf, n, t, 0.5, 128);
                worst_conv = std::max(worst_conv,
                                      std::abs(v256 - v128) / std::max(1.0, std::abs(v256)));
            }
        }
        rep.add("phi-contour", "contour-representation", worst, 1e-7 * ts);
        rep.add("phi-contour-self-convergence", "contour-representation", worst_conv,
                1e-9 * ts);
    }
    return rep;
}

// ------------------------------------------------------------------------ roots

Report roots_suite(const SuiteParams& P) {
    Report rep;
    rep.suite = "roots";
    stamp_params(rep, P);
    if (P.alpha > -1.0) {
        rep.skip("root-location", "root-location",
                 "precondition not met: requires alpha <= -1");
        return rep;
    }
    int mult_mismatch = 0;
    double worst_modulus_defect = -std::numeric_limits<double>::infinity();
    for (int n = 1; n <= P.nmax; ++n) {
        RootLocationReport r = check_root_location({.r = P.r, .alpha = P.alpha}, n);
        mult_mismatch += std::abs(r.zero_multiplicity - r.expected_zero_multiplicity);
        if (r.roots.size() > static_cast<size_t>(r.zero_multiplicity))
            worst_modulus_defect =
                std::max(worst_modulus_defect, 1.0 - r.min_nonzero_modulus);
    }
    rep.add("zero-multiplicity", "root-location", static_cast<double>(mult_mismatch), 0.0);
    rep.add("modulus-bound", "root-location", std::max(0.0, worst_modulus_defect),
            1e-8 * P.tol_scale);
    return rep;
}

// ------------------------------------------------------------------ asymptotics

Report asymptotics_suite(const SuiteParams& P) {
    Report rep;
    rep.suite = "asymptotics";
    stamp_params(rep, P);
    if (P.alpha == 0.0) {
        rep.skip("scaled-convergence", "scaled-asymptotics",
                 "precondition not met: requires alpha != 0");
        return rep;
    }
    std::vector<cplx> grid;
    for (int i = 1; i <= 5; ++i)
        for (int j = 0; j < 5; ++j)
            grid.push_back(0.2 * i *
                           unit_root(5, j) *
                           cplx(std::cos(0.1), std::sin(0.1)));
    FamilyParams fp{.r = P.r, .alpha = P.alpha};
    for (int l = 0; l < P.r; ++l) {
        std::vector<double> errs;
        for (int m = 5; m <= 30; ++m) errs.push_back(asymptotic_error(fp, l, m, grid));
        // Below ~1e-14 the measured error is the rounding plateau of the two
        // evaluation routes; monotonicity is asserted above that floor.
        double worst_increase = -std::numeric_limits<double>::infinity();
        for (size_t i = 0; i + 1 < errs.size(); ++i)
            worst_increase = std::max(worst_increase, std::max(errs[i + 1], 1e-14) -
                                                          std::max(errs[i], 1e-14));
        std::string suffix = "-l" + std::to_string(l);
        rep.add("error-monotone" + suffix, "scaled-asymptotics",
                std::max(0.0, worst_increase), 0.0);
        rep.add("error-final" + suffix, "scaled-asymptotics", errs.back(),
                1e-10 * P.tol_scale);
    }
    return rep;
}

// -------------------------------------------------------------------- extension

Report extension_suite(const SuiteParams& P) {
    Report rep;
    rep.suite = "extension";
    stamp_params(rep, P, true);
    rep.params["family"] = "expsum"; // the suite runs the two-entry-column case
    const double ts = P.tol_scale;
    const int nmax = std::min(P.nmax, 18);

    WeightFactor g = WeightFactor::column({CPoly{cplx(-1.0)}, CPoly{cplx(1.0)}});
    WeightFactor ge = extend_weight(g);
    {
        const std::vector<std::vector<CPoly>> expected = {
            {CPoly{cplx(-1.0)}, CPoly::zero()},
            {CPoly{cplx(1.0)}, CPoly{cplx(-1.0)}},
            {CPoly::zero(), CPoly{cplx(1.0)}}};
        double worst = (ge.entries == expected) ? 0.0 : 1.0;
        rep.add("extended-factor-entries", "weight-extension", worst, 0.0);

        const double m_expected[3][3] = {{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
        double dev = 0.0;
        for (cplx zpt : {cplx(1.0), cplx(0.0, 1.0), cplx(std::cos(0.3), std::sin(0.3))}) {
            auto m = ge.weight_at(zpt);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    dev = std::max(dev, std::abs(m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                                                 cplx(m_expected[i][j])));
        }
        rep.add("extended-weight-matrix", "weight-extension", dev, 1e-14 * ts);
    }

    QuadratureRule rule = make_unit_circle_rule(2 * nmax + 3);
    SobolevSpaceSpec base{g, std::nullopt, rule};
    SobolevSpaceSpec extended{ge, std::nullopt, rule};
    std::vector<CPoly> ys;
    for (int n = 0; n <= nmax; ++n) ys.push_back(expsum_family(n));

    double worst_base = 0.0, worst_diag = 0.0, worst_off = 0.0, worst_deriv = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        for (int m = 0; m <= nmax; ++m) {
            cplx b = sobolev_inner(base, ys[static_cast<size_t>(n)], ys[static_cast<size_t>(m)]);
            worst_base = std::max(worst_base, std::abs(b - (n == m ? cplx(1.0) : cplx(0.0))));
            cplx e = sobolev_inner(extended, ys[static_cast<size_t>(n)], ys[static_cast<size_t>(m)]);
            if (n == m)
                worst_diag = std::max(worst_diag, std::abs(e - cplx(1.0 + n * static_cast<double>(n))));
            else
                worst_off = std::max(worst_off, std::abs(e));
            CPoly dgn = factor_map(g, ys[static_cast<size_t>(n)])[0].derivative();
            CPoly dgm = factor_map(g, ys[static_cast<size_t>(m)])[0].derivative();
            cplx dv = l2_inner(rule, dgn, dgm);
            double bn = (n == m) ? n * static_cast<double>(n) : 0.0;
            worst_deriv = std::max(worst_deriv, std::abs(dv - cplx(bn)));
        }
    }
    rep.add("base-orthonormality", "sobolev-orthonormality", worst_base, 1e-9 * ts);
    rep.add("extended-diagonal", "weight-extension", worst_diag, 1e-9 * ts);
    rep.add("extended-offdiagonal", "weight-extension", worst_off, 1e-9 * ts);
    rep.add("derivative-image-orthogonality", "derivative-image-orthogonality",
            worst_deriv, 1e-9 * ts);

    {
        // Trivial column (1): the extension adds the plain derivative pairing,
        // so monomials gain diagonal 1 + n^2 as well.
        WeightFactor one = WeightFactor::column({CPoly::one()});
        SobolevSpaceSpec spec1{extend_weight(one), std::nullopt, rule};
        double worst = 0.0;
        for (int n = 0; n <= nmax; ++n) {
            cplx v = sobolev_inner(spec1, CPoly::monomial(n), CPoly::monomial(n));
            worst = std::max(worst, std::abs(v - cplx(1.0 + n * static_cast<double>(n))));
        }
        rep.add("identity-column-extension", "weight-extension", worst, 1e-9 * ts);
    }
    return rep;
}

// ----------------------------------------------------------------------- pencil

Report pencil_suite(const SuiteParams& P) {
    Report rep;
    rep.suite = "pencil";
    stamp_params(rep, P);
    const double ts = P.tol_scale;
    const int T = 15;
    Rng rng(P.seed);
    std::vector<cplx> zs;
    for (int i = 0; i < 5; ++i) zs.push_back(rng.disk(2.0));
    const double aw = (P.alpha < 0.0) ? P.alpha : -1.0;

    auto run_family = [&](const std::string& name, PencilFamily fam,
                          const PencilParams& params,
                          const std::function<CPoly(int)>& member) {
        int d = std::max(0, params.c.degree());
        std::vector<CPoly> polys;
        for (int n = 0; n < T + d + 3; ++n) polys.push_back(member(n));
        BandedPencil bp = pencil_from_recurrence(fam, params, T);
        rep.add("banded-" + name, "difference-pencil", pencil_residual(bp, polys, zs),
                1e-9 * ts);
        DiffPencil dp = diff_pencil_for(fam, params);
        double worst = 0.0;
        for (int n = 0; n < T; ++n)
            worst = std::max(worst, diff_pencil_residual(dp, polys[static_cast<size_t>(n)], n));
        rep.add("differential-" + name, "differential-pencil", worst, 1e-9 * ts);
    };

    run_family("monomials", PencilFamily::Monomials, {},
               [](int n) { return CPoly::monomial(n); });
    run_family("w", PencilFamily::W, {.alpha = aw, .r = 2},
               [&](int n) { return w_family(aw, n); });
    for (size_t i = 0; i < sample_symbols().size(); ++i) {
        const CPoly& p = sample_symbols()[i];
        GenFnSpec gm = GenFnSpec::monomials(p, kSeriesOrder);
        GenFnSpec gh = GenFnSpec::hermite(p, kSeriesOrder);
        run_family("phi-monomial-p" + std::to_string(i), PencilFamily::PhiMonomial,
                   {.c = p}, [&](int n) { return phi_family(gm, n); });
        run_family("phi-hermite-p" + std::to_string(i), PencilFamily::PhiHermite,
                   {.c = p}, [&](int n) { return phi_family(gh, n); });
    }
    return rep;
}

// ----------------------------------------------------------------- gram-schmidt

Report gram_schmidt_suite(const SuiteParams& P) {
    Report rep;
    rep.suite = "gram-schmidt";
    stamp_params(rep, P);
    const double ts = P.tol_scale;

    {
        const int nm = std::min(P.nmax, 12);
        SobolevSpaceSpec spec{y_factor(P.r, P.alpha), std::nullopt,
                              make_unit_circle_rule(2 * nm + 1)};
        auto gs = gram_schmidt_sobolev(spec, nm);
        double worst = 0.0;
        for (int n = 0; n <= nm; ++n)
            worst = std::max(worst, rel_coeff_distance(gs[static_cast<size_t>(n)],
                                                       y_family({.r = P.r, .alpha = P.alpha}, n)));
        rep.add("reproduce-y", "gram-schmidt-oracle", worst, 1e-8 * ts);

        auto gs2 = gram_schmidt_sobolev(spec, gs);
        double change = 0.0;
        for (int n = 0; n <= nm; ++n)
            change = std::max(change,
                              rel_coeff_distance(gs[static_cast<size_t>(n)], gs2[static_cast<size_t>(n)]));
        rep.add("idempotent", "gram-schmidt-oracle", change, 1e-10 * ts);
    }
    {
        const int nm = std::min(P.nmax, 10);
        const CPoly& p = sample_symbols()[0];
        GenFnSpec gh = GenFnSpec::hermite(p, kSeriesOrder);
        SobolevSpaceSpec spec{coeff_factor(p), std::nullopt,
                              make_gauss_rule(GaussKind::Hermite, nm + p.degree() + 8)};
        auto gs = gram_schmidt_sobolev(spec, nm);
        double worst = 0.0;
        for (int n = 0; n <= nm; ++n)
            worst = std::max(worst, rel_coeff_distance(gs[static_cast<size_t>(n)],
                                                       monic(phi_family(gh, n))));
        rep.add("reproduce-phi-hermite", "gram-schmidt-oracle", worst, 1e-8 * ts);
    }
    {
        SobolevSpaceSpec spec{WeightFactor::column({CPoly::one()}), std::nullopt,
                              make_unit_circle_rule(2 * std::min(P.nmax, 12) + 1)};
        auto gs = gram_schmidt_sobolev(spec, std::min(P.nmax, 12));
        double worst = 0.0;
        for (size_t n = 0; n < gs.size(); ++n)
            worst = std::max(worst,
                             rel_coeff_distance(gs[n], CPoly::monomial(static_cast<int>(n))));
        rep.add("monomials-on-circle", "gram-schmidt-oracle", worst, 1e-12 * ts);
    }
    return rep;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "orthogonality", "recurrence",  "ode",       "generating", "integral-rep",
        "roots",         "asymptotics", "extension", "pencil",     "gram-schmidt"};
    return names;
}

Report run_suite(const std::string& name, const SuiteParams& params) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    if (name == "orthogonality")
        rep = orthogonality_suite(params);
    else if (name == "recurrence")
        rep = recurrence_suite(params);
    else if (name == "ode")
        rep = ode_suite(params);
    else if (name == "generating")
        rep = generating_suite(params);
    else if (name == "integral-rep")
        rep = integral_rep_suite(params);
    else if (name == "roots")
        rep = roots_suite(params);
    else if (name == "asymptotics")
        rep = asymptotics_suite(params);
    else if (name == "extension")
        rep = extension_suite(params);
    else if (name == "pencil")
        rep = pencil_suite(params);
    else if (name == "gram-schmidt")
        rep = gram_schmidt_suite(params);
    else
        throw std::invalid_argument("unknown suite: " + name);
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace sopol
