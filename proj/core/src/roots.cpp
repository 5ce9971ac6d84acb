#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sopol/poly.hpp"

namespace sopol {
namespace {

// Evaluate p and p' at z in one Horner pass.
void eval_with_derivative(std::span<const cplx> c, cplx z, cplx& p, cplx& dp) {
    p = cplx(0.0);
    dp = cplx(0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
}

// Per-cluster starting radii from the upper convex hull of (k, log|a_k|).
// A single starting circle scaled by the Cauchy bound stalls on polynomials with
// factorially graded coefficients; the hull radii land each batch of guesses at
// the scale of the root cluster it approximates.
std::vector<cplx> initial_guesses(std::span<const cplx> c) {
    const int deg = static_cast<int>(c.size()) - 1;
    struct Pt {
        double x, y;
        int k;
    };
    std::vector<Pt> pts;
    for (int k = 0; k <= deg; ++k) {
        double a = std::abs(c[static_cast<size_t>(k)]);
        if (a > 0.0) pts.push_back({static_cast<double>(k), std::log(a), k});
    }
    std::vector<Pt> hull;
    for (const Pt& p : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
            if (cross >= 0.0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    const double cauchy = [&] {
        double m = 0.0;
        double lead = std::abs(c.back());
        for (size_t k = 0; k + 1 < c.size(); ++k)
            m = std::max(m, std::abs(c[k]) / lead);
        return 1.0 + m;
    }();

    std::vector<cplx> z;
    z.reserve(static_cast<size_t>(deg));
    const double two_pi = 2.0 * std::numbers::pi;
    for (size_t e = 0; e + 1 < hull.size(); ++e) {
        int k1 = hull[e].k, k2 = hull[e + 1].k;
        int cnt = k2 - k1;
        double r = std::exp((hull[e].y - hull[e + 1].y) / static_cast<double>(cnt));
        r = std::min(r, cauchy);
        for (int i = 0; i < cnt; ++i) {
            double theta = two_pi * (static_cast<double>(i) / cnt +
                                     static_cast<double>(k1) / (deg + 1)) +
                           0.7;
            z.push_back(r * cplx(std::cos(theta), std::sin(theta)));
        }
    }
    while (static_cast<int>(z.size()) < deg) z.push_back(cplx(1.0, 0.5));
    return z;
}

std::vector<cplx> aberth(std::span<const cplx> c) {
    const int deg = static_cast<int>(c.size()) - 1;
    std::vector<cplx> z = initial_guesses(c);
    const int max_iter = 200;
    for (int iter = 0; iter < max_iter; ++iter) {
        bool done = true;
        for (int i = 0; i < deg; ++i) {
            cplx p, dp;
            eval_with_derivative(c, z[static_cast<size_t>(i)], p, dp);
            if (p == cplx(0.0)) continue;
            if (dp == cplx(0.0)) {
                z[static_cast<size_t>(i)] += cplx(1e-8, 1e-8) * (1.0 + std::abs(z[static_cast<size_t>(i)]));
                done = false;
                continue;
            }
            cplx newton = p / dp;
            cplx repel(0.0);
            for (int j = 0; j < deg; ++j) {
                if (j == i) continue;
                cplx diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                if (diff == cplx(0.0)) diff = cplx(1e-14, 1e-14);
                repel += cplx(1.0) / diff;
            }
            cplx denom = cplx(1.0) - newton * repel;
            cplx step = (denom == cplx(0.0)) ? newton : newton / denom;
            z[static_cast<size_t>(i)] -= step;
            if (std::abs(step) > 1e-13 * (1.0 + std::abs(z[static_cast<size_t>(i)]))) done = false;
        }
        if (done) break;
    }
    return z;
}

} // namespace

std::vector<cplx> poly_roots(const CPoly& p) {
    if (p.is_zero()) throw std::domain_error("poly_roots: zero polynomial");
    const int deg = p.degree();
    if (deg < 1) return {};

    // Structural zero roots: strip exactly-zero low-order coefficients.
    auto coeffs = p.coeffs();
    int zeros = 0;
    while (zeros < deg && coeffs[static_cast<size_t>(zeros)] == cplx(0.0)) ++zeros;
    std::vector<cplx> roots(static_cast<size_t>(zeros), cplx(0.0));

    std::vector<cplx> c(coeffs.begin() + zeros, coeffs.end());
    const int d = static_cast<int>(c.size()) - 1;
    if (d == 0) return roots;
    if (d == 1) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }
    auto rest = aberth(c);
    roots.insert(roots.end(), rest.begin(), rest.end());
    return roots;
}

} // namespace sopol
