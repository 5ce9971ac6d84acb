#include "sopol/sobolev.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "sopol/errors.hpp"

namespace sopol {

WeightFactor WeightFactor::column(std::vector<CPoly> g) {
    WeightFactor w;
    w.entries.reserve(g.size());
    for (auto& p : g) w.entries.push_back({std::move(p)});
    return w;
}

std::vector<std::vector<cplx>> WeightFactor::weight_at(cplx z) const {
    const int rows = rho() + 1;
    const int cols = beta() + 1;
    std::vector<cplx> gv(static_cast<size_t>(rows) * cols);
    for (int l = 0; l < rows; ++l)
        for (int k = 0; k < cols; ++k)
            gv[static_cast<size_t>(l * cols + k)] = entries[static_cast<size_t>(l)][static_cast<size_t>(k)](z);
    std::vector<std::vector<cplx>> m(static_cast<size_t>(rows),
                                     std::vector<cplx>(static_cast<size_t>(rows)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) {
            cplx acc(0.0);
            for (int k = 0; k < cols; ++k)
                acc += gv[static_cast<size_t>(i * cols + k)] *
                       std::conj(gv[static_cast<size_t>(j * cols + k)]);
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
        }
    return m;
}

double min_weight_eigenvalue(const WeightFactor& weight, cplx z) {
    auto m = weight.weight_at(z);
    const int n = static_cast<int>(m.size());
    Eigen::MatrixXcd em(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) em(i, j) = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(em);
    return es.eigenvalues().minCoeff();
}

std::vector<CPoly> factor_map(const WeightFactor& weight, const CPoly& f) {
    const int rows = weight.rho() + 1;
    const int cols = weight.beta() + 1;
    std::vector<CPoly> out(static_cast<size_t>(cols), CPoly::zero());
    CPoly der = f;
    for (int l = 0; l < rows; ++l) {
        for (int k = 0; k < cols; ++k) {
            const CPoly& g = weight.entries[static_cast<size_t>(l)][static_cast<size_t>(k)];
            if (!g.is_zero() && !der.is_zero()) out[static_cast<size_t>(k)] += g * der;
        }
        der = der.derivative();
    }
    return out;
}

int SobolevSpaceSpec::rho() const {
    if (factor) return factor->rho();
    if (dense) return static_cast<int>(dense->size()) - 1;
    return -1;
}

namespace {

void require_exactness(const QuadratureRule& rule, int needed) {
    if (needed > rule.exactness_degree)
        throw InsufficientRuleError("quadrature rule exactness degree " +
                                    std::to_string(rule.exactness_degree) +
                                    " below required " + std::to_string(needed));
}

cplx inner_factor(const WeightFactor& w, const QuadratureRule& rule, const CPoly& f,
                  const CPoly& h) {
    auto gf = factor_map(w, f);
    auto gh = factor_map(w, h);
    int df = 0, dh = 0;
    for (const auto& p : gf) df = std::max(df, p.degree());
    for (const auto& p : gh) dh = std::max(dh, p.degree());
    require_exactness(rule, df + dh);
    cplx acc(0.0);
    for (size_t k = 0; k < gf.size(); ++k) acc += l2_inner(rule, gf[k], gh[k]);
    return acc;
}

cplx inner_dense(const DenseWeight& m, const QuadratureRule& rule, const CPoly& f,
                 const CPoly& h) {
    const int rho = static_cast<int>(m.size()) - 1;
    int edeg = 0;
    for (const auto& row : m)
        for (const auto& e : row) edeg = std::max(edeg, e.degree());
    require_exactness(rule, std::max(0, f.degree()) + std::max(0, h.degree()) + 2 * edeg);

    std::vector<CPoly> fd(static_cast<size_t>(rho) + 1), hd(static_cast<size_t>(rho) + 1);
    fd[0] = f;
    hd[0] = h;
    for (int l = 1; l <= rho; ++l) {
        fd[static_cast<size_t>(l)] = fd[static_cast<size_t>(l - 1)].derivative();
        hd[static_cast<size_t>(l)] = hd[static_cast<size_t>(l - 1)].derivative();
    }
    cplx acc(0.0);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const cplx z = rule.nodes[i];
        cplx v(0.0);
        for (int a = 0; a <= rho; ++a) {
            cplx fa = fd[static_cast<size_t>(a)](z);
            if (fa == cplx(0.0)) continue;
            for (int b = 0; b <= rho; ++b) {
                const CPoly& entry = m[static_cast<size_t>(a)][static_cast<size_t>(b)];
                if (entry.is_zero()) continue;
                v += fa * entry(z) * std::conj(hd[static_cast<size_t>(b)](z));
            }
        }
        acc += rule.weights[i] * v;
    }
    return acc;
}

} // namespace

cplx sobolev_inner(const SobolevSpaceSpec& spec, const CPoly& f, const CPoly& h) {
    if (spec.factor) return inner_factor(*spec.factor, spec.rule, f, h);
    if (spec.dense) return inner_dense(*spec.dense, spec.rule, f, h);
    throw std::invalid_argument("sobolev space spec has neither factor nor dense weight");
}

std::vector<CPoly> gram_schmidt_sobolev(const SobolevSpaceSpec& spec, int n_max) {
    std::vector<CPoly> basis;
    basis.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) basis.push_back(CPoly::monomial(n));
    return gram_schmidt_sobolev(spec, std::move(basis));
}

std::vector<CPoly> gram_schmidt_sobolev(const SobolevSpaceSpec& spec,
                                        std::vector<CPoly> basis) {
    for (size_t n = 0; n < basis.size(); ++n)
        if (basis[n].degree() != static_cast<int>(n))
            throw std::invalid_argument("gram-schmidt basis must be graded by degree");
    std::vector<CPoly> ortho;
    std::vector<double> norms;
    ortho.reserve(basis.size());
    for (size_t n = 0; n < basis.size(); ++n) {
        // Positivity is checked through the orthogonalization pivots (the
        // Cholesky test): a degenerate form sends some combination to norm
        // ~rounding while the basis diagonal stays finite. An eigenvalue-ratio
        // test on the full monomial Gram cannot distinguish that from the
        // benign factorial grading these families carry even in exact
        // arithmetic.
        double diag = sobolev_inner(spec, basis[n], basis[n]).real();
        CPoly y = std::move(basis[n]);
        for (int pass = 0; pass < 2; ++pass)
            for (size_t j = 0; j < n; ++j) {
                cplx proj = sobolev_inner(spec, y, ortho[j]) / norms[j];
                y -= proj * ortho[j];
            }
        double pivot = sobolev_inner(spec, y, y).real();
        if (!(pivot > 1e-10 * diag) || !(pivot > 0.0))
            throw DegenerateFormError(
                "form not positive definite at degree " + std::to_string(n),
                static_cast<int>(n));
        y = (cplx(1.0) / y.leading()) * y;
        norms.push_back(sobolev_inner(spec, y, y).real());
        ortho.push_back(std::move(y));
    }
    return ortho;
}

WeightFactor extend_weight(const WeightFactor& weight, int k0) {
    if (weight.beta() != 0)
        throw std::invalid_argument("weight extension supports single-column factors only");
    if (k0 != 0) throw std::invalid_argument("single-column factor: k0 must be 0");
    const int rho = weight.rho();
    WeightFactor out;
    out.entries.assign(static_cast<size_t>(rho) + 2, std::vector<CPoly>(2, CPoly::zero()));
    for (int l = 0; l <= rho; ++l) {
        const CPoly& gl = weight.entries[static_cast<size_t>(l)][0];
        out.entries[static_cast<size_t>(l)][0] = gl;
        CPoly d = gl.derivative();
        if (l >= 1) d += weight.entries[static_cast<size_t>(l - 1)][0];
        out.entries[static_cast<size_t>(l)][1] = std::move(d);
    }
    out.entries[static_cast<size_t>(rho) + 1][1] = weight.entries[static_cast<size_t>(rho)][0];
    return out;
}

} // namespace sopol
