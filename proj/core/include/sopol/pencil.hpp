#ifndef SOPOL_PENCIL_HPP
#define SOPOL_PENCIL_HPP

#include <functional>
#include <span>
#include <vector>

#include "sopol/diffop.hpp"
#include "sopol/poly.hpp"

namespace sopol {

/// Square truncation of a semi-infinite banded matrix, stored by diagonals:
/// band offset o in [-lower, upper] holds the entries A(i, i+o).
class BandedMatrix {
public:
    BandedMatrix(int size, int lower, int upper);

    int size() const { return size_; }
    int lower() const { return lower_; }
    int upper() const { return upper_; }

    /// Entry A(i, j); zero outside the declared bands or the truncation window.
    cplx at(int i, int j) const;
    /// Add into A(i, j). Throws std::out_of_range outside the declared bands.
    void add(int i, int j, cplx v);

    /// (A v)_i for i in [0, size); v must have at least size entries.
    std::vector<cplx> apply(std::span<const cplx> v) const;

private:
    int size_, lower_, upper_;
    std::vector<std::vector<cplx>> diag_; ///< diag_[o+lower][i] = A(i, i+o)
};

/// The banded pair (L, M) of a difference relation L y(z) = z M y(z) over the
/// vector of family members y = (y_0, y_1, ...).
struct BandedPencil {
    BandedMatrix L;
    BandedMatrix M;
};

/// The differential pair (R, S) of a relation R y_n = lambda_n S y_n with
/// n-independent polynomial coefficients.
struct DiffPencil {
    LinearDiffOp R;
    LinearDiffOp S;
    std::function<cplx(int)> lambda;
};

enum class PencilFamily { Monomials, W, PhiMonomial, PhiHermite };

/// Parameters for the supported families: alpha for the w family, the
/// polynomial p (its coefficients c_k) for the two generating-function
/// families; the y family additionally takes its order r for the
/// differential pencil.
struct PencilParams {
    double alpha = -1.0;
    int r = 2;
    CPoly c;
};

/// Rows of (L, M) transcribing the family's recurrence: row n holds the
/// combination the relation equates at index n. Throws std::invalid_argument
/// for unsupported families.
BandedPencil pencil_from_recurrence(PencilFamily family, const PencilParams& params,
                                    int truncation);

/// Max over interior rows and sample points of the row residual
/// |(L y)_n - z (M y)_n|, normalized by 1 plus the largest magnitude among
/// z (M y)_n and the individual row terms (the scale at which the row
/// combination cancels). Rows whose declared bands leave the truncation window
/// on either side are boundary rows and excluded. Requires
/// polys.size() >= truncation + max bandwidth.
double pencil_residual(const BandedPencil& pencil, std::span<const CPoly> polys,
                       std::span<const cplx> z_samples);

/// Coefficientwise residual of R y_n - lambda_n S y_n, relative to the largest
/// coefficient magnitude among the operator terms d_k * y^{(k)}.
double diff_pencil_residual(const DiffPencil& pencil, const CPoly& yn, int n);

/// The differential pencil each supported family satisfies.
DiffPencil diff_pencil_for(PencilFamily family, const PencilParams& params);

} // namespace sopol

#endif
