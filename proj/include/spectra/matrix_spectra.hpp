#ifndef SPECTRA_MATRIX_SPECTRA_HPP
#define SPECTRA_MATRIX_SPECTRA_HPP

#include <string>
#include <vector>

#include "spectra/koszul.hpp"

namespace spectra {

inline bool scalar_less(const Scalar& a, const Scalar& b) {
    return cmp(a.value(), b.value()) < 0;
}
bool point_less(const AffinePoint& a, const AffinePoint& b);

/// Finite joint spectrum; complete=false carries a diagnostic note.
struct SpectrumSet {
    std::vector<AffinePoint> points;  // sorted, pairwise distinct
    bool complete = true;
    std::string diagnostic;

    bool contains(const AffinePoint& a) const;
};

/// Simultaneous upper-triangular form: change^-1 * x_i * change is upper
/// triangular for every i; diagonal[k] collects the k-th diagonal entries.
struct TriangularForm {
    Matrix change;
    std::vector<AffinePoint> diagonal;
};

/// Two-sided set comparison produced by the theorem checkers.
struct CheckReport {
    bool ok = false;
    std::vector<AffinePoint> left, right;
    std::string note;
};

/// Coefficients of det(z*I - A), ascending in z.
std::vector<Scalar> charpoly(const Matrix& A);

/// Distinct roots, sorted; SPECTRUM_NOT_SPLIT if the polynomial does not
/// factor into linear terms over the base field.
std::vector<Scalar> eigenvalues(const Matrix& A);

/// True iff Kos(x - a, M) has nonzero homology.
bool taylor_membership(const MatrixTuple& x, const AffinePoint& a);

SpectrumSet taylor_spectrum(const MatrixTuple& x);

/// Joint eigenvalues: points with a common kernel vector for all x_i - a_i.
SpectrumSet point_spectrum(const MatrixTuple& x);

/// The tuple (q_1(x), ..., q_m(x)).
MatrixTuple apply_polynomial_tuple(const MatrixTuple& x, const std::vector<MultiPoly>& q);

/// sigma(q(x)) versus q(sigma(x)).
CheckReport check_spectral_mapping(const MatrixTuple& x, const std::vector<MultiPoly>& q);

/// sigma(x') versus the projection of sigma(x) onto the first n-1 coordinates.
CheckReport check_projection(const MatrixTuple& x);

TriangularForm triangularize(const MatrixTuple& x);

} // namespace spectra

#endif
