#ifndef SPECTRA_KOSZUL_HPP
#define SPECTRA_KOSZUL_HPP

#include <cstdint>
#include <vector>

#include "spectra/linalg.hpp"
#include "spectra/poly.hpp"

namespace spectra {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Basis of the p-th exterior power of k^n: strictly increasing index
/// subsets of {0..n-1} in lexicographic order.
struct ExteriorBasis {
    std::size_t n = 0, p = 0;
    std::vector<std::vector<std::size_t>> elements;

    ExteriorBasis(std::size_t n, std::size_t p);
    std::size_t size() const { return elements.size(); }
    std::size_t position(const std::vector<std::size_t>& subset) const;
};

/// Commuting tuple of square matrices; commutativity is checked exactly.
struct MatrixTuple {
    FieldSpec field;
    std::size_t n = 0, dim = 0;
    std::vector<Matrix> mats;

    MatrixTuple(FieldSpec f, std::size_t dim, std::vector<Matrix> mats);

    MatrixTuple dropped_last() const;
};

/// Finite chain complex 0 <- C_0 <- C_1 <- ... with diffs[p]: C_{p+1} -> C_p.
struct ChainComplex {
    FieldSpec field;
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;

    std::size_t top_degree() const { return dims.size() - 1; }
    /// Checks shapes and that consecutive compositions vanish.
    void validate() const;
};

struct HomologyReport {
    std::vector<std::size_t> d;
    long long index = 0;
};

/// Koszul complex Kos(x - a, M) for a matrix tuple acting on M = k^dim.
ChainComplex build_koszul(const MatrixTuple& x, const AffinePoint& a);

HomologyReport homology_dims(const ChainComplex& C);

/// Mapping cone of the endomorphism acting block-diagonally on each C_p
/// (t is dim x dim with every dims[p] a multiple of dim); the sign follows
/// cone(c_p, c_{p-1}) = (d(c_p) + (-1)^{p-1} t c_{p-1}, d(c_{p-1})).
ChainComplex cone(const Matrix& t, const ChainComplex& C);

/// Matrix of the blockwise action of t on H_p(C), on a basis extracted by
/// column pivoting; canonical only up to similarity.
Matrix induced_action(const Matrix& t, const ChainComplex& C, std::size_t p);

/// Iterated inflation f_{n-1} o ... o f_m, where one step maps
/// (d_0,...,d_m) to (d_0, d_0+d_1, ..., d_{m-1}+d_m, d_m).
std::vector<std::size_t> dimension_inflate(const std::vector<std::size_t>& d,
                                           std::size_t from, std::size_t to);

} // namespace spectra

#endif
