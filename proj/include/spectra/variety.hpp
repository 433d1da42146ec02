#ifndef SPECTRA_VARIETY_HPP
#define SPECTRA_VARIETY_HPP

#include <optional>
#include <vector>

#include "spectra/koszul.hpp"
#include "spectra/numerical.hpp"
#include "spectra/resolution.hpp"

namespace spectra {

/// The coordinate ring R = P/I viewed as a module over P.
struct CyclicModule {
    Ideal ideal;

    const RingPtr& ring() const { return ideal.ring(); }
    std::size_t nvars() const { return ideal.ring()->nvars(); }
};

struct TorReport {
    HomologyReport rep;         // d padded/truncated to length n+1
    bool on_variety = true;     // false: resolvent point, all dims zero
};

struct SamuelTable {
    AffinePoint point;
    std::vector<long long> values;  // values[i] = s(i+1)
    std::optional<NumericalPolynomial> fitted;
};

struct MultiplicityReport {
    std::size_t dim_d = 0;          // Krull dimension of R
    mpz_class e = 0;                // top Samuel difference, 0 when dim < n
    long long index_at_point = 0;
    bool serre_consistent = false;  // index == -e
    std::optional<NumericalPolynomial> samuel_fit;
};

struct TorPolyTable {
    std::vector<std::vector<std::size_t>> tor_dims;  // per r, entries 0..n
    std::vector<long long> p;                        // alternating sum from i = 1
    std::optional<NumericalPolynomial> fitted;
};

struct MinimalGeneratorProfile {
    std::vector<std::optional<std::uint32_t>> m_min;             // m_i per variable
    std::vector<std::vector<std::optional<std::uint32_t>>> m;    // m[i][j]
    std::vector<std::vector<std::size_t>> S;                     // S[i]: generator indices
    Matrix v;                                                    // n x p, columns v_j
    std::size_t t = 0;                                           // rank of nonzero v_j
};

bool point_on_variety(const Ideal& I, const AffinePoint& a);

/// Tor dimensions of (k(a), R) over P via a free resolution of the
/// translated R, evaluated at the origin.
TorReport tor_dims_at_point(const CyclicModule& R, const AffinePoint& a, std::size_t cap = 0);

/// Oracle twin for finite-dimensional R: multiplication matrices on the
/// standard monomials, then the matrix Koszul complex at a.
HomologyReport koszul_dims_direct_zero_dim(const CyclicModule& R, const AffinePoint& a);

SamuelTable samuel_values(const CyclicModule& R, const AffinePoint& a, std::uint32_t r_max);

MultiplicityReport serre_check(const CyclicModule& R, const AffinePoint& a,
                               std::uint32_t r_max = 0);

/// Tor of R against the truncated algebras P/<X-a>^r for r = 1..r_max.
TorPolyTable tor_polynomial(const CyclicModule& R, const AffinePoint& a, std::uint32_t r_max);

/// i((x-a)^{(r)}) = -s(r) + p(r).
long long inflated_index(const CyclicModule& R, const AffinePoint& a, std::uint32_t r);

/// Lower bound for dim H_1(x-a, R) from minimal-generator data.
MinimalGeneratorProfile h1_lower_bound(const std::vector<MultiPoly>& gens, const AffinePoint& a);

std::size_t jacobian_rank(const std::vector<MultiPoly>& gens, const AffinePoint& a);

/// True iff a is an isolated point of V(I): (I : m_a) != I.
bool point_spectrum_membership(const CyclicModule& R, const AffinePoint& a);

/// Cayley-Hamilton identity of the middle Koszul differential over three
/// variables, checked symbolically modulo I.
bool cayley_hamilton_d1_check(const CyclicModule& R);

} // namespace spectra

#endif
