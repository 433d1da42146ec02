#ifndef SPECTRA_NUMERICAL_HPP
#define SPECTRA_NUMERICAL_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

namespace spectra {

/// Integer-valued polynomial in the binomial basis p(r) = sum c_j * C(r, j).
struct NumericalPolynomial {
    std::vector<mpz_class> coeffs;  // c_0 .. c_d, last entry nonzero unless zero polynomial

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool is_zero() const { return coeffs.empty(); }
    mpz_class eval(unsigned long r) const;
    /// Top difference at order n: c_n when degree == n, else 0 (degree < n).
    mpz_class top_difference(std::size_t n) const;
    std::string str() const;
};

/// Fits the tail of a value table (values[i] is the value at r = i+1).
/// Requires the top finite difference constant over >= 3 consecutive tail
/// positions and the fit to reproduce the last max(3, d+2) values;
/// otherwise raises NOT_STABILIZED.
NumericalPolynomial fit_numerical_polynomial(const std::vector<long long>& values);

} // namespace spectra

#endif
