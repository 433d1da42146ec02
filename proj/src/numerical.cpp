#include "spectra/numerical.hpp"

#include "spectra/error.hpp"

namespace spectra {

namespace {

mpz_class binom_z(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

mpz_class NumericalPolynomial::eval(unsigned long r) const {
    mpz_class acc = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) acc += coeffs[j] * binom_z(r, j);
    return acc;
}

mpz_class NumericalPolynomial::top_difference(std::size_t n) const {
    if (is_zero() || degree() != n) return 0;
    return coeffs[n];
}

std::string NumericalPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t j = coeffs.size(); j-- > 0;) {
        if (coeffs[j] == 0) continue;
        if (!out.empty()) out += coeffs[j] > 0 ? " + " : " - ";
        else if (coeffs[j] < 0) out += "-";
        mpz_class a = abs(coeffs[j]);
        std::string term = j == 0 ? a.get_str()
                                  : (a == 1 ? "" : a.get_str() + "*") + "C(r," + std::to_string(j) + ")";
        out += term;
    }
    return out.empty() ? "0" : out;
}

NumericalPolynomial fit_numerical_polynomial(const std::vector<long long>& values) {
    const std::size_t m = values.size();
    if (m < 3) fail(ErrorCode::NotStabilized, "fit: need at least 3 values");

    // Smallest order whose differences are constant over the last 3 slots.
    std::vector<mpz_class> row;
    for (auto v : values) row.push_back(mpz_class(static_cast<long>(v)));
    std::size_t d = m;  // sentinel
    for (std::size_t k = 0; k + 3 <= m; ++k) {
        std::size_t len = m - k;
        if (row[len - 1] == row[len - 2] && row[len - 2] == row[len - 3]) {
            d = k;
            break;
        }
        for (std::size_t i = 0; i + 1 < len; ++i) row[i] = row[i + 1] - row[i];
    }
    if (d == m)
        fail(ErrorCode::NotStabilized, "fit: differences did not stabilize; raise r_max");

    // Newton form on the last d+1 values, anchored at r0 = m - d.
    std::vector<std::vector<mpz_class>> table;
    table.emplace_back();
    for (std::size_t i = m - d - 1; i < m; ++i)
        table.back().push_back(mpz_class(static_cast<long>(values[i])));
    for (std::size_t k = 1; k <= d; ++k) {
        std::vector<mpz_class> next;
        for (std::size_t i = 0; i + 1 < table.back().size(); ++i)
            next.push_back(table.back()[i + 1] - table.back()[i]);
        table.push_back(std::move(next));
    }
    const unsigned long r0 = static_cast<unsigned long>(m - d);

    // p(r) = sum_j D_j * C(r - r0, j); expand C(r - r0, j) over C(r, i) by
    // Vandermonde with C(-r0, k) = (-1)^k C(r0 + k - 1, k).
    NumericalPolynomial p;
    p.coeffs.assign(d + 1, 0);
    for (std::size_t j = 0; j <= d; ++j) {
        const mpz_class& D = table[j][0];
        if (D == 0) continue;
        for (std::size_t i = 0; i <= j; ++i) {
            std::size_t k = j - i;
            mpz_class c = binom_z(r0 + k - 1, k);  // C(-r0, k) = (-1)^k C(r0+k-1, k)
            if (k % 2 == 1) c = -c;
            p.coeffs[i] += D * c;
        }
    }
    while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();

    // The fit must reproduce the last max(3, d+2) values.
    std::size_t window = std::max<std::size_t>(3, d + 2);
    if (window > m) window = m;
    for (std::size_t i = m - window; i < m; ++i)
        if (p.eval(static_cast<unsigned long>(i + 1)) != static_cast<long>(values[i]))
            fail(ErrorCode::NotStabilized, "fit: tail window mismatch; raise r_max");
    return p;
}

} // namespace spectra
