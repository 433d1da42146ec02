#ifndef SPECTRA_FIELD_HPP
#define SPECTRA_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "spectra/error.hpp"

namespace spectra {

/// Exact coefficient field: the rationals (prime == 0) or F_p for a prime p.
struct FieldSpec {
    std::uint64_t prime = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime_field(std::uint64_t p);

    bool is_rational() const { return prime == 0; }
    bool operator==(const FieldSpec&) const = default;

    void require_char_not_two(const std::string& where) const {
        if (prime == 2)
            fail(ErrorCode::CharTwoUnsupported, where + ": characteristic 2 not supported");
    }

    std::string name() const;
};

bool is_prime_u64(std::uint64_t n);

/// Exact scalar. Rationals are arbitrary-precision, gcd-reduced with
/// normalized sign (mpq canonical form); F_p values are residues in [0, p).
class Scalar {
public:
    Scalar() = default;
    Scalar(const FieldSpec& f, const mpq_class& v) : mod_(f.prime), v_(v) { reduce(); }
    Scalar(const FieldSpec& f, long v) : mod_(f.prime), v_(v) { reduce(); }

    static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }

    const mpq_class& value() const { return v_; }
    FieldSpec field() const { return FieldSpec{mod_}; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inv() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return mod_ == o.mod_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text form: "p/q" over the rationals, residue over F_p.
    std::string str() const;

    /// Parses an integer or "p/q" literal. Over F_p the denominator must be
    /// invertible.
    static Scalar parse(const FieldSpec& f, const std::string& text);

private:
    void reduce();
    void check_same(const Scalar& o) const {
        if (mod_ != o.mod_)
            fail(ErrorCode::InvalidInput, "scalars from different fields");
    }

    std::uint64_t mod_ = 0;
    mpq_class v_ = 0;
};

} // namespace spectra

#endif
