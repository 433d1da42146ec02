#include "spectra/field.hpp"

namespace spectra {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    mpz_class z = mpz_class(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p))
        fail(ErrorCode::InvalidInput, "prime field modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{p};
}

std::string FieldSpec::name() const {
    return is_rational() ? "Q" : "F" + std::to_string(prime);
}

void Scalar::reduce() {
    v_.canonicalize();
    if (mod_ == 0) return;
    mpz_class p(static_cast<unsigned long>(mod_));
    if (v_.get_den() != 1) {
        mpz_class deninv;
        if (mpz_invert(deninv.get_mpz_t(), v_.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
            fail(ErrorCode::InvalidInput, "denominator not invertible mod " + std::to_string(mod_));
        v_ = mpq_class(v_.get_num() * deninv);
    }
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
    v_ = mpq_class(r);
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.v_ = -r.v_;
    r.reduce();
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r(*this);
    r.v_ += o.v_;
    r.reduce();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar r(*this);
    r.v_ -= o.v_;
    r.reduce();
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r(*this);
    r.v_ *= o.v_;
    r.reduce();
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero()) fail(ErrorCode::InvalidInput, "division by zero");
    Scalar r(*this);
    if (mod_ == 0) {
        r.v_ = 1 / v_;
    } else {
        mpz_class p(static_cast<unsigned long>(mod_));
        mpz_class iv;
        mpz_invert(iv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
        r.v_ = mpq_class(iv);
    }
    r.reduce();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

std::string Scalar::str() const { return v_.get_str(); }

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        fail(ErrorCode::InvalidInput, "bad rational literal '" + text + "'");
    q.canonicalize();
    return Scalar(f, q);
}

} // namespace spectra
