#ifndef SPECTRA_POLY_HPP
#define SPECTRA_POLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "spectra/field.hpp"

namespace spectra {

using Exps = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exps& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

/// Ambient polynomial ring: coefficient field plus named variables.
struct PolyRing {
    FieldSpec field;
    std::vector<std::string> vars;

    std::size_t nvars() const { return vars.size(); }
    bool operator==(const PolyRing& o) const { return field == o.field && vars == o.vars; }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars);

/// A point of affine space over the ring's field.
struct AffinePoint {
    std::vector<Scalar> coords;

    std::size_t dim() const { return coords.size(); }
    bool operator==(const AffinePoint&) const = default;
    bool is_origin() const {
        for (auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
    std::string str() const;
};

AffinePoint origin(const RingPtr& ring);

/// Sparse multivariate polynomial in canonical form: no zero coefficients,
/// exponent vectors of length nvars, terms keyed lexicographically.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MultiPoly zero(const RingPtr& ring) { return MultiPoly(ring); }
    static MultiPoly constant(const RingPtr& ring, const Scalar& c);
    static MultiPoly variable(const RingPtr& ring, std::size_t i, std::uint32_t e = 1);
    static MultiPoly monomial(const RingPtr& ring, const Exps& e, const Scalar& c);

    const RingPtr& ring() const { return ring_; }
    const std::map<Exps, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint64_t degree() const;  // total degree, 0 for the zero polynomial

    void add_term(const Exps& e, const Scalar& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Scalar& c) const;
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    RingPtr ring_;
    std::map<Exps, Scalar> terms_;
};

/// Exact value of f at a. The point dimension must match the ring.
Scalar poly_eval(const MultiPoly& f, const AffinePoint& a);

/// Formal partial derivative with respect to the i-th variable.
MultiPoly poly_partial(const MultiPoly& f, std::size_t i);

/// Coordinate shift: g(X) = f(X + a), so g(0) = f(a).
MultiPoly poly_translate(const MultiPoly& f, const AffinePoint& a);

AffinePoint point_negate(const AffinePoint& a);

} // namespace spectra

#endif
