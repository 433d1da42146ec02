#include "spectra/poly.hpp"

#include <sstream>

namespace spectra {

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars) {
    return std::make_shared<const PolyRing>(PolyRing{field, std::move(vars)});
}

AffinePoint origin(const RingPtr& ring) {
    AffinePoint a;
    a.coords.assign(ring->nvars(), Scalar::zero(ring->field));
    return a;
}

std::string AffinePoint::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ",";
        os << coords[i].str();
    }
    os << ")";
    return os.str();
}

AffinePoint point_negate(const AffinePoint& a) {
    AffinePoint r;
    r.coords.reserve(a.coords.size());
    for (auto& c : a.coords) r.coords.push_back(-c);
    return r;
}

MultiPoly MultiPoly::constant(const RingPtr& ring, const Scalar& c) {
    MultiPoly f(ring);
    f.add_term(Exps(ring->nvars(), 0), c);
    return f;
}

MultiPoly MultiPoly::variable(const RingPtr& ring, std::size_t i, std::uint32_t e) {
    if (i >= ring->nvars()) fail(ErrorCode::InvalidInput, "variable index out of range");
    Exps ex(ring->nvars(), 0);
    ex[i] = e;
    MultiPoly f(ring);
    f.add_term(ex, Scalar::one(ring->field));
    return f;
}

MultiPoly MultiPoly::monomial(const RingPtr& ring, const Exps& e, const Scalar& c) {
    MultiPoly f(ring);
    f.add_term(e, c);
    return f;
}

std::uint64_t MultiPoly::degree() const {
    std::uint64_t d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

void MultiPoly::add_term(const Exps& e, const Scalar& c) {
    if (c.is_zero()) return;
    if (e.size() != ring_->nvars()) fail(ErrorCode::DimensionMismatch, "exponent vector length");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r(*this);
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r(*this);
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(ring_);
    Exps e(ring_->nvars());
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
    MultiPoly r(ring_);
    if (c.is_zero()) return r;
    for (auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    // Print in descending degree, then reverse-map order, so that
    // "x^2 - y" style output is stable across runs.
    std::vector<std::pair<Exps, Scalar>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        auto da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : ts) {
        mpq_class q = c.value();
        bool neg = sgn(q) < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        mpq_class aq = abs(q);
        bool is_const = total_degree(e) == 0;
        if (aq != 1 || is_const) {
            os << aq.get_str();
            if (!is_const) os << "*";
        }
        bool firstv = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << ring_->vars[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

Scalar poly_eval(const MultiPoly& f, const AffinePoint& a) {
    const auto& ring = *f.ring();
    if (a.dim() != ring.nvars()) fail(ErrorCode::DimensionMismatch, "poly_eval: point dimension");
    Scalar acc = Scalar::zero(ring.field);
    for (auto& [e, c] : f.terms()) {
        Scalar t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= a.coords[i];
        acc += t;
    }
    return acc;
}

MultiPoly poly_partial(const MultiPoly& f, std::size_t i) {
    const auto& ring = f.ring();
    if (i >= ring->nvars()) fail(ErrorCode::InvalidInput, "poly_partial: variable index");
    MultiPoly r(ring);
    for (auto& [e, c] : f.terms()) {
        if (e[i] == 0) continue;
        Exps d = e;
        d[i] -= 1;
        r.add_term(d, c * Scalar(ring->field, static_cast<long>(e[i])));
    }
    return r;
}

MultiPoly poly_translate(const MultiPoly& f, const AffinePoint& a) {
    const auto& ring = f.ring();
    if (a.dim() != ring->nvars())
        fail(ErrorCode::DimensionMismatch, "poly_translate: point dimension");
    // Substitute X_i -> X_i + a_i term by term.
    MultiPoly r(ring);
    for (auto& [e, c] : f.terms()) {
        MultiPoly t = MultiPoly::constant(ring, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            MultiPoly lin = MultiPoly::variable(ring, i) + MultiPoly::constant(ring, a.coords[i]);
            for (std::uint32_t k = 0; k < e[i]; ++k) t = t * lin;
        }
        r = r + t;
    }
    return r;
}

} // namespace spectra
