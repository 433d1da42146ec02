#ifndef SPECTRA_GROEBNER_HPP
#define SPECTRA_GROEBNER_HPP

#include <optional>
#include <vector>

#include "spectra/modpoly.hpp"

namespace spectra {

/// Finitely generated ideal of P = k[X], with a per-order Groebner cache.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<MultiPoly> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)) {}

    static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<MultiPoly>& gens() const { return gens_; }

    /// Reduced monic Groebner basis; cached per order.
    const std::vector<MultiPoly>& groebner(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

    bool contains(const MultiPoly& f, const MonomialOrder& ord = MonomialOrder::grevlex()) const;
    bool is_unit(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

private:
    RingPtr ring_;
    std::vector<MultiPoly> gens_;
    mutable std::vector<std::pair<MonomialOrder, std::vector<MultiPoly>>> cache_;
};

/// Remainder of f on division by G; no term of the result is divisible by a
/// lead term of G.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& G,
                      const MonomialOrder& ord);

/// Reduced monic Groebner basis of the ideal generated by gens.
std::vector<MultiPoly> buchberger(const RingPtr& ring, const std::vector<MultiPoly>& gens,
                                  const MonomialOrder& ord);

/// dim_k P/I, or nullopt when infinite.
std::optional<std::uint64_t> quotient_dim(const Ideal& I,
                                          const MonomialOrder& ord = MonomialOrder::grevlex());

/// I + <all monomials of total degree r>.
Ideal ideal_power_sum(const Ideal& I, std::uint32_t r);

/// Ideal quotient (I : J).
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

/// Intersection of two ideals.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);

/// Krull dimension of P/I (I proper); uses independent variable subsets
/// against the lead-term ideal.
std::size_t krull_dim(const Ideal& I, const MonomialOrder& ord = MonomialOrder::grevlex());

/// True when the two ideals contain each other.
bool ideal_equal(const Ideal& I, const Ideal& J);

/// All exponent vectors of total degree exactly r in n variables.
std::vector<Exps> monomials_of_degree(std::size_t n, std::uint32_t r);

/// All exponent vectors of total degree < r, graded order (degree, then map
/// order within a degree). Basis of P/<X>^r.
std::vector<Exps> monomials_below_degree(std::size_t n, std::uint32_t r);

/// Standard monomials of P/I when finite, in graded order.
std::optional<std::vector<Exps>> standard_monomials(const Ideal& I,
                                                    const MonomialOrder& ord = MonomialOrder::grevlex());

/// Translate every generator so that the queried point becomes the origin.
Ideal translate_ideal(const Ideal& I, const AffinePoint& a);

// Conversions between MultiPoly and rank-one VecPoly.
VecPoly to_vecpoly(const MultiPoly& f, std::uint32_t comp, const ModuleOrder& ord);
MultiPoly from_vecpoly_component(const VecPoly& f, std::uint32_t comp, const RingPtr& ring);

} // namespace spectra

#endif
