#ifndef SPECTRA_MODPOLY_HPP
#define SPECTRA_MODPOLY_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "spectra/order.hpp"
#include "spectra/poly.hpp"

namespace spectra {

/// Term of an element of a free module P^m: coefficient * monomial * e_comp.
struct MTerm {
    std::uint32_t comp = 0;
    Exps e;
    Scalar c;
};

/// Element of P^m as a term list kept sorted with the lead term first.
using VecPoly = std::vector<MTerm>;

/// Order on free-module terms: position-over-term when weights is empty
/// (lower component index wins), otherwise the Schreyer order induced by a
/// Groebner basis of the lower module: x^u e_k maps to the lead term of
/// x^u g_k (weight weights[k], component wcomps[k]) compared in the lower
/// order, ties broken by component index.
struct ModuleOrder {
    MonomialOrder base;
    std::vector<Exps> weights;
    std::vector<std::uint32_t> wcomps;
    std::shared_ptr<const ModuleOrder> lower;

    int cmp(const MTerm& a, const MTerm& b) const;
    bool term_less(const MTerm& a, const MTerm& b) const { return cmp(a, b) < 0; }
};

namespace modpoly {

void normalize(VecPoly& f, const ModuleOrder& ord);
bool is_zero(const VecPoly& f);
const MTerm& lead(const VecPoly& f);
VecPoly scaled_shift(const VecPoly& f, const Exps& mono, const Scalar& c);
VecPoly add(const VecPoly& a, const VecPoly& b, const ModuleOrder& ord);
void make_monic(VecPoly& f);

/// Quotient of f on division by G; coefficients of each divisor collected
/// as plain polynomials (term maps).
struct DivisionResult {
    VecPoly remainder;
    std::vector<VecPoly> quotients;  // quotients[k] is a rank-1 VecPoly (comp 0)
};

DivisionResult divide(const VecPoly& f, const std::vector<VecPoly>& G, const ModuleOrder& ord,
                      bool track_quotients);

/// Buchberger completion to a reduced monic Groebner basis.
std::vector<VecPoly> buchberger(std::vector<VecPoly> gens, const ModuleOrder& ord);

/// S-pair syzygies of a Groebner basis (Schreyer construction). The output
/// vectors live in P^{G.size()} and form a Groebner basis of the syzygy
/// module for the induced order returned in `induced`.
std::vector<VecPoly> schreyer_syzygies(const std::vector<VecPoly>& G, const ModuleOrder& ord,
                                       ModuleOrder& induced);

} // namespace modpoly
} // namespace spectra

#endif
