#ifndef SPECTRA_ORDER_HPP
#define SPECTRA_ORDER_HPP

#include <cstddef>

#include "spectra/poly.hpp"

namespace spectra {

/// Global monomial order on exponent vectors. Block(k) eliminates the
/// first k variables (grevlex within each block, first block dominant).
struct MonomialOrder {
    enum class Kind { GrevLex, Lex, Block };

    Kind kind = Kind::GrevLex;
    std::size_t elim_vars = 0;

    static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder block(std::size_t elim) { return {Kind::Block, elim}; }

    /// Returns <0, 0, >0 as a is smaller than, equal to, greater than b.
    int cmp(const Exps& a, const Exps& b) const;
    bool less(const Exps& a, const Exps& b) const { return cmp(a, b) < 0; }
    bool greater(const Exps& a, const Exps& b) const { return cmp(a, b) > 0; }
};

} // namespace spectra

#endif
