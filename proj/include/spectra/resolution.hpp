#ifndef SPECTRA_RESOLUTION_HPP
#define SPECTRA_RESOLUTION_HPP

#include <vector>

#include "spectra/groebner.hpp"

namespace spectra {

/// Matrix of polynomials representing a map P^cols -> P^rows.
struct FreeModuleMap {
    RingPtr ring;
    std::size_t rows = 0, cols = 0;
    std::vector<MultiPoly> entries;  // row-major

    FreeModuleMap() = default;
    FreeModuleMap(RingPtr r, std::size_t nr, std::size_t nc);

    MultiPoly& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const MultiPoly& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    FreeModuleMap compose(const FreeModuleMap& g) const;  // this * g
    bool is_zero() const;

    std::vector<VecPoly> columns(const ModuleOrder& ord) const;
    static FreeModuleMap from_columns(const RingPtr& ring, std::size_t rows,
                                      const std::vector<VecPoly>& cols);
};

/// Groebner basis of the column span, position-over-term over the base order.
FreeModuleMap module_gb(const FreeModuleMap& M, const MonomialOrder& ord = MonomialOrder::grevlex());

/// Columns generating the kernel of G (whose columns must form a Groebner
/// basis under the position-over-term order).
FreeModuleMap syzygies(const FreeModuleMap& G, const MonomialOrder& ord = MonomialOrder::grevlex());

/// Free resolution of P/I: maps[i] = d_{i+1} : F_{i+1} -> F_i, F_0 = P.
/// ranks[i] is the rank of F_i; ranks.size() == maps.size() + 1.
struct FreeResolution {
    RingPtr ring;
    std::vector<FreeModuleMap> maps;
    std::vector<std::size_t> ranks;

    std::size_t length() const { return maps.size(); }
    std::size_t rank(std::size_t i) const { return i < ranks.size() ? ranks[i] : 0; }
};

/// Iterated Schreyer syzygies starting from the reduced Groebner basis of I.
/// cap = 0 means the default n + 3; CAP_EXCEEDED is raised when the length
/// still exceeds the cap after one minimalization pass.
FreeResolution free_resolution(const Ideal& I, std::size_t cap = 0,
                               const MonomialOrder& ord = MonomialOrder::grevlex());

/// Removes unit entries by row/column elimination; preserves homotopy type.
FreeResolution minimalize(const FreeResolution& res);

} // namespace spectra

#endif
