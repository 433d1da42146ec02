#include "spectra/order.hpp"

namespace spectra {
namespace {

int cmp_grevlex_range(const Exps& a, const Exps& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int cmp_lex(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

} // namespace

int MonomialOrder::cmp(const Exps& a, const Exps& b) const {
    switch (kind) {
        case Kind::Lex:
            return cmp_lex(a, b);
        case Kind::GrevLex:
            return cmp_grevlex_range(a, b, 0, a.size());
        case Kind::Block: {
            int c = cmp_grevlex_range(a, b, 0, elim_vars);
            if (c != 0) return c;
            return cmp_grevlex_range(a, b, elim_vars, a.size());
        }
    }
    return 0;
}

} // namespace spectra
