#include "spectra/groebner.hpp"

#include <algorithm>

namespace spectra {

VecPoly to_vecpoly(const MultiPoly& f, std::uint32_t comp, const ModuleOrder& ord) {
    VecPoly v;
    for (auto& [e, c] : f.terms()) v.push_back({comp, e, c});
    modpoly::normalize(v, ord);
    return v;
}

MultiPoly from_vecpoly_component(const VecPoly& f, std::uint32_t comp, const RingPtr& ring) {
    MultiPoly r(ring);
    for (auto& t : f)
        if (t.comp == comp) r.add_term(t.e, t.c);
    return r;
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& G,
                      const MonomialOrder& ord) {
    ModuleOrder mord{ord, {}};
    std::vector<VecPoly> g;
    for (auto& p : G)
        if (!p.is_zero()) g.push_back(to_vecpoly(p, 0, mord));
    auto res = modpoly::divide(to_vecpoly(f, 0, mord), g, mord, false);
    return from_vecpoly_component(res.remainder, 0, f.ring());
}

std::vector<MultiPoly> buchberger(const RingPtr& ring, const std::vector<MultiPoly>& gens,
                                  const MonomialOrder& ord) {
    ModuleOrder mord{ord, {}};
    std::vector<VecPoly> g;
    for (auto& p : gens)
        if (!p.is_zero()) g.push_back(to_vecpoly(p, 0, mord));
    auto gb = modpoly::buchberger(std::move(g), mord);
    std::vector<MultiPoly> out;
    for (auto& v : gb) out.push_back(from_vecpoly_component(v, 0, ring));
    return out;
}

const std::vector<MultiPoly>& Ideal::groebner(const MonomialOrder& ord) const {
    for (auto& [o, gb] : cache_)
        if (o.kind == ord.kind && o.elim_vars == ord.elim_vars) return gb;
    cache_.emplace_back(ord, buchberger(ring_, gens_, ord));
    return cache_.back().second;
}

bool Ideal::contains(const MultiPoly& f, const MonomialOrder& ord) const {
    if (f.is_zero()) return true;
    const auto& gb = groebner(ord);
    if (gb.empty()) return false;
    return normal_form(f, gb, ord).is_zero();
}

bool Ideal::is_unit(const MonomialOrder& ord) const {
    const auto& gb = groebner(ord);
    return gb.size() == 1 && gb[0].degree() == 0 && !gb[0].is_zero();
}

namespace {

bool exps_divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<Exps> lead_exponents(const Ideal& I, const MonomialOrder& ord) {
    std::vector<Exps> leads;
    ModuleOrder mord{ord, {}};
    for (auto& g : I.groebner(ord)) {
        VecPoly v = to_vecpoly(g, 0, mord);
        if (!v.empty()) leads.push_back(v.front().e);
    }
    return leads;
}

} // namespace

std::vector<Exps> monomials_of_degree(std::size_t n, std::uint32_t r) {
    std::vector<Exps> out;
    Exps cur(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t rem) -> void {
        if (i + 1 == n) {
            cur[i] = rem;
            out.push_back(cur);
            return;
        }
        for (std::uint32_t v = 0; v <= rem; ++v) {
            cur[i] = v;
            self(self, i + 1, rem - v);
        }
    };
    if (n == 0) {
        if (r == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, r);
    return out;
}

std::vector<Exps> monomials_below_degree(std::size_t n, std::uint32_t r) {
    std::vector<Exps> out;
    for (std::uint32_t d = 0; d < r; ++d) {
        auto level = monomials_of_degree(n, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::optional<std::vector<Exps>> standard_monomials(const Ideal& I, const MonomialOrder& ord) {
    auto leads = lead_exponents(I, ord);
    std::size_t n = I.ring()->nvars();
    for (auto& l : leads)
        if (total_degree(l) == 0) return std::vector<Exps>{};  // unit ideal
    // Finite iff every variable has a pure power among the lead terms.
    std::vector<std::uint32_t> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t best = 0;
        for (auto& l : leads) {
            bool pure = l[i] > 0;
            for (std::size_t j = 0; j < n && pure; ++j)
                if (j != i && l[j] != 0) pure = false;
            if (pure && (best == 0 || l[i] < best)) best = l[i];
        }
        if (best == 0 && n > 0) return std::nullopt;
        bound[i] = best;
    }
    std::vector<Exps> result;
    Exps cur(n, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            for (auto& l : leads)
                if (exps_divides(l, cur)) return;
            result.push_back(cur);
            return;
        }
        for (std::uint32_t v = 0; v < bound[i]; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    std::sort(result.begin(), result.end(), [](const Exps& a, const Exps& b) {
        auto da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    return result;
}

std::optional<std::uint64_t> quotient_dim(const Ideal& I, const MonomialOrder& ord) {
    auto sm = standard_monomials(I, ord);
    if (!sm) return std::nullopt;
    return sm->size();
}

Ideal ideal_power_sum(const Ideal& I, std::uint32_t r) {
    if (r == 0) fail(ErrorCode::InvalidInput, "ideal_power_sum: r must be >= 1");
    std::vector<MultiPoly> gens = I.gens();
    const auto& ring = I.ring();
    Scalar one = Scalar::one(ring->field);
    for (auto& e : monomials_of_degree(ring->nvars(), r))
        gens.push_back(MultiPoly::monomial(ring, e, one));
    return Ideal(ring, std::move(gens));
}

namespace {

// Ring with an auxiliary elimination variable prepended.
RingPtr extend_ring(const RingPtr& ring) {
    std::vector<std::string> vars;
    vars.push_back("@t");
    vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
    return make_ring(ring->field, std::move(vars));
}

MultiPoly lift_poly(const MultiPoly& f, const RingPtr& ext) {
    MultiPoly r(ext);
    for (auto& [e, c] : f.terms()) {
        Exps le(e.size() + 1, 0);
        std::copy(e.begin(), e.end(), le.begin() + 1);
        r.add_term(le, c);
    }
    return r;
}

std::optional<MultiPoly> restrict_poly(const MultiPoly& f, const RingPtr& ring) {
    MultiPoly r(ring);
    for (auto& [e, c] : f.terms()) {
        if (e[0] != 0) return std::nullopt;
        r.add_term(Exps(e.begin() + 1, e.end()), c);
    }
    return r;
}

// Exact division f / g; fails if g does not divide f.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
    ModuleOrder mord{MonomialOrder::grevlex(), {}};
    std::vector<VecPoly> divs{to_vecpoly(g, 0, mord)};
    auto res = modpoly::divide(to_vecpoly(f, 0, mord), divs, mord, true);
    if (!res.remainder.empty())
        fail(ErrorCode::InvalidInput, "exact_divide: not divisible");
    return from_vecpoly_component(res.quotients[0], 0, f.ring());
}

} // namespace

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    const auto& ring = I.ring();
    RingPtr ext = extend_ring(ring);
    MultiPoly t = MultiPoly::variable(ext, 0);
    MultiPoly one_minus_t = MultiPoly::constant(ext, Scalar::one(ext->field)) - t;
    std::vector<MultiPoly> gens;
    for (auto& g : I.gens())
        if (!g.is_zero()) gens.push_back(t * lift_poly(g, ext));
    for (auto& g : J.gens())
        if (!g.is_zero()) gens.push_back(one_minus_t * lift_poly(g, ext));
    auto gb = buchberger(ext, gens, MonomialOrder::block(1));
    std::vector<MultiPoly> out;
    for (auto& g : gb)
        if (auto r = restrict_poly(g, ring)) out.push_back(std::move(*r));
    return Ideal(ring, std::move(out));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    const auto& ring = I.ring();
    std::vector<MultiPoly> nonzero;
    for (auto& f : J.gens())
        if (!f.is_zero()) nonzero.push_back(f);
    if (nonzero.empty()) {
        // (I : 0) = P.
        return Ideal(ring, {MultiPoly::constant(ring, Scalar::one(ring->field))});
    }
    std::optional<Ideal> acc;
    for (auto& f : nonzero) {
        Ideal cap = ideal_intersect(I, Ideal(ring, {f}));
        std::vector<MultiPoly> quots;
        for (auto& h : cap.gens()) quots.push_back(exact_divide(h, f));
        Ideal part(ring, std::move(quots));
        acc = acc ? ideal_intersect(*acc, part) : part;
    }
    return *acc;
}

std::size_t krull_dim(const Ideal& I, const MonomialOrder& ord) {
    if (I.is_unit(ord)) fail(ErrorCode::EmptyVariety, "krull_dim: the unit ideal has empty variety");
    auto leads = lead_exponents(I, ord);
    std::size_t n = I.ring()->nvars();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size <= best) continue;
        bool independent = true;
        for (auto& l : leads) {
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i)
                if (l[i] > 0 && !(mask & (1ull << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    for (auto& g : J.gens())
        if (!I.contains(g)) return false;
    for (auto& g : I.gens())
        if (!J.contains(g)) return false;
    return true;
}

Ideal translate_ideal(const Ideal& I, const AffinePoint& a) {
    std::vector<MultiPoly> gens;
    for (auto& g : I.gens()) gens.push_back(poly_translate(g, a));
    return Ideal(I.ring(), std::move(gens));
}

} // namespace spectra
