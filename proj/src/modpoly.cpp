#include "spectra/modpoly.hpp"

#include <algorithm>

namespace spectra {

int ModuleOrder::cmp(const MTerm& a, const MTerm& b) const {
    if (weights.empty()) {
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return base.cmp(a.e, b.e);
    }
    MTerm la{wcomps[a.comp], a.e, {}};
    MTerm lb{wcomps[b.comp], b.e, {}};
    const Exps& ua = weights[a.comp];
    const Exps& ub = weights[b.comp];
    for (std::size_t i = 0; i < la.e.size(); ++i) {
        la.e[i] += ua[i];
        lb.e[i] += ub[i];
    }
    int c = lower->cmp(la, lb);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
}

namespace modpoly {

void normalize(VecPoly& f, const ModuleOrder& ord) {
    std::sort(f.begin(), f.end(), [&](const MTerm& a, const MTerm& b) {
        if (a.comp != b.comp) return a.comp < b.comp;
        return a.e < b.e;
    });
    VecPoly out;
    for (auto& t : f) {
        if (!out.empty() && out.back().comp == t.comp && out.back().e == t.e) {
            out.back().c += t.c;
            if (out.back().c.is_zero()) out.pop_back();
        } else if (!t.c.is_zero()) {
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const MTerm& a, const MTerm& b) { return ord.cmp(a, b) > 0; });
    f = std::move(out);
}

bool is_zero(const VecPoly& f) { return f.empty(); }

const MTerm& lead(const VecPoly& f) { return f.front(); }

VecPoly scaled_shift(const VecPoly& f, const Exps& mono, const Scalar& c) {
    VecPoly r;
    r.reserve(f.size());
    for (auto& t : f) {
        MTerm u = t;
        for (std::size_t i = 0; i < u.e.size(); ++i) u.e[i] += mono[i];
        u.c *= c;
        r.push_back(std::move(u));
    }
    return r;
}

VecPoly add(const VecPoly& a, const VecPoly& b, const ModuleOrder& ord) {
    VecPoly r = a;
    r.insert(r.end(), b.begin(), b.end());
    normalize(r, ord);
    return r;
}

void make_monic(VecPoly& f) {
    if (f.empty()) return;
    Scalar inv = f.front().c.inv();
    for (auto& t : f) t.c *= inv;
}

namespace {

bool divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps quotient_exps(const Exps& num, const Exps& den) {
    Exps q(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) q[i] = num[i] - den[i];
    return q;
}

Exps lcm_exps(const Exps& a, const Exps& b) {
    Exps l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

} // namespace

DivisionResult divide(const VecPoly& f, const std::vector<VecPoly>& G, const ModuleOrder& ord,
                      bool track_quotients) {
    DivisionResult res;
    if (track_quotients) res.quotients.resize(G.size());
    VecPoly work = f;
    VecPoly rem;
    while (!work.empty()) {
        const MTerm t = work.front();
        bool reduced = false;
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (G[k].empty()) continue;
            const MTerm& lt = G[k].front();
            if (lt.comp != t.comp || !divides(lt.e, t.e)) continue;
            Exps q = quotient_exps(t.e, lt.e);
            Scalar cf = t.c / lt.c;
            work = add(work, scaled_shift(G[k], q, -cf), ord);
            if (track_quotients)
                res.quotients[k] = add(res.quotients[k], VecPoly{{0, q, cf}}, ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(t);
            work.erase(work.begin());
        }
    }
    res.remainder = std::move(rem);
    return res;
}

std::vector<VecPoly> buchberger(std::vector<VecPoly> gens, const ModuleOrder& ord) {
    std::vector<VecPoly> G;
    std::uint32_t max_comp = 0;
    for (auto& g : gens) {
        VecPoly h = g;
        normalize(h, ord);
        if (!h.empty()) {
            for (auto& t : h) max_comp = std::max(max_comp, t.comp);
            make_monic(h);
            G.push_back(std::move(h));
        }
    }
    const bool rank_one = max_comp == 0;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            if (G[i].front().comp == G[j].front().comp) pairs.emplace_back(i, j);
    };
    for (std::size_t j = 0; j < G.size(); ++j) push_pairs(j);

    // Chain criterion, order-independent form: drop (i,j) when some other
    // lead divides the lcm strictly finer on both sides.
    auto chain_skip = [&](std::size_t i, std::size_t j, const Exps& L) {
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (k == i || k == j) continue;
            const MTerm& lk = G[k].front();
            if (lk.comp != G[i].front().comp || !divides(lk.e, L)) continue;
            if (lcm_exps(G[i].front().e, lk.e) != L && lcm_exps(G[j].front().e, lk.e) != L)
                return true;
        }
        return false;
    };

    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        const MTerm& li = G[i].front();
        const MTerm& lj = G[j].front();
        Exps L = lcm_exps(li.e, lj.e);
        if (rank_one) {
            // Coprime lead terms: the S-polynomial reduces to zero.
            bool coprime = true;
            for (std::size_t v = 0; v < L.size(); ++v)
                if (li.e[v] != 0 && lj.e[v] != 0) {
                    coprime = false;
                    break;
                }
            if (coprime) continue;
        }
        if (chain_skip(i, j, L)) continue;
        VecPoly s = add(scaled_shift(G[i], quotient_exps(L, li.e), li.c.inv()),
                        scaled_shift(G[j], quotient_exps(L, lj.e), -lj.c.inv()), ord);
        VecPoly r = divide(s, G, ord, false).remainder;
        if (!r.empty()) {
            make_monic(r);
            G.push_back(std::move(r));
            push_pairs(G.size() - 1);
        }
    }

    // Minimalize: drop elements whose lead term is divisible by another lead.
    std::vector<VecPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const MTerm& li = G[i].front();
            const MTerm& lj = G[j].front();
            if (lj.comp == li.comp && divides(lj.e, li.e) &&
                (li.e != lj.e || li.comp != lj.comp || j < i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // Tail-reduce each element against the others.
    std::vector<VecPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<VecPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        VecPoly r = divide(minimal[i], others, ord, false).remainder;
        normalize(r, ord);
        if (!r.empty()) {
            make_monic(r);
            reduced.push_back(std::move(r));
        }
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const VecPoly& a, const VecPoly& b) { return ord.cmp(a.front(), b.front()) > 0; });
    return reduced;
}

std::vector<VecPoly> schreyer_syzygies(const std::vector<VecPoly>& G, const ModuleOrder& ord,
                                       ModuleOrder& induced) {
    induced.base = ord.base;
    induced.weights.clear();
    induced.wcomps.clear();
    induced.lower = std::make_shared<ModuleOrder>(ord);
    for (auto& g : G) {
        induced.weights.push_back(g.front().e);
        induced.wcomps.push_back(g.front().comp);
    }

    std::vector<VecPoly> syz;
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            const MTerm& li = G[i].front();
            const MTerm& lj = G[j].front();
            if (li.comp != lj.comp) continue;
            Exps L = lcm_exps(li.e, lj.e);
            Exps ui = quotient_exps(L, li.e);
            Exps uj = quotient_exps(L, lj.e);
            VecPoly s = add(scaled_shift(G[i], ui, li.c.inv()),
                            scaled_shift(G[j], uj, -lj.c.inv()), ord);
            auto div = divide(s, G, ord, true);
            if (!div.remainder.empty())
                fail(ErrorCode::InvalidInput, "syzygies: columns are not a Groebner basis");
            VecPoly column;
            column.push_back({static_cast<std::uint32_t>(i), ui, li.c.inv()});
            column.push_back({static_cast<std::uint32_t>(j), uj, -lj.c.inv()});
            for (std::size_t k = 0; k < G.size(); ++k)
                for (auto& t : div.quotients[k])
                    column.push_back({static_cast<std::uint32_t>(k), t.e, -t.c});
            normalize(column, induced);
            if (!column.empty()) syz.push_back(std::move(column));
        }
    }
    return syz;
}

} // namespace modpoly
} // namespace spectra
