#include "spectra/resolution.hpp"

#include <algorithm>

namespace spectra {

FreeModuleMap::FreeModuleMap(RingPtr r, std::size_t nr, std::size_t nc)
    : ring(std::move(r)), rows(nr), cols(nc), entries(nr * nc, MultiPoly(ring)) {}

FreeModuleMap FreeModuleMap::compose(const FreeModuleMap& g) const {
    if (cols != g.rows)
        fail(ErrorCode::DimensionMismatch, "compose: inner dimensions differ");
    FreeModuleMap out(ring, rows, g.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < g.cols; ++j) {
            MultiPoly s(ring);
            for (std::size_t k = 0; k < cols; ++k) s = s + at(i, k) * g.at(k, j);
            out.at(i, j) = std::move(s);
        }
    return out;
}

bool FreeModuleMap::is_zero() const {
    for (auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

std::vector<VecPoly> FreeModuleMap::columns(const ModuleOrder& ord) const {
    std::vector<VecPoly> out(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        VecPoly v;
        for (std::size_t i = 0; i < rows; ++i)
            for (auto& [e, c] : at(i, j).terms())
                v.push_back({static_cast<std::uint32_t>(i), e, c});
        modpoly::normalize(v, ord);
        out[j] = std::move(v);
    }
    return out;
}

FreeModuleMap FreeModuleMap::from_columns(const RingPtr& ring, std::size_t rows,
                                          const std::vector<VecPoly>& cols) {
    FreeModuleMap out(ring, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (auto& t : cols[j]) {
            if (t.comp >= rows)
                fail(ErrorCode::DimensionMismatch, "from_columns: component out of range");
            out.at(t.comp, j).add_term(t.e, t.c);
        }
    return out;
}

FreeModuleMap module_gb(const FreeModuleMap& M, const MonomialOrder& ord) {
    ModuleOrder mord{ord, {}};
    auto gb = modpoly::buchberger(M.columns(mord), mord);
    return FreeModuleMap::from_columns(M.ring, M.rows, gb);
}

FreeModuleMap syzygies(const FreeModuleMap& G, const MonomialOrder& ord) {
    ModuleOrder mord{ord, {}};
    ModuleOrder induced;
    auto syz = modpoly::schreyer_syzygies(G.columns(mord), mord, induced);
    return FreeModuleMap::from_columns(G.ring, G.cols, syz);
}

namespace {

// Schreyer's bound needs the basis sorted with lead monomials decreasing.
void sort_for_syzygies(std::vector<VecPoly>& G, const ModuleOrder& ord) {
    std::stable_sort(G.begin(), G.end(), [&](const VecPoly& a, const VecPoly& b) {
        return ord.cmp(a.front(), b.front()) > 0;
    });
}

} // namespace

FreeResolution free_resolution(const Ideal& I, std::size_t cap, const MonomialOrder& ord) {
    const RingPtr& ring = I.ring();
    std::size_t n = ring->nvars();
    if (cap == 0) cap = n + 3;

    FreeResolution res;
    res.ring = ring;
    res.ranks = {1};

    const auto& gb = I.groebner(ord);
    if (gb.empty()) return res;

    ModuleOrder cur_ord{ord, {}};
    std::vector<VecPoly> cur;
    for (auto& g : gb) cur.push_back(to_vecpoly(g, 0, cur_ord));
    sort_for_syzygies(cur, cur_ord);
    res.maps.push_back(FreeModuleMap::from_columns(ring, 1, cur));
    res.ranks.push_back(cur.size());

    const std::size_t hard_limit = 2 * cap + 4;
    while (res.maps.size() < hard_limit) {
        ModuleOrder induced;
        auto syz = modpoly::schreyer_syzygies(cur, cur_ord, induced);
        if (syz.empty()) break;
        sort_for_syzygies(syz, induced);
        res.maps.push_back(
            FreeModuleMap::from_columns(ring, cur.size(), syz));
        res.ranks.push_back(syz.size());
        cur = std::move(syz);
        cur_ord = std::move(induced);
    }
    if (res.maps.size() >= hard_limit)
        fail(ErrorCode::CapExceeded, "free_resolution: length cap exceeded");

    FreeResolution min = minimalize(res);
    if (min.length() > cap)
        fail(ErrorCode::CapExceeded, "free_resolution: length cap exceeded");
    return min;
}

namespace {

bool is_unit_entry(const MultiPoly& f) { return !f.is_zero() && f.degree() == 0; }

Scalar constant_of(const MultiPoly& f) { return f.terms().begin()->second; }

FreeModuleMap drop_row_col(const FreeModuleMap& A, std::size_t r, std::size_t c) {
    FreeModuleMap out(A.ring, A.rows - 1, A.cols - 1);
    for (std::size_t i = 0, oi = 0; i < A.rows; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, oj = 0; j < A.cols; ++j) {
            if (j == c) continue;
            out.at(oi, oj) = A.at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

FreeModuleMap drop_row(const FreeModuleMap& A, std::size_t r) {
    FreeModuleMap out(A.ring, A.rows - 1, A.cols);
    for (std::size_t i = 0, oi = 0; i < A.rows; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0; j < A.cols; ++j) out.at(oi, j) = A.at(i, j);
        ++oi;
    }
    return out;
}

FreeModuleMap drop_col(const FreeModuleMap& A, std::size_t c) {
    FreeModuleMap out(A.ring, A.rows, A.cols - 1);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0, oj = 0; j < A.cols; ++j) {
            if (j == c) continue;
            out.at(i, oj) = A.at(i, j);
            ++oj;
        }
    return out;
}

} // namespace

FreeResolution minimalize(const FreeResolution& in) {
    FreeResolution res = in;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < res.maps.size() && !changed; ++i) {
            FreeModuleMap& A = res.maps[i];
            for (std::size_t r = 0; r < A.rows && !changed; ++r) {
                for (std::size_t c = 0; c < A.cols && !changed; ++c) {
                    if (!is_unit_entry(A.at(r, c))) continue;
                    Scalar uinv = constant_of(A.at(r, c)).inv();
                    // Basis change on F_{i+1} clearing row r.
                    for (std::size_t k = 0; k < A.cols; ++k) {
                        if (k == c || A.at(r, k).is_zero()) continue;
                        MultiPoly lam = A.at(r, k) * uinv;
                        for (std::size_t r2 = 0; r2 < A.rows; ++r2)
                            A.at(r2, k) = A.at(r2, k) - lam * A.at(r2, c);
                        if (i + 1 < res.maps.size()) {
                            FreeModuleMap& B = res.maps[i + 1];
                            for (std::size_t j = 0; j < B.cols; ++j)
                                B.at(c, j) = B.at(c, j) + lam * B.at(k, j);
                        }
                    }
                    // Basis change on F_i clearing column c.
                    for (std::size_t r2 = 0; r2 < A.rows; ++r2) {
                        if (r2 == r || A.at(r2, c).is_zero()) continue;
                        MultiPoly mu = A.at(r2, c) * uinv;
                        for (std::size_t k = 0; k < A.cols; ++k)
                            A.at(r2, k) = A.at(r2, k) - mu * A.at(r, k);
                        if (i > 0) {
                            FreeModuleMap& C = res.maps[i - 1];
                            for (std::size_t j = 0; j < C.rows; ++j)
                                C.at(j, r) = C.at(j, r) + C.at(j, r2) * mu;
                        }
                    }
                    res.maps[i] = drop_row_col(A, r, c);
                    if (i + 1 < res.maps.size()) res.maps[i + 1] = drop_row(res.maps[i + 1], c);
                    if (i > 0) res.maps[i - 1] = drop_col(res.maps[i - 1], r);
                    res.ranks[i] -= 1;
                    res.ranks[i + 1] -= 1;
                    changed = true;
                }
            }
        }
    }
    while (!res.maps.empty() && res.maps.back().cols == 0) {
        res.maps.pop_back();
        res.ranks.pop_back();
    }
    return res;
}

} // namespace spectra
