#include "spectra/variety.hpp"

#include <algorithm>
#include <map>

namespace spectra {

bool point_on_variety(const Ideal& I, const AffinePoint& a) {
    for (auto& g : I.gens())
        if (!poly_eval(g, a).is_zero()) return false;
    return true;
}

namespace {

long long alternating_index(const std::vector<std::size_t>& d) {
    long long idx = 0;
    for (std::size_t p = 0; p < d.size(); ++p)
        idx += (p % 2 == 0 ? -1 : 1) * static_cast<long long>(d[p]);
    return idx;
}

void pad_to(HomologyReport& rep, std::size_t len) {
    rep.d.resize(len, 0);
    rep.index = alternating_index(rep.d);
}

ChainComplex evaluate_resolution_at_origin(const FreeResolution& res, const FieldSpec& field) {
    ChainComplex C;
    C.field = field;
    for (std::size_t i = 0; i < res.ranks.size(); ++i) C.dims.push_back(res.ranks[i]);
    AffinePoint zero = origin(res.ring);
    for (auto& map : res.maps) {
        Matrix M(field, map.rows, map.cols);
        for (std::size_t r = 0; r < map.rows; ++r)
            for (std::size_t c = 0; c < map.cols; ++c) M.at(r, c) = poly_eval(map.at(r, c), zero);
        C.diffs.push_back(std::move(M));
    }
    return C;
}

} // namespace

TorReport tor_dims_at_point(const CyclicModule& R, const AffinePoint& a, std::size_t cap) {
    std::size_t n = R.nvars();
    TorReport out;
    if (!point_on_variety(R.ideal, a)) {
        out.on_variety = false;
        out.rep.d.assign(n + 1, 0);
        out.rep.index = 0;
        return out;
    }
    Ideal J = translate_ideal(R.ideal, a);
    FreeResolution res = free_resolution(J, cap);
    out.rep = homology_dims(evaluate_resolution_at_origin(res, R.ring()->field));
    out.rep.d.resize(n + 1, 0);
    out.rep.index = alternating_index(out.rep.d);
    return out;
}

HomologyReport koszul_dims_direct_zero_dim(const CyclicModule& R, const AffinePoint& a) {
    const Ideal& I = R.ideal;
    auto sm = standard_monomials(I);
    if (!sm)
        fail(ErrorCode::InfiniteDimensional, "koszul_dims_direct_zero_dim: quotient is infinite-dimensional");
    const RingPtr& ring = I.ring();
    std::size_t n = ring->nvars(), dim = sm->size();
    std::map<Exps, std::size_t> pos;
    for (std::size_t j = 0; j < dim; ++j) pos[(*sm)[j]] = j;

    const auto& gb = I.groebner();
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix M(ring->field, dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            Exps e = (*sm)[j];
            e[i] += 1;
            MultiPoly f = normal_form(MultiPoly::monomial(ring, e, Scalar::one(ring->field)), gb,
                                      MonomialOrder::grevlex());
            for (auto& [te, tc] : f.terms()) M.at(pos.at(te), j) = tc;
        }
        mats.push_back(std::move(M));
    }
    MatrixTuple x(ring->field, dim, std::move(mats));
    return homology_dims(build_koszul(x, a));
}

SamuelTable samuel_values(const CyclicModule& R, const AffinePoint& a, std::uint32_t r_max) {
    if (r_max == 0) fail(ErrorCode::InvalidInput, "samuel_values: r_max must be >= 1");
    if (!point_on_variety(R.ideal, a))
        fail(ErrorCode::PointNotOnVariety, "samuel_values: point is not on the variety");
    SamuelTable table;
    table.point = a;
    Ideal J = translate_ideal(R.ideal, a);
    for (std::uint32_t r = 1; r <= r_max; ++r) {
        auto d = quotient_dim(ideal_power_sum(J, r));
        if (!d) fail(ErrorCode::InfiniteDimensional, "samuel_values: unexpected infinite quotient");
        table.values.push_back(static_cast<long long>(*d));
    }
    try {
        table.fitted = fit_numerical_polynomial(table.values);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotStabilized) throw;
    }
    return table;
}

MultiplicityReport serre_check(const CyclicModule& R, const AffinePoint& a, std::uint32_t r_max) {
    std::size_t n = R.nvars();
    if (r_max == 0) r_max = static_cast<std::uint32_t>(n) + 6;
    SamuelTable table = samuel_values(R, a, r_max);
    if (!table.fitted)
        fail(ErrorCode::NotStabilized, "serre_check: Samuel values did not stabilize; raise r_max");
    MultiplicityReport rep;
    rep.samuel_fit = table.fitted;
    rep.dim_d = krull_dim(R.ideal);
    rep.e = table.fitted->top_difference(n);
    rep.index_at_point = tor_dims_at_point(R, a).rep.index;
    rep.serre_consistent = rep.e + static_cast<long>(rep.index_at_point) == 0;
    return rep;
}

namespace {

/// Multiply-then-truncate action of f on the monomial basis of P/<X>^r.
Matrix truncated_multiplication(const MultiPoly& f, const std::vector<Exps>& basis,
                                const std::map<Exps, std::size_t>& pos, std::uint32_t r) {
    const FieldSpec field = f.ring()->field;
    Matrix M(field, basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (auto& [e, c] : f.terms()) {
            Exps prod = e;
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += basis[j][i];
            if (total_degree(prod) < r) M.at(pos.at(prod), j) += c;
        }
    }
    return M;
}

} // namespace

TorPolyTable tor_polynomial(const CyclicModule& R, const AffinePoint& a, std::uint32_t r_max) {
    if (r_max == 0) fail(ErrorCode::InvalidInput, "tor_polynomial: r_max must be >= 1");
    if (!point_on_variety(R.ideal, a))
        fail(ErrorCode::PointNotOnVariety, "tor_polynomial: point is not on the variety");
    std::size_t n = R.nvars();
    const FieldSpec field = R.ring()->field;
    Ideal J = translate_ideal(R.ideal, a);
    FreeResolution res = free_resolution(J);

    TorPolyTable out;
    for (std::uint32_t r = 1; r <= r_max; ++r) {
        auto basis = monomials_below_degree(n, r);
        std::map<Exps, std::size_t> pos;
        for (std::size_t j = 0; j < basis.size(); ++j) pos[basis[j]] = j;
        std::size_t N = basis.size();

        ChainComplex C;
        C.field = field;
        for (auto rk : res.ranks) C.dims.push_back(rk * N);
        for (auto& map : res.maps) {
            Matrix D(field, map.rows * N, map.cols * N);
            for (std::size_t br = 0; br < map.rows; ++br)
                for (std::size_t bc = 0; bc < map.cols; ++bc) {
                    if (map.at(br, bc).is_zero()) continue;
                    Matrix blk = truncated_multiplication(map.at(br, bc), basis, pos, r);
                    for (std::size_t i = 0; i < N; ++i)
                        for (std::size_t j = 0; j < N; ++j)
                            D.at(br * N + i, bc * N + j) = blk.at(i, j);
                }
            C.diffs.push_back(std::move(D));
        }
        HomologyReport rep = homology_dims(C);
        rep.d.resize(n + 1, 0);
        out.tor_dims.push_back(rep.d);
        long long p = 0;
        for (std::size_t i = 1; i <= n; ++i)
            p += (i % 2 == 1 ? 1 : -1) * static_cast<long long>(rep.d[i]);
        out.p.push_back(p);
    }
    try {
        out.fitted = fit_numerical_polynomial(out.p);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotStabilized) throw;
    }
    return out;
}

long long inflated_index(const CyclicModule& R, const AffinePoint& a, std::uint32_t r) {
    if (r == 0) fail(ErrorCode::InvalidInput, "inflated_index: r must be >= 1");
    if (!point_on_variety(R.ideal, a))
        fail(ErrorCode::PointNotOnVariety, "inflated_index: point is not on the variety");
    Ideal J = translate_ideal(R.ideal, a);
    auto s = quotient_dim(ideal_power_sum(J, r));
    if (!s) fail(ErrorCode::InfiniteDimensional, "inflated_index: unexpected infinite quotient");
    TorPolyTable t = tor_polynomial(R, a, r);
    return -static_cast<long long>(*s) + t.p.back();
}

MinimalGeneratorProfile h1_lower_bound(const std::vector<MultiPoly>& gens, const AffinePoint& a) {
    if (gens.empty()) fail(ErrorCode::InvalidInput, "h1_lower_bound: no generators");
    const RingPtr& ring = gens.front().ring();
    ring->field.require_char_not_two("h1_lower_bound");
    std::size_t n = ring->nvars(), p = gens.size();

    MinimalGeneratorProfile prof;
    prof.m.assign(n, std::vector<std::optional<std::uint32_t>>(p));
    std::vector<std::vector<Scalar>> pure_coeff(
        n, std::vector<Scalar>(p, Scalar::zero(ring->field)));

    for (std::size_t j = 0; j < p; ++j) {
        if (!poly_eval(gens[j], a).is_zero())
            fail(ErrorCode::InvalidInput, "h1_lower_bound: generator does not vanish at the point");
        MultiPoly g = poly_translate(gens[j], a);
        bool any_pure = false;
        for (auto& [e, c] : g.terms()) {
            std::size_t var = n;
            bool pure = true;
            for (std::size_t i = 0; i < n && pure; ++i) {
                if (e[i] == 0) continue;
                if (var == n) var = i;
                else pure = false;
            }
            if (!pure || var == n) continue;  // mixed term or constant
            any_pure = true;
            auto& slot = prof.m[var][j];
            if (!slot || e[var] < *slot) {
                slot = e[var];
                pure_coeff[var][j] = c;
            }
        }
        if (!any_pure)
            fail(ErrorCode::NoStandardRepresentation,
                 "h1_lower_bound: generator has no pure term in any variable");
    }

    prof.m_min.assign(n, std::nullopt);
    prof.S.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < p; ++j)
            if (prof.m[i][j] && (!prof.m_min[i] || *prof.m[i][j] < *prof.m_min[i]))
                prof.m_min[i] = prof.m[i][j];
        if (!prof.m_min[i]) continue;
        for (std::size_t j = 0; j < p; ++j)
            if (prof.m[i][j] && *prof.m[i][j] == *prof.m_min[i]) prof.S[i].push_back(j);
    }

    prof.v = Matrix(ring->field, n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (auto j : prof.S[i]) prof.v.at(i, j) = pure_coeff[i][j];
    prof.t = prof.v.rank();
    return prof;
}

std::size_t jacobian_rank(const std::vector<MultiPoly>& gens, const AffinePoint& a) {
    if (gens.empty()) return 0;
    const RingPtr& ring = gens.front().ring();
    std::size_t n = ring->nvars(), p = gens.size();
    Matrix J(ring->field, n, p);
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t i = 0; i < n; ++i) J.at(i, j) = poly_eval(poly_partial(gens[j], i), a);
    return J.rank();
}

bool point_spectrum_membership(const CyclicModule& R, const AffinePoint& a) {
    const RingPtr& ring = R.ring();
    if (a.dim() != ring->nvars())
        fail(ErrorCode::DimensionMismatch, "point_spectrum_membership: point dimension mismatch");
    std::vector<MultiPoly> max_gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        max_gens.push_back(MultiPoly::variable(ring, i) -
                           MultiPoly::constant(ring, a.coords[i]));
    Ideal quot = ideal_quotient(R.ideal, Ideal(ring, std::move(max_gens)));
    return !ideal_equal(quot, R.ideal);
}

bool cayley_hamilton_d1_check(const CyclicModule& R) {
    const RingPtr& ring = R.ring();
    if (ring->nvars() != 3)
        fail(ErrorCode::InvalidInput, "cayley_hamilton_d1_check: needs exactly 3 variables");
    ring->field.require_char_not_two("cayley_hamilton_d1_check");

    MultiPoly x = MultiPoly::variable(ring, 0);
    MultiPoly y = MultiPoly::variable(ring, 1);
    MultiPoly z = MultiPoly::variable(ring, 2);
    MultiPoly zero = MultiPoly::zero(ring);

    std::vector<std::vector<MultiPoly>> d1{{-y, -z, zero}, {x, zero, -z}, {zero, x, y}};
    MultiPoly c = x * z * Scalar(ring->field, 2) - y * y;

    auto mat_mul = [&](const std::vector<std::vector<MultiPoly>>& A,
                       const std::vector<std::vector<MultiPoly>>& B) {
        std::vector<std::vector<MultiPoly>> C(3, std::vector<MultiPoly>(3, zero));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) C[i][j] = C[i][j] + A[i][k] * B[k][j];
        return C;
    };

    // M = d1^2 + (2xz - y^2) I
    auto M = mat_mul(d1, d1);
    for (int i = 0; i < 3; ++i) M[i][i] = M[i][i] + c;

    // M must equal column(z, -y, x) * row(x, y, z) modulo I.
    MultiPoly col[3] = {z, -y, x};
    MultiPoly row[3] = {x, y, z};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!R.ideal.contains(M[i][j] - col[i] * row[j])) return false;

    // d1 * M must vanish modulo I.
    auto D1M = mat_mul(d1, M);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!R.ideal.contains(D1M[i][j])) return false;
    return true;
}

} // namespace spectra
