#include "spectra/verify.hpp"

#include <random>
#include <sstream>

#include "spectra/matrix_spectra.hpp"
#include "spectra/parse.hpp"
#include "spectra/variety.hpp"

namespace spectra {

namespace {

using Rng = std::mt19937_64;

long rand_range(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Matrix random_upper_triangular(Rng& rng, const FieldSpec& field, std::size_t dim) {
    Matrix T(field, dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        T.at(r, r) = Scalar(field, rand_range(rng, -2, 2));
        for (std::size_t c = r + 1; c < dim; ++c) T.at(r, c) = Scalar(field, rand_range(rng, -1, 2));
    }
    return T;
}

/// Commuting split tuple: each coordinate a small polynomial of one common
/// triangular seed.
MatrixTuple random_commuting_tuple(Rng& rng, const FieldSpec& field, std::size_t n,
                                   std::size_t dim) {
    Matrix T = random_upper_triangular(rng, field, dim);
    Matrix T2 = T * T;
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m = Matrix::identity(field, dim) * Scalar(field, rand_range(rng, -2, 2));
        m = m + T * Scalar(field, rand_range(rng, -2, 2));
        m = m + T2 * Scalar(field, rand_range(rng, -1, 1));
        mats.push_back(std::move(m));
    }
    return MatrixTuple(field, dim, std::move(mats));
}

AffinePoint random_point(Rng& rng, const FieldSpec& field, std::size_t n) {
    AffinePoint a;
    for (std::size_t i = 0; i < n; ++i) a.coords.push_back(Scalar(field, rand_range(rng, -1, 2)));
    return a;
}

MultiPoly random_poly(Rng& rng, const RingPtr& ring, std::uint32_t max_deg,
                      std::size_t terms) {
    MultiPoly f(ring);
    std::size_t n = ring->nvars();
    for (std::size_t t = 0; t < terms; ++t) {
        Exps e(n, 0);
        std::uint32_t deg = static_cast<std::uint32_t>(rand_range(rng, 0, max_deg));
        for (std::uint32_t d = 0; d < deg; ++d) e[static_cast<std::size_t>(rand_range(rng, 0, n - 1))] += 1;
        long c = rand_range(rng, -2, 2);
        if (c != 0) f.add_term(e, Scalar(ring->field, c));
    }
    return f;
}

std::string describe_failure(const std::string& what, std::size_t instance) {
    std::ostringstream os;
    os << "instance " << instance << ": " << what;
    return os.str();
}

using Check = bool (*)(Rng&, std::size_t, std::string&);

bool check_smt(Rng& rng, std::size_t, std::string& why) {
    FieldSpec field = FieldSpec::rationals();
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 1, 3));
    std::size_t dim = static_cast<std::size_t>(rand_range(rng, 2, 4));
    MatrixTuple x = random_commuting_tuple(rng, field, n, dim);
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back("t" + std::to_string(i));
    RingPtr ring = make_ring(field, vars);
    std::size_t m = static_cast<std::size_t>(rand_range(rng, 1, 2));
    std::vector<MultiPoly> q;
    for (std::size_t i = 0; i < m; ++i) q.push_back(random_poly(rng, ring, 3, 3));
    CheckReport rep = check_spectral_mapping(x, q);
    if (!rep.ok) why = "spectral mapping sets differ";
    return rep.ok;
}

bool check_projection_suite(Rng& rng, std::size_t, std::string& why) {
    FieldSpec field = FieldSpec::rationals();
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 2, 3));
    std::size_t dim = static_cast<std::size_t>(rand_range(rng, 2, 4));
    MatrixTuple x = random_commuting_tuple(rng, field, n, dim);
    CheckReport rep = check_projection(x);
    if (!rep.ok) why = "projected spectrum differs";
    return rep.ok;
}

/// Permutation taking cone coordinates (C'_q, C'_{q-1} wedge e_n) to the
/// Koszul coordinates of the full tuple.
Matrix cone_basis_map(const FieldSpec& field, std::size_t n, std::size_t dim, std::size_t q) {
    ExteriorBasis full(n, q);
    ExteriorBasis low(n - 1, q);
    ExteriorBasis lower(n - 1, q == 0 ? n : q - 1);  // empty when q == 0
    std::size_t cols = dim * (low.size() + (q == 0 ? 0 : lower.size()));
    Matrix P(field, dim * full.size(), cols);
    std::size_t col_block = 0;
    for (auto& S : low.elements) {
        std::size_t row_block = full.position(S);
        for (std::size_t r = 0; r < dim; ++r)
            P.at(row_block * dim + r, col_block * dim + r) = Scalar::one(field);
        ++col_block;
    }
    if (q > 0)
        for (auto& S : lower.elements) {
            std::vector<std::size_t> ext = S;
            ext.push_back(n - 1);
            std::size_t row_block = full.position(ext);
            for (std::size_t r = 0; r < dim; ++r)
                P.at(row_block * dim + r, col_block * dim + r) = Scalar::one(field);
            ++col_block;
        }
    return P;
}

bool check_cone(Rng& rng, std::size_t, std::string& why) {
    FieldSpec field = FieldSpec::rationals();
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 2, 4));
    std::size_t dim = static_cast<std::size_t>(rand_range(rng, 2, 3));
    MatrixTuple x = random_commuting_tuple(rng, field, n, dim);
    AffinePoint a = random_point(rng, field, n);
    AffinePoint sub_a;
    sub_a.coords.assign(a.coords.begin(), a.coords.end() - 1);

    ChainComplex kos = build_koszul(x, a);
    ChainComplex sub = build_koszul(x.dropped_last(), sub_a);
    Matrix t = x.mats[n - 1] - Matrix::identity(field, dim) * a.coords[n - 1];
    ChainComplex con = cone(t, sub);

    for (std::size_t q = 0; q <= n; ++q) {
        if (kos.dims[q] != con.dims[q]) {
            why = "cone dimensions differ";
            return false;
        }
    }
    for (std::size_t q = 0; q < n; ++q) {
        Matrix Pq = cone_basis_map(field, n, dim, q);
        Matrix Pq1 = cone_basis_map(field, n, dim, q + 1);
        if (!(kos.diffs[q] * Pq1 == Pq * con.diffs[q])) {
            why = "cone differential differs from the Koszul differential";
            return false;
        }
    }
    return true;
}

bool check_les(Rng& rng, std::size_t, std::string& why) {
    FieldSpec field = FieldSpec::rationals();
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 2, 3));
    std::size_t dim = static_cast<std::size_t>(rand_range(rng, 2, 4));
    MatrixTuple x = random_commuting_tuple(rng, field, n, dim);
    AffinePoint a = random_point(rng, field, n);
    AffinePoint sub_a;
    sub_a.coords.assign(a.coords.begin(), a.coords.end() - 1);

    HomologyReport full = homology_dims(build_koszul(x, a));
    ChainComplex sub = build_koszul(x.dropped_last(), sub_a);
    Matrix t = x.mats[n - 1] - Matrix::identity(field, dim) * a.coords[n - 1];

    for (std::size_t p = 0; p <= n; ++p) {
        std::size_t nullity = 0, corank = 0;
        if (p >= 1 && p - 1 <= sub.top_degree()) {
            Matrix act = induced_action(t, sub, p - 1);
            nullity = act.rows() - act.rank();
        }
        if (p <= sub.top_degree()) {
            Matrix act = induced_action(t, sub, p);
            corank = act.rows() - act.rank();
        }
        if (full.d[p] != nullity + corank) {
            why = "dimension law fails at degree " + std::to_string(p);
            return false;
        }
    }
    return true;
}

bool check_annihilation(Rng& rng, std::size_t, std::string& why) {
    FieldSpec field = FieldSpec::rationals();
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 2, 3));
    std::size_t dim = static_cast<std::size_t>(rand_range(rng, 2, 4));
    MatrixTuple x = random_commuting_tuple(rng, field, n, dim);
    AffinePoint a = random_point(rng, field, n);
    ChainComplex kos = build_koszul(x, a);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix t = x.mats[i] - Matrix::identity(field, dim) * a.coords[i];
        for (std::size_t p = 0; p <= n; ++p) {
            Matrix act = induced_action(t, kos, p);
            if (!act.is_zero()) {
                why = "induced action nonzero at degree " + std::to_string(p);
                return false;
            }
        }
    }
    return true;
}

struct GoldenInstance {
    std::vector<std::string> vars;
    std::vector<std::string> gens;
};

std::vector<GoldenInstance> golden_suite() {
    return {
        {{"x"}, {}},
        {{"x", "y"}, {}},
        {{"x", "y", "z"}, {}},
        {{"x"}, {"x"}},
        {{"x", "y"}, {"x", "y"}},
        {{"x", "y", "z"}, {"x", "y", "z"}},
        {{"x", "y"}, {"y - x^2"}},
        {{"x", "y"}, {"y^2 - x^3"}},
        {{"x", "y", "z"}, {"x*y + y*z + z*x"}},
    };
}

CyclicModule golden_module(const GoldenInstance& g);

bool check_serre(Rng&, std::size_t k, std::string& why) {
    auto suite = golden_suite();
    const GoldenInstance& g = suite[k % suite.size()];
    CyclicModule R = golden_module(g);
    MultiplicityReport rep = serre_check(R, origin(R.ring()));
    if (!rep.serre_consistent) why = "index differs from -e";
    return rep.serre_consistent;
}

bool check_dh1(Rng&, std::size_t k, std::string& why) {
    auto suite = golden_suite();
    const GoldenInstance& g = suite[k % suite.size()];
    CyclicModule R = golden_module(g);
    std::size_t n = R.nvars();
    AffinePoint a = origin(R.ring());
    std::uint32_t r_max = 5;

    SamuelTable s = samuel_values(R, a, r_max);
    TorPolyTable t = tor_polynomial(R, a, r_max);
    long long iY = tor_dims_at_point(R, a).rep.index;
    std::size_t d = R.ideal.is_unit() ? 0 : krull_dim(R.ideal);

    for (std::uint32_t r = 1; r <= r_max; ++r) {
        long long expect = d < n ? s.values[r - 1] : 0;
        if (t.p[r - 1] != expect) {
            why = "tor polynomial differs from the Samuel value at r=" + std::to_string(r);
            return false;
        }
        long long infl = -s.values[r - 1] + t.p[r - 1];
        long long scale = static_cast<long long>(binomial(r + n - 1, n));
        if (infl != scale * iY) {
            why = "inflated index differs from the scaled index at r=" + std::to_string(r);
            return false;
        }
    }
    return true;
}

bool check_crosscheck(Rng& rng, std::size_t, std::string& why) {
    FieldSpec field = FieldSpec::rationals();
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 1, 3));
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
    RingPtr ring = make_ring(field, vars);

    // Pure powers keep the quotient finite; perturbations vanish at 0.
    std::vector<MultiPoly> gens;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t e = static_cast<std::uint32_t>(rand_range(rng, 1, 3));
        MultiPoly g = MultiPoly::variable(ring, i, e);
        MultiPoly pert = random_poly(rng, ring, 3, 2);
        MultiPoly dropped(ring);
        for (auto& [ex, c] : pert.terms())
            if (total_degree(ex) > 0) dropped.add_term(ex, c);
        gens.push_back(g + dropped);
    }
    CyclicModule R{Ideal(ring, gens)};
    if (!standard_monomials(R.ideal)) return true;  // perturbation broke finiteness; skip

    AffinePoint a = origin(ring);
    TorReport tor = tor_dims_at_point(R, a);
    HomologyReport direct = koszul_dims_direct_zero_dim(R, a);
    direct.d.resize(n + 1, 0);
    if (tor.rep.d != direct.d) {
        why = "tor dims differ from the direct Koszul dims";
        return false;
    }
    if (tor.rep.index != 0 || direct.index != 0) {
        why = "index nonzero on a finite-dimensional module";
        return false;
    }
    return true;
}

CyclicModule golden_module(const GoldenInstance& g) {
    RingPtr ring = make_ring(FieldSpec::rationals(), g.vars);
    std::vector<MultiPoly> gens;
    for (auto& s : g.gens) gens.push_back(parse_poly(s, ring));
    return CyclicModule{Ideal(ring, std::move(gens))};
}

} // namespace

std::vector<std::string> verify_suite_names() {
    return {"smt", "projection", "cone", "les", "annihilation", "serre", "dh1", "crosscheck"};
}

VerifyResult run_verify_suite(const std::string& name, std::uint64_t seed, std::size_t count) {
    Check fn = nullptr;
    if (name == "smt") fn = check_smt;
    else if (name == "projection") fn = check_projection_suite;
    else if (name == "cone") fn = check_cone;
    else if (name == "les") fn = check_les;
    else if (name == "annihilation") fn = check_annihilation;
    else if (name == "serre") fn = check_serre;
    else if (name == "dh1") fn = check_dh1;
    else if (name == "crosscheck") fn = check_crosscheck;
    else fail(ErrorCode::InvalidInput, "unknown verify suite: " + name);

    VerifyResult res;
    res.suite = name;
    res.seed = seed;
    res.count = count;
    Rng rng(seed);
    for (std::size_t k = 0; k < count; ++k) {
        std::string why;
        bool ok = false;
        try {
            ok = fn(rng, k, why);
        } catch (const Error& e) {
            why = e.what();
        }
        if (ok) ++res.passed;
        else res.failures.push_back(describe_failure(why.empty() ? "failed" : why, k));
    }
    return res;
}

} // namespace spectra
