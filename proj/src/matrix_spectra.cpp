#include "spectra/matrix_spectra.hpp"

#include <algorithm>

namespace spectra {

bool point_less(const AffinePoint& a, const AffinePoint& b) {
    for (std::size_t i = 0; i < std::min(a.dim(), b.dim()); ++i) {
        int c = cmp(a.coords[i].value(), b.coords[i].value());
        if (c != 0) return c < 0;
    }
    return a.dim() < b.dim();
}

bool SpectrumSet::contains(const AffinePoint& a) const {
    return std::find(points.begin(), points.end(), a) != points.end();
}

namespace {

using UniPoly = std::vector<Scalar>;  // ascending coefficients

Scalar uni_eval(const UniPoly& f, const Scalar& t) {
    Scalar acc = Scalar::zero(t.field());
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * t + f[i];
    return acc;
}

/// Divides f by (z - r); f must vanish at r.
UniPoly uni_deflate(const UniPoly& f, const Scalar& r) {
    UniPoly q(f.size() - 1, Scalar::zero(r.field()));
    Scalar carry = Scalar::zero(r.field());
    for (std::size_t i = f.size(); i-- > 1;) {
        carry = f[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

Matrix hessenberg(Matrix H) {
    std::size_t n = H.rows();
    FieldSpec f = H.field();
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = n;
        for (std::size_t i = j + 1; i < n; ++i)
            if (!H.at(i, j).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(H.at(j + 1, c), H.at(piv, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(H.at(r, j + 1), H.at(r, piv));
        }
        for (std::size_t i = j + 2; i < n; ++i) {
            if (H.at(i, j).is_zero()) continue;
            Scalar fac = H.at(i, j) / H.at(j + 1, j);
            for (std::size_t c = 0; c < n; ++c) H.at(i, c) -= fac * H.at(j + 1, c);
            for (std::size_t r = 0; r < n; ++r) H.at(r, j + 1) += fac * H.at(r, i);
        }
    }
    (void)f;
    return H;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
        }
    }
    return out;
}

/// Roots with multiplicity; nullopt when an irreducible factor of degree
/// >= 2 remains.
std::optional<std::vector<Scalar>> split_roots(UniPoly f, const FieldSpec& field) {
    std::vector<Scalar> roots;
    while (f.size() > 1) {
        bool found = false;
        if (!field.is_rational()) {
            if (field.prime > 100000)
                fail(ErrorCode::InvalidInput, "root search: prime field too large");
            for (std::uint64_t t = 0; t < field.prime && !found; ++t) {
                Scalar s(field, mpq_class(static_cast<unsigned long>(t)));
                if (uni_eval(f, s).is_zero()) {
                    roots.push_back(s);
                    f = uni_deflate(f, s);
                    found = true;
                }
            }
        } else {
            Scalar z = Scalar::zero(field);
            if (f[0].is_zero()) {
                roots.push_back(z);
                f = uni_deflate(f, z);
                continue;
            }
            // Rational root theorem on the integer-scaled polynomial.
            mpz_class den = 1;
            for (auto& c : f) den = lcm(den, c.value().get_den());
            mpz_class a0 = mpq_class(f.front().value() * den).get_num();
            mpz_class an = mpq_class(f.back().value() * den).get_num();
            for (auto& p : positive_divisors(a0)) {
                for (auto& q : positive_divisors(an)) {
                    for (int sign : {1, -1}) {
                        mpq_class cand(sign * p, q);
                        cand.canonicalize();
                        Scalar s(field, cand);
                        if (uni_eval(f, s).is_zero()) {
                            roots.push_back(s);
                            f = uni_deflate(f, s);
                            found = true;
                        }
                        if (found) break;
                    }
                    if (found) break;
                }
                if (found) break;
            }
        }
        if (!found) return std::nullopt;
    }
    return roots;
}

std::vector<AffinePoint> candidate_grid(const MatrixTuple& x) {
    std::vector<std::vector<Scalar>> per;
    for (auto& m : x.mats) per.push_back(eigenvalues(m));
    std::vector<AffinePoint> grid;
    AffinePoint cur;
    cur.coords.resize(x.n, Scalar::zero(x.field));
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == x.n) {
            grid.push_back(cur);
            return;
        }
        for (auto& v : per[i]) {
            cur.coords[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return grid;
}

void sort_points(std::vector<AffinePoint>& pts) {
    std::sort(pts.begin(), pts.end(), point_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

Matrix matrix_pow(const Matrix& a, std::uint32_t e) {
    Matrix r = Matrix::identity(a.field(), a.rows());
    for (std::uint32_t i = 0; i < e; ++i) r = r * a;
    return r;
}

} // namespace

std::vector<Scalar> charpoly(const Matrix& A) {
    if (A.rows() != A.cols())
        fail(ErrorCode::DimensionMismatch, "charpoly: matrix must be square");
    FieldSpec field = A.field();
    std::size_t n = A.rows();
    Matrix H = hessenberg(A);
    std::vector<UniPoly> p(n + 1);
    p[0] = {Scalar::one(field)};
    for (std::size_t k = 1; k <= n; ++k) {
        UniPoly cur(p[k - 1].size() + 1, Scalar::zero(field));
        for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
            cur[i + 1] += p[k - 1][i];
            cur[i] -= H.at(k - 1, k - 1) * p[k - 1][i];
        }
        Scalar subprod = Scalar::one(field);
        for (std::size_t i = 1; i < k; ++i) {
            subprod *= H.at(k - i, k - i - 1);
            Scalar coef = H.at(k - 1 - i, k - 1) * subprod;
            for (std::size_t m = 0; m < p[k - 1 - i].size(); ++m) cur[m] -= coef * p[k - 1 - i][m];
        }
        p[k] = std::move(cur);
    }
    return p[n];
}

std::vector<Scalar> eigenvalues(const Matrix& A) {
    auto roots = split_roots(charpoly(A), A.field());
    if (!roots)
        fail(ErrorCode::SpectrumNotSplit,
             "characteristic polynomial has an irreducible factor of degree >= 2");
    sort(roots->begin(), roots->end(), scalar_less);
    roots->erase(std::unique(roots->begin(), roots->end()), roots->end());
    return *roots;
}

bool taylor_membership(const MatrixTuple& x, const AffinePoint& a) {
    auto rep = homology_dims(build_koszul(x, a));
    for (auto v : rep.d)
        if (v != 0) return true;
    return false;
}

SpectrumSet taylor_spectrum(const MatrixTuple& x) {
    SpectrumSet out;
    if (x.n == 0) {
        if (x.dim > 0) out.points.push_back(AffinePoint{});
        return out;
    }
    for (auto& a : candidate_grid(x))
        if (taylor_membership(x, a)) out.points.push_back(a);
    sort_points(out.points);
    return out;
}

SpectrumSet point_spectrum(const MatrixTuple& x) {
    SpectrumSet out;
    if (x.n == 0) {
        if (x.dim > 0) out.points.push_back(AffinePoint{});
        return out;
    }
    for (auto& a : candidate_grid(x)) {
        Matrix stacked(x.field, x.n * x.dim, x.dim);
        for (std::size_t i = 0; i < x.n; ++i) {
            Matrix s = x.mats[i] - Matrix::identity(x.field, x.dim) * a.coords[i];
            for (std::size_t r = 0; r < x.dim; ++r)
                for (std::size_t c = 0; c < x.dim; ++c) stacked.at(i * x.dim + r, c) = s.at(r, c);
        }
        if (stacked.rank() < x.dim) out.points.push_back(a);
    }
    sort_points(out.points);
    return out;
}

MatrixTuple apply_polynomial_tuple(const MatrixTuple& x, const std::vector<MultiPoly>& q) {
    std::vector<Matrix> mats;
    for (auto& poly : q) {
        if (poly.ring()->nvars() != x.n)
            fail(ErrorCode::DimensionMismatch, "apply_polynomial_tuple: variable count mismatch");
        Matrix m(x.field, x.dim, x.dim);
        for (auto& [e, c] : poly.terms()) {
            Matrix t = Matrix::identity(x.field, x.dim) * c;
            for (std::size_t i = 0; i < x.n; ++i)
                if (e[i] > 0) t = t * matrix_pow(x.mats[i], e[i]);
            m = m + t;
        }
        mats.push_back(std::move(m));
    }
    return MatrixTuple(x.field, x.dim, std::move(mats));
}

CheckReport check_spectral_mapping(const MatrixTuple& x, const std::vector<MultiPoly>& q) {
    CheckReport rep;
    MatrixTuple y = apply_polynomial_tuple(x, q);
    rep.left = taylor_spectrum(y).points;
    for (auto& a : taylor_spectrum(x).points) {
        AffinePoint img;
        for (auto& poly : q) img.coords.push_back(poly_eval(poly, a));
        rep.right.push_back(img);
    }
    sort_points(rep.right);
    rep.ok = rep.left == rep.right;
    if (!rep.ok) rep.note = "spectral mapping sets differ";
    return rep;
}

CheckReport check_projection(const MatrixTuple& x) {
    if (x.n == 0)
        fail(ErrorCode::InvalidInput, "check_projection: needs at least one coordinate");
    CheckReport rep;
    MatrixTuple sub = x.dropped_last();
    rep.left = taylor_spectrum(sub).points;
    for (auto& a : taylor_spectrum(x).points) {
        AffinePoint proj;
        proj.coords.assign(a.coords.begin(), a.coords.end() - 1);
        rep.right.push_back(proj);
    }
    sort_points(rep.right);
    rep.ok = rep.left == rep.right;
    if (x.n == 1)
        rep.note = "projection onto the empty tuple; both sides reduce to nonemptiness";
    else if (!rep.ok)
        rep.note = "projected spectrum differs from the sub-tuple spectrum";
    return rep;
}

namespace {

/// One common eigenvector of a commuting family, with its joint eigenvalue;
/// eigenvalues are taken smallest-first, giving the lexicographically least
/// joint value.
std::pair<Matrix, AffinePoint> common_eigenvector(const std::vector<Matrix>& mats,
                                                  const FieldSpec& field, std::size_t dim) {
    Matrix V = Matrix::identity(field, dim);
    AffinePoint val;
    for (auto& m : mats) {
        auto A = V.solve(m * V);
        if (!A) fail(ErrorCode::InvalidInput, "common_eigenvector: subspace not invariant");
        auto evs = eigenvalues(*A);
        if (evs.empty()) fail(ErrorCode::InvalidInput, "common_eigenvector: empty space");
        Scalar lam = evs.front();
        Matrix K = (*A - Matrix::identity(field, A->rows()) * lam).kernel();
        V = V * K;
        val.coords.push_back(lam);
    }
    return {V.submatrix(0, 0, dim, 1), val};
}

} // namespace

TriangularForm triangularize(const MatrixTuple& x) {
    TriangularForm out;
    out.change = Matrix::identity(x.field, x.dim);
    if (x.dim == 0) return out;

    auto [v, val] = common_eigenvector(x.mats, x.field, x.dim);
    // Extend v to a basis by identity columns.
    Matrix ext = Matrix::hcat(v, Matrix::identity(x.field, x.dim));
    auto piv = ext.pivot_columns();
    Matrix P(x.field, x.dim, x.dim);
    for (std::size_t j = 0; j < x.dim; ++j)
        for (std::size_t r = 0; r < x.dim; ++r) P.at(r, j) = ext.at(r, piv[j]);
    Matrix Pinv = *P.inverse();

    std::vector<Matrix> rest;
    for (auto& m : x.mats) {
        Matrix conj = Pinv * m * P;
        rest.push_back(conj.submatrix(1, 1, x.dim - 1, x.dim - 1));
    }
    TriangularForm sub = triangularize(MatrixTuple(x.field, x.dim - 1, std::move(rest)));

    Matrix embed = Matrix::identity(x.field, x.dim);
    for (std::size_t r = 0; r + 1 < x.dim; ++r)
        for (std::size_t c = 0; c + 1 < x.dim; ++c) embed.at(r + 1, c + 1) = sub.change.at(r, c);
    out.change = P * embed;
    out.diagonal.push_back(val);
    out.diagonal.insert(out.diagonal.end(), sub.diagonal.begin(), sub.diagonal.end());

    // Sanity: the conjugated tuple must be upper triangular.
    Matrix Qinv = *out.change.inverse();
    for (auto& m : x.mats) {
        Matrix tri = Qinv * m * out.change;
        for (std::size_t r = 0; r < x.dim; ++r)
            for (std::size_t c = 0; c < r; ++c)
                if (!tri.at(r, c).is_zero())
                    fail(ErrorCode::InvalidInput, "triangularize: conjugation failed");
    }
    return out;
}

} // namespace spectra
