#include "spectra/koszul.hpp"

#include <algorithm>

#include "spectra/error.hpp"

namespace spectra {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

ExteriorBasis::ExteriorBasis(std::size_t n_, std::size_t p_) : n(n_), p(p_) {
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == p) {
            elements.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    if (p <= n) rec(rec, 0);
}

std::size_t ExteriorBasis::position(const std::vector<std::size_t>& subset) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), subset);
    if (it == elements.end() || *it != subset)
        fail(ErrorCode::InvalidInput, "ExteriorBasis: subset not in basis");
    return static_cast<std::size_t>(it - elements.begin());
}

MatrixTuple::MatrixTuple(FieldSpec f, std::size_t d, std::vector<Matrix> ms)
    : field(f), n(ms.size()), dim(d), mats(std::move(ms)) {
    for (auto& m : mats)
        if (m.rows() != dim || m.cols() != dim)
            fail(ErrorCode::DimensionMismatch, "MatrixTuple: matrices must be dim x dim");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!matrices_commute(mats[i], mats[j]))
                fail(ErrorCode::NonCommutingTuple, "MatrixTuple: matrices do not commute");
}

MatrixTuple MatrixTuple::dropped_last() const {
    if (n == 0) fail(ErrorCode::InvalidInput, "dropped_last: empty tuple");
    return MatrixTuple(field, dim, std::vector<Matrix>(mats.begin(), mats.end() - 1));
}

void ChainComplex::validate() const {
    if (dims.empty()) fail(ErrorCode::InvalidInput, "ChainComplex: no degrees");
    if (diffs.size() + 1 != dims.size())
        fail(ErrorCode::DimensionMismatch, "ChainComplex: need one differential per adjacent pair");
    for (std::size_t p = 0; p < diffs.size(); ++p)
        if (diffs[p].rows() != dims[p] || diffs[p].cols() != dims[p + 1])
            fail(ErrorCode::DimensionMismatch, "ChainComplex: differential shape mismatch");
    for (std::size_t p = 0; p + 1 < diffs.size(); ++p)
        if (!(diffs[p] * diffs[p + 1]).is_zero())
            fail(ErrorCode::InvalidInput, "ChainComplex: composition of differentials is nonzero");
}

ChainComplex build_koszul(const MatrixTuple& x, const AffinePoint& a) {
    if (a.dim() != x.n)
        fail(ErrorCode::DimensionMismatch, "build_koszul: point dimension must match tuple length");
    const std::size_t n = x.n, dim = x.dim;
    ChainComplex C;
    C.field = x.field;

    std::vector<Matrix> shifted;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m = x.mats[i] - Matrix::identity(x.field, dim) * a.coords[i];
        shifted.push_back(std::move(m));
    }

    std::vector<ExteriorBasis> bases;
    for (std::size_t p = 0; p <= n; ++p) {
        bases.emplace_back(n, p);
        C.dims.push_back(dim * bases.back().size());
    }
    for (std::size_t p = 0; p < n; ++p) {
        const ExteriorBasis& src = bases[p + 1];
        const ExteriorBasis& dst = bases[p];
        Matrix D(x.field, C.dims[p], C.dims[p + 1]);
        for (std::size_t j = 0; j < src.size(); ++j) {
            const auto& T = src.elements[j];
            for (std::size_t s = 0; s < T.size(); ++s) {
                std::vector<std::size_t> sub = T;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(s));
                std::size_t i = dst.position(sub);
                bool negative = s % 2 == 1;  // sign (-1)^{s+1} with s 1-based
                const Matrix& blk = shifted[T[s]];
                for (std::size_t r = 0; r < dim; ++r)
                    for (std::size_t c = 0; c < dim; ++c) {
                        Scalar v = blk.at(r, c);
                        if (negative) v = -v;
                        D.at(i * dim + r, j * dim + c) = D.at(i * dim + r, j * dim + c) + v;
                    }
            }
        }
        C.diffs.push_back(std::move(D));
    }
    C.validate();
    return C;
}

HomologyReport homology_dims(const ChainComplex& C) {
    C.validate();
    std::size_t N = C.top_degree();
    std::vector<std::size_t> ranks(N, 0);
    for (std::size_t p = 0; p < N; ++p) ranks[p] = C.diffs[p].rank();
    HomologyReport rep;
    for (std::size_t p = 0; p <= N; ++p) {
        std::size_t r_in = p > 0 ? ranks[p - 1] : 0;  // rank of map out of degree p
        std::size_t r_out = p < N ? ranks[p] : 0;     // rank of map into degree p
        rep.d.push_back(C.dims[p] - r_in - r_out);
    }
    for (std::size_t p = 0; p <= N; ++p) {
        long long v = static_cast<long long>(rep.d[p]);
        rep.index += (p % 2 == 0) ? -v : v;
    }
    return rep;
}

namespace {

Matrix block_diag(const Matrix& t, std::size_t blocks) {
    std::size_t m = t.rows();
    Matrix out(t.field(), m * blocks, m * blocks);
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) out.at(b * m + r, b * m + c) = t.at(r, c);
    return out;
}

Matrix degree_action(const Matrix& t, const ChainComplex& C, std::size_t p) {
    std::size_t m = t.rows();
    if (m == 0 || t.cols() != m || C.dims[p] % m != 0)
        fail(ErrorCode::DimensionMismatch, "cone: endomorphism does not divide the degrees");
    return block_diag(t, C.dims[p] / m);
}

void check_commutes(const Matrix& t, const ChainComplex& C) {
    for (std::size_t p = 0; p < C.diffs.size(); ++p) {
        Matrix lhs = C.diffs[p] * degree_action(t, C, p + 1);
        Matrix rhs = degree_action(t, C, p) * C.diffs[p];
        if (!(lhs == rhs))
            fail(ErrorCode::NonCommutingTuple, "endomorphism does not commute with differentials");
    }
}

} // namespace

ChainComplex cone(const Matrix& t, const ChainComplex& C) {
    C.validate();
    check_commutes(t, C);
    std::size_t N = C.top_degree();
    ChainComplex out;
    out.field = C.field;
    auto cdim = [&](std::size_t q) -> std::size_t { return q <= N ? C.dims[q] : 0; };
    for (std::size_t q = 0; q <= N + 1; ++q)
        out.dims.push_back(cdim(q) + (q > 0 ? cdim(q - 1) : 0));
    for (std::size_t q = 0; q <= N; ++q) {
        Matrix D(C.field, out.dims[q], out.dims[q + 1]);
        std::size_t row1 = cdim(q);                       // C_q rows, then C_{q-1} rows
        std::size_t col1 = cdim(q + 1);                   // C_{q+1} cols, then C_q cols
        if (q < N) {
            const Matrix& d = C.diffs[q];
            for (std::size_t r = 0; r < d.rows(); ++r)
                for (std::size_t c = 0; c < d.cols(); ++c) D.at(r, c) = d.at(r, c);
        }
        Matrix tq = degree_action(t, C, q);
        for (std::size_t r = 0; r < row1; ++r)
            for (std::size_t c = 0; c < row1; ++c) {
                Scalar v = tq.at(r, c);
                if (q % 2 == 1) v = -v;
                D.at(r, col1 + c) = v;
            }
        if (q >= 1) {
            const Matrix& d = C.diffs[q - 1];
            for (std::size_t r = 0; r < d.rows(); ++r)
                for (std::size_t c = 0; c < d.cols(); ++c) D.at(row1 + r, col1 + c) = d.at(r, c);
        }
        out.diffs.push_back(std::move(D));
    }
    out.validate();
    return out;
}

Matrix induced_action(const Matrix& t, const ChainComplex& C, std::size_t p) {
    C.validate();
    check_commutes(t, C);
    if (p > C.top_degree()) fail(ErrorCode::InvalidInput, "induced_action: degree out of range");
    std::size_t N = C.top_degree();
    std::size_t dp = C.dims[p];

    Matrix cycles = p == 0 ? Matrix::identity(C.field, dp) : C.diffs[p - 1].kernel();
    Matrix bound = p < N ? C.diffs[p] : Matrix(C.field, dp, 0);
    auto piv = bound.pivot_columns();
    Matrix im(C.field, dp, piv.size());
    for (std::size_t j = 0; j < piv.size(); ++j)
        for (std::size_t r = 0; r < dp; ++r) im.at(r, j) = bound.at(r, piv[j]);

    Matrix span = Matrix::hcat(im, cycles);
    auto span_piv = span.pivot_columns();
    std::vector<std::size_t> hom_cols;
    for (auto c : span_piv)
        if (c >= im.cols()) hom_cols.push_back(c - im.cols());
    Matrix hom(C.field, dp, hom_cols.size());
    for (std::size_t j = 0; j < hom_cols.size(); ++j)
        for (std::size_t r = 0; r < dp; ++r) hom.at(r, j) = cycles.at(r, hom_cols[j]);

    Matrix tp = degree_action(t, C, p);
    Matrix U = Matrix::hcat(im, hom);
    auto sol = U.solve(tp * hom);
    if (!sol)
        fail(ErrorCode::InvalidInput, "induced_action: image is not a cycle");
    return sol->submatrix(im.cols(), 0, hom.cols(), hom.cols());
}

std::vector<std::size_t> dimension_inflate(const std::vector<std::size_t>& d,
                                           std::size_t from, std::size_t to) {
    if (from > to) fail(ErrorCode::InvalidInput, "dimension_inflate: source exceeds target");
    if (d.size() != from + 1)
        fail(ErrorCode::DimensionMismatch, "dimension_inflate: tuple length must be from+1");
    std::vector<std::size_t> cur = d;
    for (std::size_t m = from; m < to; ++m) {
        std::vector<std::size_t> next;
        next.push_back(cur.front());
        for (std::size_t i = 1; i < cur.size(); ++i) next.push_back(cur[i - 1] + cur[i]);
        next.push_back(cur.back());
        cur = std::move(next);
    }
    return cur;
}

} // namespace spectra
