#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spectra/koszul.hpp"

using namespace spectra;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Matrix diag(const std::vector<long>& d) {
    Matrix m(Q, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = Scalar(Q, d[i]);
    return m;
}

Matrix jordan2() {
    Matrix j(Q, 2, 2);
    j.at(0, 1) = Scalar::one(Q);
    return j;
}

AffinePoint zero_point(std::size_t n) {
    return AffinePoint{std::vector<Scalar>(n, Scalar::zero(Q))};
}

MatrixTuple random_commuting(std::mt19937_64& rng, std::size_t n, std::size_t dim) {
    std::uniform_int_distribution<long> val(-2, 2);
    Matrix seed(Q, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) seed.at(i, j) = Scalar(Q, val(rng));
    Matrix seed2 = seed * seed;
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m = Matrix::identity(Q, dim) * Scalar(Q, val(rng));
        m = m + seed * Scalar(Q, val(rng)) + seed2 * Scalar(Q, val(rng));
        mats.push_back(m);
    }
    return MatrixTuple(Q, dim, std::move(mats));
}

std::size_t nullity(const Matrix& m) { return m.cols() - m.rank(); }
std::size_t corank(const Matrix& m) { return m.rows() - m.rank(); }

} // namespace

TEST_CASE("binomial coefficients satisfy the Pascal recurrence") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 7) == 0);
    for (std::uint64_t n = 1; n < 12; ++n)
        for (std::uint64_t k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("exterior basis enumerates increasing subsets with a consistent position map") {
    for (std::size_t n = 0; n <= 5; ++n) {
        for (std::size_t p = 0; p <= n; ++p) {
            ExteriorBasis B(n, p);
            CHECK(B.size() == binomial(n, p));
            for (std::size_t i = 0; i < B.size(); ++i) {
                const auto& s = B.elements[i];
                CHECK(s.size() == p);
                for (std::size_t j = 0; j + 1 < s.size(); ++j) CHECK(s[j] < s[j + 1]);
                CHECK(B.position(s) == i);
                if (i > 0) CHECK(B.elements[i - 1] < s);
            }
        }
    }
}

TEST_CASE("non-commuting tuples are rejected") {
    Matrix a = jordan2();
    Matrix b = a.transpose();
    CHECK(!matrices_commute(a, b));
    CHECK_THROWS_AS(MatrixTuple(Q, 2, std::vector<Matrix>{a, b}), Error);
    try {
        MatrixTuple(Q, 2, std::vector<Matrix>{a, b});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonCommutingTuple);
    }
}

TEST_CASE("Koszul complex shapes and the zero operator in one variable") {
    MatrixTuple x(Q, 1, {Matrix(Q, 1, 1)});
    ChainComplex C = build_koszul(x, zero_point(1));
    C.validate();
    CHECK(C.dims == std::vector<std::size_t>{1, 1});
    HomologyReport h = homology_dims(C);
    CHECK(h.d == std::vector<std::size_t>{1, 1});
    CHECK(h.index == 0);
}

TEST_CASE("scalar tuples: full homology at the point, none elsewhere") {
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        std::vector<Matrix> mats;
        std::vector<Scalar> coords;
        for (std::size_t i = 0; i < n; ++i) {
            mats.push_back(Matrix::identity(Q, 2) * Scalar(Q, static_cast<long>(i + 1)));
            coords.push_back(Scalar(Q, static_cast<long>(i + 1)));
        }
        MatrixTuple x(Q, 2, mats);
        HomologyReport at = homology_dims(build_koszul(x, AffinePoint{coords}));
        for (std::size_t j = 0; j <= n; ++j) CHECK(at.d[j] == 2 * binomial(n, j));
        CHECK(at.index == 0);
        HomologyReport off = homology_dims(build_koszul(x, zero_point(n)));
        for (auto v : off.d) CHECK(v == 0);
    }
}

TEST_CASE("diagonal pair golden value") {
    MatrixTuple x(Q, 2, {diag({0, 1}), diag({0, 2})});
    ChainComplex C = build_koszul(x, zero_point(2));
    C.validate();
    HomologyReport h = homology_dims(C);
    CHECK(h.d == std::vector<std::size_t>{1, 2, 1});
    CHECK(h.index == 0);
}

TEST_CASE("homology Euler characteristic of a matrix Koszul complex vanishes") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 10; ++k) {
        MatrixTuple x = random_commuting(rng, 1 + k % 3, 2 + k % 3);
        ChainComplex C = build_koszul(x, zero_point(x.n));
        C.validate();
        HomologyReport h = homology_dims(C);
        long long euler = 0;
        int sign = 1;
        for (auto v : h.d) {
            euler += sign * static_cast<long long>(v);
            sign = -sign;
        }
        CHECK(euler == 0);
        CHECK(h.index == 0);
    }
}

TEST_CASE("cone of the zero map doubles homology with a degree shift") {
    std::mt19937_64 rng(19);
    MatrixTuple x = random_commuting(rng, 2, 3);
    ChainComplex C = build_koszul(x, zero_point(2));
    ChainComplex D = cone(Matrix(Q, 3, 3), C);
    D.validate();
    HomologyReport hc = homology_dims(C);
    HomologyReport hd = homology_dims(D);
    REQUIRE(hd.d.size() == hc.d.size() + 1);
    for (std::size_t p = 0; p < hd.d.size(); ++p) {
        std::size_t expect = (p < hc.d.size() ? hc.d[p] : 0) + (p > 0 ? hc.d[p - 1] : 0);
        CHECK(hd.d[p] == expect);
    }
}

TEST_CASE("cone over the last operator matches the full Koszul complex") {
    std::mt19937_64 rng(29);
    for (int k = 0; k < 6; ++k) {
        MatrixTuple x = random_commuting(rng, 2 + k % 2, 3);
        AffinePoint a = zero_point(x.n);
        ChainComplex full = build_koszul(x, a);
        MatrixTuple head = x.dropped_last();
        AffinePoint ahead{std::vector<Scalar>(a.coords.begin(), a.coords.end() - 1)};
        ChainComplex coned = cone(x.mats.back(), build_koszul(head, ahead));
        coned.validate();
        CHECK(homology_dims(coned).d == homology_dims(full).d);
    }
}

TEST_CASE("induced action of identity, zero and tuple members") {
    MatrixTuple x(Q, 2, {diag({0, 1}), diag({0, 2})});
    ChainComplex C = build_koszul(x, zero_point(2));
    HomologyReport h = homology_dims(C);
    for (std::size_t p = 0; p <= 2; ++p) {
        Matrix id = induced_action(Matrix::identity(Q, 2), C, p);
        CHECK(id == Matrix::identity(Q, h.d[p]));
        CHECK(induced_action(Matrix(Q, 2, 2), C, p).is_zero());
        // Members of the translated tuple annihilate their own homology.
        CHECK(induced_action(x.mats[0], C, p).is_zero());
        CHECK(induced_action(x.mats[1], C, p).is_zero());
    }
}

TEST_CASE("long exact sequence dimension law on the diagonal pair") {
    MatrixTuple x(Q, 2, {diag({0, 1}), diag({0, 2})});
    ChainComplex full = build_koszul(x, zero_point(2));
    ChainComplex head = build_koszul(x.dropped_last(), zero_point(1));
    HomologyReport hx = homology_dims(full);
    HomologyReport hh = homology_dims(head);
    const Matrix& t = x.mats[1];
    for (std::size_t p = 0; p < hx.d.size(); ++p) {
        std::size_t expect = 0;
        if (p > 0 && p - 1 < hh.d.size()) expect += nullity(induced_action(t, head, p - 1));
        if (p < hh.d.size()) expect += corank(induced_action(t, head, p));
        CHECK(hx.d[p] == expect);
    }
}

TEST_CASE("dimension inflation follows the Pascal pattern") {
    CHECK(dimension_inflate({1, 1}, 1, 1) == std::vector<std::size_t>{1, 1});
    CHECK(dimension_inflate({1, 1}, 1, 2) == std::vector<std::size_t>{1, 2, 1});
    CHECK(dimension_inflate({1, 1}, 1, 3) == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(dimension_inflate({1, 0}, 1, 3) == std::vector<std::size_t>{1, 2, 1, 0});
    CHECK(dimension_inflate({2, 5, 3}, 2, 3) == std::vector<std::size_t>{2, 7, 8, 3});
}

TEST_CASE("appending a dependent coordinate inflates homology dimensions") {
    Matrix y = jordan2();
    HomologyReport base =
        homology_dims(build_koszul(MatrixTuple(Q, 2, {y}), zero_point(1)));
    CHECK(base.d == std::vector<std::size_t>{1, 1});
    // z = (y, y) and z = (y, y^2): both extra coordinates vanish with y.
    for (Matrix second : {y, y * y}) {
        MatrixTuple z(Q, 2, {y, second});
        HomologyReport h = homology_dims(build_koszul(z, zero_point(2)));
        CHECK(h.d == dimension_inflate(base.d, 1, 2));
    }
}
