#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spectra/linalg.hpp"
#include "spectra/parse.hpp"
#include "spectra/poly.hpp"

using namespace spectra;

namespace {

Scalar rnd_scalar(std::mt19937_64& rng, const FieldSpec& f) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    return Scalar(f, mpq_class(num(rng), den(rng)));
}

Matrix rnd_matrix(std::mt19937_64& rng, const FieldSpec& f, std::size_t r, std::size_t c) {
    Matrix m(f, r, c);
    std::uniform_int_distribution<long> val(-4, 4);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(f, val(rng));
    return m;
}

} // namespace

TEST_CASE("field spec validation") {
    CHECK(FieldSpec::rationals().is_rational());
    CHECK(FieldSpec::prime_field(7).prime == 7);
    CHECK_THROWS_AS(FieldSpec::prime_field(6), Error);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), Error);
    CHECK_THROWS_AS(FieldSpec::prime_field(2).require_char_not_two("here"), Error);
}

TEST_CASE("scalar arithmetic satisfies field axioms") {
    std::mt19937_64 rng(11);
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime_field(13)}) {
        for (int k = 0; k < 50; ++k) {
            Scalar a = rnd_scalar(rng, f), b = rnd_scalar(rng, f), c = rnd_scalar(rng, f);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + Scalar::zero(f) == a);
            CHECK(a * Scalar::one(f) == a);
            CHECK(a - a == Scalar::zero(f));
            if (!a.is_zero()) {
                CHECK(a * a.inv() == Scalar::one(f));
                CHECK(b / a * a == b);
            }
        }
    }
    CHECK_THROWS_AS(Scalar(FieldSpec::rationals(), 1).inv() / Scalar::zero(FieldSpec::rationals()),
                    Error);
}

TEST_CASE("scalar canonical text round trip") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(Scalar::parse(q, "3/6").str() == "1/2");
    CHECK(Scalar::parse(q, "-4/2").str() == "-2");
    CHECK(Scalar::parse(q, "0").is_zero());
    FieldSpec f5 = FieldSpec::prime_field(5);
    CHECK(Scalar::parse(f5, "7").str() == "2");
    CHECK(Scalar::parse(f5, "1/2").str() == "3");  // 2 * 3 = 6 = 1 mod 5
    CHECK_THROWS_AS(Scalar::parse(f5, "1/5"), Error);
}

TEST_CASE("polynomial ring axioms and degree") {
    RingPtr ring = make_ring(FieldSpec::rationals(), {"x", "y"});
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> val(-3, 3);
    std::uniform_int_distribution<std::uint32_t> ex(0, 3);
    auto rnd_poly = [&]() {
        MultiPoly f(ring);
        for (int t = 0; t < 4; ++t) f.add_term({ex(rng), ex(rng)}, Scalar(ring->field, val(rng)));
        return f;
    };
    for (int k = 0; k < 30; ++k) {
        MultiPoly f = rnd_poly(), g = rnd_poly(), h = rnd_poly();
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f - f == MultiPoly::zero(ring));
        if (!f.is_zero() && !g.is_zero()) CHECK((f * g).degree() == f.degree() + g.degree());
    }
}

TEST_CASE("evaluation is a ring morphism and translation shifts the origin") {
    RingPtr ring = make_ring(FieldSpec::rationals(), {"x", "y", "z"});
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> val(-3, 3);
    std::uniform_int_distribution<std::uint32_t> ex(0, 2);
    auto rnd_poly = [&]() {
        MultiPoly f(ring);
        for (int t = 0; t < 5; ++t)
            f.add_term({ex(rng), ex(rng), ex(rng)}, Scalar(ring->field, val(rng)));
        return f;
    };
    for (int k = 0; k < 20; ++k) {
        MultiPoly f = rnd_poly(), g = rnd_poly();
        AffinePoint a{{Scalar(ring->field, val(rng)), Scalar(ring->field, val(rng)),
                       Scalar(ring->field, val(rng))}};
        CHECK(poly_eval(f * g, a) == poly_eval(f, a) * poly_eval(g, a));
        CHECK(poly_eval(f + g, a) == poly_eval(f, a) + poly_eval(g, a));
        // f(X + a) at 0 equals f(a); translating back is the identity.
        CHECK(poly_eval(poly_translate(f, a), origin(ring)) == poly_eval(f, a));
        CHECK(poly_translate(poly_translate(f, a), point_negate(a)) == f);
    }
}

TEST_CASE("partial derivative is linear and Leibniz") {
    RingPtr ring = make_ring(FieldSpec::rationals(), {"x", "y"});
    MultiPoly x = MultiPoly::variable(ring, 0);
    MultiPoly y = MultiPoly::variable(ring, 1);
    MultiPoly f = x * x * y + y;
    MultiPoly g = x * y;
    CHECK(poly_partial(f * g, 0) == poly_partial(f, 0) * g + f * poly_partial(g, 0));
    CHECK(poly_partial(f + g, 1) == poly_partial(f, 1) + poly_partial(g, 1));
    CHECK(poly_partial(f, 0).str() == "2*x*y");
}

TEST_CASE("parser handles precedence, rationals and errors") {
    RingPtr ring = make_ring(FieldSpec::rationals(), {"x", "y"});
    MultiPoly x = MultiPoly::variable(ring, 0);
    MultiPoly y = MultiPoly::variable(ring, 1);
    Scalar half(ring->field, mpq_class(1, 2));
    CHECK(parse_poly("x^2 - y", ring) == x * x - y);
    CHECK(parse_poly("1/2*x + x", ring) == x * half + x);
    CHECK(parse_poly("(x + y)*(x - y)", ring) == x * x - y * y);
    CHECK(parse_poly("-x + 2", ring) == MultiPoly::constant(ring, Scalar(ring->field, 2)) - x);
    CHECK(parse_poly("x*y + y*x", ring) == x * y * Scalar(ring->field, 2));
    CHECK_THROWS_AS(parse_poly("x + ", ring), Error);
    CHECK_THROWS_AS(parse_poly("w + 1", ring), Error);
    CHECK_THROWS_AS(parse_poly("x^0", ring), Error);
    // Printer and parser agree on canonical text.
    MultiPoly f = x * x * y - y * half + MultiPoly::constant(ring, Scalar(ring->field, 3));
    CHECK(parse_poly(f.str(), ring) == f);
}

TEST_CASE("matrix rank, kernel, solve and inverse agree with their definitions") {
    std::mt19937_64 rng(17);
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime_field(11)}) {
        for (int k = 0; k < 25; ++k) {
            std::size_t r = 1 + k % 4, c = 1 + (k / 2) % 4;
            Matrix A = rnd_matrix(rng, f, r, c);
            Matrix K = A.kernel();
            CHECK((A * K).is_zero());
            CHECK(A.rank() + K.cols() == c);
            CHECK(A.rank() == A.transpose().rank());

            auto piv = A.pivot_columns();
            CHECK(piv.size() == A.rank());

            Matrix rhs = A * rnd_matrix(rng, f, c, 2);
            auto sol = A.solve(rhs);
            REQUIRE(sol.has_value());
            CHECK(A * *sol == rhs);
        }
        for (int k = 0; k < 10; ++k) {
            Matrix A = rnd_matrix(rng, f, 3, 3);
            auto inv = A.inverse();
            if (A.rank() == 3) {
                REQUIRE(inv.has_value());
                CHECK(*inv * A == Matrix::identity(f, 3));
                CHECK(A * *inv == Matrix::identity(f, 3));
            } else {
                CHECK(!inv.has_value());
            }
        }
    }
}

TEST_CASE("inconsistent systems are reported") {
    FieldSpec q = FieldSpec::rationals();
    Matrix A(q, 2, 1);
    A.at(0, 0) = Scalar::one(q);
    Matrix b(q, 2, 1);
    b.at(1, 0) = Scalar::one(q);
    CHECK(!A.solve(b).has_value());
}
