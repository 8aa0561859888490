#include "ncq/any_matrix.hpp"
#include "ncq/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace ncq;

namespace {

Matrix<Rational> rmat(std::mt19937_64& rng, std::size_t n, int m = 3) {
    Matrix<Rational> a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(static_cast<long>(rng() % (2 * m + 1)) - m);
    return a;
}

Eisenstein eis(long a, long b) { return {Rational(a), Rational(b)}; }

Rational frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("rational text round trip") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("+2/6") == Rational(1, 3));
    CHECK(to_string(frac(-3, 9)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
}

TEST_CASE("eisenstein arithmetic") {
    const Eisenstein w = Eisenstein::omega();
    CHECK(w * w == eis(-1, -1));
    CHECK(w * w * w == Eisenstein(1));
    CHECK(Eisenstein(1) + w + w * w == Eisenstein(0));
    // (1 + 2w)(3 - w) = 3 - w + 6w - 2w^2 = 3 + 5w + 2 + 2w = 5 + 7w
    CHECK(eis(1, 2) * eis(3, -1) == eis(5, 7));
    CHECK(eis(2, 3).norm() == Rational(4 - 6 + 9));
    CHECK(eis(2, 3) * eis(2, 3).inverse() == Eisenstein(1));
    CHECK(eis(2, 3) / eis(2, 3) == Eisenstein(1));
    CHECK_THROWS_AS(Eisenstein(0).inverse(), Singular);
    auto z = eis(1, 1).to_complex();
    CHECK(std::abs(z - std::complex<double>(0.5, std::sqrt(3.0) / 2)) < 1e-15);
}

TEST_CASE("field axioms hold exactly in Q(w)") {
    std::mt19937_64 rng(5);
    auto draw = [&] {
        auto r = [&] { return frac(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4)); };
        return Eisenstein(r(), r());
    };
    for (int t = 0; t < 200; ++t) {
        auto a = draw(), b = draw(), c = draw();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Eisenstein(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Eisenstein(1));
    }
}

TEST_CASE("eisenstein text form") {
    CHECK(parse_eisenstein("1/2+3/4*w") == Eisenstein(Rational(1, 2), Rational(3, 4)));
    CHECK(parse_eisenstein("-1/2-w") == Eisenstein(Rational(-1, 2), Rational(-1)));
    CHECK(parse_eisenstein("w") == Eisenstein::omega());
    CHECK(parse_eisenstein("-2*w") == eis(0, -2));
    CHECK(parse_eisenstein("5") == eis(5, 0));
    for (auto x : {eis(3, -4), eis(0, 1), eis(-2, 0), Eisenstein(Rational(1, 3), Rational(-5, 7))})
        CHECK(parse_eisenstein(to_string(x)) == x);
    CHECK(to_string(Eisenstein(Rational(1, 2), Rational(-3, 4))) == "1/2-3/4*w");
    CHECK_THROWS_AS(parse_eisenstein("1+x*w"), ParseError);
}

TEST_CASE("complex text form") {
    CHECK(parse_complex("(1.5,-2)") == Complex(1.5, -2));
    CHECK(parse_complex("0.25") == Complex(0.25, 0));
    Complex z(0.1, -1.0 / 3);
    CHECK(parse_complex(to_string(z)) == z);
    CHECK_THROWS_AS(parse_complex("(1;2)"), ParseError);
}

TEST_CASE("2x2 rational inverse") {
    Matrix<Rational> a{{1, 2}, {3, 4}};
    Matrix<Rational> expect{{-2, 1}, {Rational(3, 2), Rational(-1, 2)}};
    CHECK(inverse(a) == expect);
}

TEST_CASE("singular matrices are rejected") {
    Matrix<Rational> a{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(inverse(a), Singular);
    Matrix<Complex> c{{1, 2}, {2, 4 + 1e-15}};
    CHECK_THROWS_AS(inverse(c), Singular);
    CHECK_THROWS_AS(inverse(Matrix<Rational>::zero(3)), Singular);
}

TEST_CASE("dimension and kind mismatches") {
    CHECK_THROWS_AS(Matrix<Rational>::identity(2) + Matrix<Rational>::identity(3), DimensionMismatch);
    CHECK_THROWS_AS(Matrix<Rational>::identity(2) * Matrix<Rational>::identity(3), DimensionMismatch);
    AnyMatrix a = Matrix<Rational>::identity(2);
    AnyMatrix b = Matrix<Complex>::identity(2);
    CHECK_THROWS_AS(add(a, b), KindMismatch);
    CHECK_THROWS_AS(multiply(a, b), KindMismatch);
    CHECK(std::get<Matrix<Rational>>(add(a, a)) == Matrix<Rational>::scalar(2, 2));
}

TEST_CASE("inverse is two-sided over Q and Q(w)") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int t = 0; t < 25; ++t) {
            auto a = rmat(rng, n);
            try {
                auto ai = inverse(a);
                CHECK(a * ai == Matrix<Rational>::identity(n));
                CHECK(ai * a == Matrix<Rational>::identity(n));
            } catch (const Singular&) {
            }
        }
    Matrix<Eisenstein> e{{eis(1, 1), eis(0, 2)}, {eis(3, 0), eis(-1, 1)}};
    CHECK(e * inverse(e) == Matrix<Eisenstein>::identity(2));
}

TEST_CASE("matrix ring laws and noncommutativity") {
    std::mt19937_64 rng(3);
    bool saw_noncommuting = false;
    for (int t = 0; t < 30; ++t) {
        auto a = rmat(rng, 3), b = rmat(rng, 3), c = rmat(rng, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
        CHECK(a + Rational(2) == a + Matrix<Rational>::scalar(3, 2));
        saw_noncommuting = saw_noncommuting || !(a * b == b * a);
    }
    CHECK(saw_noncommuting);
}

TEST_CASE("frobenius norm is submultiplicative") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 50; ++t) {
        Matrix<Complex> a(3), b(3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                a(i, j) = {u(rng), u(rng)};
                b(i, j) = {u(rng), u(rng)};
            }
        CHECK(frobenius_norm(a * b) <= frobenius_norm(a) * frobenius_norm(b) + 1e-12);
    }
    CHECK(frobenius_norm(Matrix<Rational>::identity(4)) == doctest::Approx(2.0));
}

TEST_CASE("complex inverse with pivoting") {
    Matrix<Complex> a{{1e-3, 1}, {1, 1}};
    auto ai = inverse(a);
    CHECK(frobenius_norm(a * ai - Matrix<Complex>::identity(2)) < 1e-14);
}

TEST_CASE("matrix JSON round trip") {
    Matrix<Rational> r{{Rational(1, 2), 0}, {-3, Rational(7, 5)}};
    auto j = to_json(AnyMatrix(r));
    CHECK(j["kind"] == "rational");
    CHECK(j["dim"] == 2);
    CHECK(j["entries"][0][0] == "1/2");
    CHECK(std::get<Matrix<Rational>>(matrix_from_json(j)) == r);

    Matrix<Eisenstein> e{{Eisenstein::omega(), 1}, {0, eis(2, -1)}};
    CHECK(std::get<Matrix<Eisenstein>>(matrix_from_json(to_json(AnyMatrix(e)))) == e);

    Matrix<Complex> c{{Complex(0.5, 1), 0}, {0, Complex(-1, 0.25)}};
    CHECK(std::get<Matrix<Complex>>(matrix_from_json(to_json(AnyMatrix(c)))) == c);

    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"kind":"rational","dim":2,"entries":[["1"]]})")),
                    DimensionMismatch);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"kind":"real","entries":[["1"]]})")), ParseError);
    CHECK_THROWS_AS(matrix_from_json_as<Complex>(to_json(AnyMatrix(r))), KindMismatch);
}

TEST_CASE("JSON syntax errors report line and column") {
    try {
        parse_json_text("{\n  \"a\": 1,\n  \"b\": ]\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 8);
    }
}
