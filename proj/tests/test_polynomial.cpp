#include <doctest.h>

#include <random>

#include "homlin/polynomial.hpp"
#include "homlin/series.hpp"

using namespace homlin;

TEST_CASE("polynomial basics") {
    IntPolynomial p{-1, 3, -3, 1}; // t^3 - 3t^2 + 3t - 1
    CHECK(p.degree() == 3);
    CHECK(p.coeff(0) == -1);
    CHECK(p.coeff(7) == 0);
    CHECK(p.eval(Int(1)) == 0);
    CHECK(p.eval(Int(-1)) == -8);
    CHECK(p.to_string() == "t^3 - 3t^2 + 3t - 1");
    CHECK(IntPolynomial{}.to_string() == "0");
    CHECK(IntPolynomial{0, 0}.degree() == -1); // normalization

    IntPolynomial t = IntPolynomial::t();
    CHECK((t - 1) * (t - 1) * (t - 1) == p);
}

TEST_CASE("shift variable") {
    IntPolynomial t = IntPolynomial::t();
    IntPolynomial sq = t * t;
    CHECK(sq.shift_variable(1) == IntPolynomial{1, 2, 1});
    CHECK(sq.shift_variable(-2) == IntPolynomial{4, -4, 1});
    CHECK(IntPolynomial{}.shift_variable(5) == IntPolynomial{});
}

TEST_CASE("exact division by monic divisors") {
    IntPolynomial t = IntPolynomial::t();
    IntPolynomial cube = (t - 1) * (t - 1) * (t - 1);
    auto q = cube.divide_exact(t - 1);
    REQUIRE(q.has_value());
    CHECK(*q == (t - 1) * (t - 1));
    CHECK_FALSE(cube.divide_exact(t - 2).has_value());
    CHECK_FALSE((cube + IntPolynomial(1)).divide_exact(t - 1).has_value());
    CHECK_THROWS_AS((void)cube.divide_exact(IntPolynomial{1, 2}), ParameterError);
}

TEST_CASE("decimal string round trip") {
    IntPolynomial p{0, -17, 155};
    auto strs = p.to_decimal_strings();
    CHECK(strs == std::vector<std::string>{"0", "-17", "155"});
    CHECK(IntPolynomial::from_decimal_strings(strs) == p);
}

TEST_CASE("falling factorials") {
    IntPolynomial t = IntPolynomial::t();
    CHECK(falling(t - 1, 2) == (t - 1) * (t - 2));
    CHECK(falling_m(t - 1, 1, 7) == t - 1);
    CHECK(falling(Int(5), 3) == 60);
    CHECK(falling_m(Int(7), 3, 2) == 7 * 5 * 3);
    // specialization (a)_{n,1} = (a)_n
    for (int n = 0; n <= 4; ++n) CHECK(falling_m(t - 3, n, 1) == falling(t - 3, n));
}

TEST_CASE("series arithmetic properties") {
    std::mt19937 rng(7);
    auto random_series = [&](bool unit) {
        IntSeries s(6);
        for (int k = 0; k <= 6; ++k) s.coeff(k) = Int(static_cast<int>(rng() % 11) - 5);
        if (unit) s.coeff(0) = 1;
        return s;
    };
    for (int rep = 0; rep < 50; ++rep) {
        IntSeries f = random_series(false), g = random_series(false), h = random_series(false);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);
        IntSeries u = random_series(true);
        CHECK(u * u.inverse() == IntSeries::one(6));
        CHECK((f * u) * u.inverse() == f); // division undoes multiplication
    }
    IntSeries bad(3);
    bad.coeff(0) = 2;
    CHECK_THROWS_AS((void)bad.inverse(), DomainError);
}

TEST_CASE("polynomial-coefficient series") {
    PolySeries s = rhs_char_series(1, 3);
    CHECK(s.coeff(1) == IntPolynomial{-1, 1});
    CHECK(s.coeff(2) == IntPolynomial{-1, 3, -3, 1});
    IntSeries at1 = evaluate_at(s, 1);
    for (int k = 1; k <= 3; ++k) CHECK(at1.coeff(k) == 0); // chi(1) = 0
}

TEST_CASE("bd and bbd series match the tables") {
    IntSeries bd = rhs_bd(6);
    CHECK(bd.coeff(1) == 2);
    CHECK(bd.coeff(2) == 8);
    CHECK(bd.coeff(3) == 56);
    CHECK(bd.coeff(4) == 608);
    CHECK(bd.coeff(5) == 9440);
    CHECK(bd.coeff(6) == 198272);

    IntSeries bbd = rhs_bbd(3);
    CHECK(bbd.coeff(1) == 2);
    CHECK(bbd.coeff(2) == 12); // -12 + 24 from the first two summands
    CHECK(bbd.coeff(3) == 168);
}

TEST_CASE("char series specializations") {
    PolySeries c1 = rhs_char_series(1, 5);
    IntSeries at0 = evaluate_at(c1, 0);
    const long g[] = {0, 1, 1, 3, 17, 155};
    for (int n = 1; n <= 5; ++n) CHECK(at0.coeff(n) == -g[n]);
    IntSeries atm1 = evaluate_at(c1, -1);
    IntSeries bd = rhs_bd(5);
    for (int n = 1; n <= 5; ++n) CHECK(atm1.coeff(n) == -bd.coeff(n));

    PolySeries c2 = rhs_char_series(2, 5);
    IntSeries bbd = rhs_bbd(5);
    IntSeries c2m1 = evaluate_at(c2, -1);
    for (int n = 1; n <= 5; ++n) CHECK(c2m1.coeff(n) == -bbd.coeff(n));
}
