#include <doctest.h>

#include <sstream>

#include "homlin/arrangement.hpp"

using namespace homlin;

TEST_CASE("family constructors") {
    SymbolicArrangement braid3 = make_arrangement(ArrFamily::braid, 3);
    CHECK(braid3.dim == 3);
    CHECK(braid3.hyperplanes.size() == 3);

    SymbolicArrangement hl2 = make_arrangement(ArrFamily::homogenized_linial, 2);
    CHECK(hl2.dim == 6);
    CHECK(hl2.hyperplanes.size() == 3); // pairs over [3]

    SymbolicArrangement tb2 = make_arrangement(ArrFamily::typeB_homogenized, 2);
    CHECK(tb2.dim == 4);
    REQUIRE(tb2.hyperplanes.size() == 4); // x1 -+ x2 = y1, x1 = y1, x2 = y2
    RationalArrangement rb2 = to_rational(tb2);
    CHECK(rb2.hyperplanes[0].normal == std::vector<Rat>{1, -1, -1, 0});
    CHECK(rb2.hyperplanes[1].normal == std::vector<Rat>{1, 1, -1, 0});
    CHECK(rb2.hyperplanes[2].normal == std::vector<Rat>{1, 0, -1, 0});
    CHECK(rb2.hyperplanes[3].normal == std::vector<Rat>{0, 1, 0, -1});

    // the m = 2 Dowling arrangement is the type B arrangement
    RationalArrangement dow2 = to_rational(make_arrangement(ArrFamily::dowling_homogenized, 2, 2));
    REQUIRE(dow2.hyperplanes.size() == rb2.hyperplanes.size());
    for (size_t i = 0; i < dow2.hyperplanes.size(); ++i) {
        CHECK(dow2.hyperplanes[i].normal == rb2.hyperplanes[i].normal);
        CHECK(dow2.hyperplanes[i].constant == rb2.hyperplanes[i].constant);
    }

    CHECK_THROWS_AS(to_rational(make_arrangement(ArrFamily::dowling_homogenized, 2, 3)),
                    ParameterError);
}

TEST_CASE("arrangement file format round trip") {
    SymbolicArrangement arr = make_arrangement(ArrFamily::dowling_homogenized, 2, 3);
    std::string text = write_arrangement(arr);
    CHECK(text.find("-w^1") != std::string::npos);
    std::istringstream in(text);
    SymbolicArrangement back = parse_arrangement(in, 3);
    REQUIRE(back.hyperplanes.size() == arr.hyperplanes.size());
    CHECK(back.dim == arr.dim);
    for (size_t i = 0; i < arr.hyperplanes.size(); ++i)
        CHECK(back.hyperplanes[i].normal == arr.hyperplanes[i].normal);

    std::istringstream custom("1/2 -w^2 | -3/4\n");
    SymbolicArrangement c = parse_arrangement(custom, 4);
    CHECK(c.dim == 2);
    CHECK(c.hyperplanes[0].normal[0].rat == Rat(1, 2));
    CHECK(c.hyperplanes[0].normal[1].omega_pow == 2);
    CHECK(c.hyperplanes[0].normal[1].rat == -1);
    CHECK(c.hyperplanes[0].constant.rat == Rat(-3, 4));

    std::istringstream junk("1 2 3\n");
    CHECK_THROWS_AS((void)parse_arrangement(junk, 1), ParameterError);
}

TEST_CASE("intersection poset of the braid arrangement") {
    FlatPoset fp = intersection_poset(to_rational(make_arrangement(ArrFamily::braid, 3)));
    CHECK(fp.poset.size() == 5); // Pi_3
    CHECK(fp.poset.length() == 2);
    CHECK(fp.poset.characteristic_polynomial() == IntPolynomial{2, -3, 1});
    for (int idx : fp.hyperplane_flat) CHECK(fp.poset.rank(idx) == 1);
}

TEST_CASE("intersection poset of the homogenized Linial arrangement") {
    FlatPoset fp =
        intersection_poset(to_rational(make_arrangement(ArrFamily::homogenized_linial, 2)));
    CHECK(fp.poset.size() == 8);
    CHECK(fp.poset.characteristic_polynomial() == IntPolynomial{-1, 3, -3, 1});
}

TEST_CASE("single hyperplane gives a two-element chain") {
    RationalArrangement arr;
    arr.dim = 2;
    arr.hyperplanes.push_back({{Rat(1), Rat(-1)}, Rat(1)});
    FlatPoset fp = intersection_poset(arr);
    CHECK(fp.poset.size() == 2);
    CHECK(fp.poset.characteristic_polynomial() == IntPolynomial{-1, 1});
}

TEST_CASE("affine Linial arrangement yields a semilattice") {
    // x_i - x_j = 1 over [3]: the triple intersection is empty
    FlatPoset fp = intersection_poset(to_rational(make_arrangement(ArrFamily::linial, 3)));
    CHECK(fp.poset.size() == 7); // ambient + 3 hyperplanes + 3 points
    CHECK(fp.poset.length() == 2);
    CHECK_FALSE(fp.poset.top().has_value());
}

TEST_CASE("prime field") {
    CHECK_THROWS_AS(PrimeField(6), ParameterError);
    PrimeField f7(7);
    CHECK(f7.mul(3, 5) == 1);
    CHECK(f7.inv(3) == 5);
    auto z = f7.root_of_unity(3);
    REQUIRE(z.has_value());
    CHECK(f7.pow(*z, 3) == 1);
    CHECK(*z != 1);
    CHECK_FALSE(PrimeField(5).root_of_unity(3).has_value());
    CHECK(f7.from_rat(Rat(1, 2)) == 4); // 2 * 4 = 8 = 1 mod 7
}

TEST_CASE("finite field point counts") {
    CHECK(finite_field_count(make_arrangement(ArrFamily::braid, 3), 5) == 60); // 5*4*3
    CHECK(finite_field_count(make_arrangement(ArrFamily::homogenized_linial, 2), 7) == 74088);
    // dowling m=3 n=2: q (q-1)^2 (q-3)
    CHECK(finite_field_count(make_arrangement(ArrFamily::dowling_homogenized, 2, 3), 7) == 1008);
    CHECK(finite_field_count(make_arrangement(ArrFamily::dowling_homogenized, 2, 3), 13) == 18720);

    CHECK_THROWS_AS((void)finite_field_count(make_arrangement(ArrFamily::dowling_homogenized, 2, 3), 5),
                    ParameterError); // 5 != 1 mod 3
    CHECK_THROWS_AS((void)finite_field_count(make_arrangement(ArrFamily::braid, 3), 4),
                    ParameterError); // not prime
    CHECK_THROWS_AS(
        (void)finite_field_count(make_arrangement(ArrFamily::homogenized_linial, 4), 31),
        ParameterError); // q^d over budget without force
}
