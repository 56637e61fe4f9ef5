#include <doctest.h>

#include "homlin/routes.hpp"

using namespace homlin;

TEST_CASE("typeA chi by every route") {
    IntPolynomial expect{-1, 3, -3, 1};
    for (ChiRoute r : available_chi_routes(ChiFamily::typeA, 2, 1))
        CHECK(chi_by_route(ChiFamily::typeA, 2, 1, r) == expect);
    CHECK(available_chi_routes(ChiFamily::typeA, 2, 1).size() == 5);
    CHECK(chi_by_route(ChiFamily::typeA, 1, 1, ChiRoute::poset_mobius) == IntPolynomial{-1, 1});
}

TEST_CASE("dowling chi small cases") {
    CHECK(chi_by_route(ChiFamily::dowling, 1, 3, ChiRoute::poset_mobius) == IntPolynomial{-1, 1});
    // chi(L^2_3) = (t-1)^2 (t-2), chi(L^3_3) = (t-1)^2 (t-3)
    CHECK(chi_by_route(ChiFamily::dowling, 2, 2, ChiRoute::poset_mobius) ==
          IntPolynomial{-2, 5, -4, 1});
    CHECK(chi_by_route(ChiFamily::dowling, 2, 3, ChiRoute::poset_mobius) ==
          IntPolynomial{-3, 7, -5, 1});
    CHECK(chi_by_route(ChiFamily::typeB, 2, 1, ChiRoute::poset_mobius) ==
          chi_by_route(ChiFamily::dowling, 2, 2, ChiRoute::poset_mobius));
}

TEST_CASE("route availability") {
    CHECK_THROWS_AS((void)chi_by_route(ChiFamily::dowling, 2, 3, ChiRoute::rational_arrangement),
                    ParameterError);
    CHECK_THROWS_AS((void)chi_by_route(ChiFamily::braid, 3, 1, ChiRoute::id_forests),
                    ParameterError);
    CHECK_THROWS_AS((void)chi_by_route(ChiFamily::braid, 3, 1, ChiRoute::dperm_counts),
                    ParameterError);
    // typeA n=3 interpolation needs 6 sample primes with q^8 in budget: unavailable
    auto routes = available_chi_routes(ChiFamily::typeA, 3, 1);
    for (ChiRoute r : routes) CHECK(r != ChiRoute::finite_field_interpolation);
}

TEST_CASE("all available routes agree (cross-validation invariant)") {
    struct Case {
        ChiFamily family;
        int n, m;
    };
    for (const Case& c : {Case{ChiFamily::braid, 3, 1}, Case{ChiFamily::braid, 4, 1},
                          Case{ChiFamily::typeA, 1, 1}, Case{ChiFamily::typeA, 2, 1},
                          Case{ChiFamily::typeA, 3, 1}, Case{ChiFamily::typeB, 2, 2},
                          Case{ChiFamily::dowling, 2, 1}, Case{ChiFamily::dowling, 2, 2},
                          Case{ChiFamily::dowling, 2, 3}, Case{ChiFamily::dowling, 3, 2}}) {
        auto routes = available_chi_routes(c.family, c.n, c.m);
        REQUIRE(!routes.empty());
        IntPolynomial first = chi_by_route(c.family, c.n, c.m, routes.front());
        for (size_t i = 1; i < routes.size(); ++i) {
            INFO(to_string(c.family), " n=", c.n, " m=", c.m, " route=", to_string(routes[i]));
            CHECK(chi_by_route(c.family, c.n, c.m, routes[i]) == first);
        }
    }
}

TEST_CASE("chi length") {
    CHECK(chi_length(ChiFamily::braid, 4) == 3);
    CHECK(chi_length(ChiFamily::typeA, 3) == 5);
    CHECK(chi_length(ChiFamily::dowling, 2) == 3);
}
