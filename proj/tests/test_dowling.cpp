#include <doctest.h>

#include <algorithm>
#include <set>

#include "homlin/dowling.hpp"
#include "homlin/gamma.hpp"
#include "homlin/graph.hpp"

using namespace homlin;

namespace {

LabeledPartition lp(int N, int m, std::vector<int> zero,
                    std::vector<LabeledPartition::Block> blocks) {
    return LabeledPartition::make(N, m, std::move(zero), std::move(blocks));
}

} // namespace

TEST_CASE("labeled partition canonical form") {
    LabeledPartition p = lp(5, 3, {5, 0}, {{{2, 4}, {0, 2}}, {{1, 3}, {0, 1}}});
    CHECK(p.to_string() == "0 5|1^0 3^1|2^0 4^2");
    CHECK(p.block_count() == 3);
    CHECK(p.labeled_block_count() == 2);

    CHECK_THROWS_AS(lp(2, 2, {1, 0}, {{{2}, {1}}}), DomainError);  // min labeled nonzero
    CHECK_THROWS_AS(lp(2, 2, {0}, {{{1}, {0}}}), DomainError);     // 2 missing
    CHECK_THROWS_AS(lp(2, 2, {0, 1}, {{{1, 2}, {0, 0}}}), DomainError); // overlap
    CHECK_THROWS_AS(lp(1, 2, {0}, {{{1}, {5}}}), DomainError);     // label out of range
}

TEST_CASE("dowling covers reproduce the worked example") {
    // m = 3: 05|1^0 3^1|2^0 4^2 has exactly five covers
    LabeledPartition start = lp(5, 3, {0, 5}, {{{1, 3}, {0, 1}}, {{2, 4}, {0, 2}}});
    std::set<std::string> got;
    for (const auto& cov : dowling_covers(start)) got.insert(cov.to_string());
    std::set<std::string> expect = {
        "0 1 3 5|2^0 4^2",
        "0 2 4 5|1^0 3^1",
        "0 5|1^0 2^0 3^1 4^2",
        "0 5|1^0 2^1 3^1 4^0",
        "0 5|1^0 2^2 3^1 4^1",
    };
    CHECK(got == expect);
}

TEST_CASE("cover count of the finest partition") {
    // ground {0} u [3], m = 2: N + m N(N-1)/2 = 3 + 6 = 9
    LabeledPartition finest = lp(3, 2, {0}, {{{1}, {0}}, {{2}, {0}}, {{3}, {0}}});
    CHECK(dowling_covers(finest).size() == 9);
}

TEST_CASE("dowling lattice basics") {
    LabeledPartitionPoset q32 = dowling_lattice(3, 2);
    CHECK(q32.poset.length() == 3);
    CHECK(q32.poset.atoms().size() == 3 + 2 * 3); // N + m N(N-1)/2

    LabeledPartitionPoset q33 = dowling_lattice(3, 3);
    CHECK(q33.poset.atoms().size() == 3 + 3 * 3);
}

TEST_CASE("order agrees with the transitive closure of covers") {
    for (int m : {1, 2, 3}) {
        LabeledPartitionPoset q = dowling_lattice(3, m);
        // In a graded poset the covers are exactly the rank-1 gaps; compare
        // them against the generating cover moves.
        for (int x = 0; x < q.poset.size(); ++x) {
            std::set<std::string> from_poset;
            for (int y = 0; y < q.poset.size(); ++y)
                if (x != y && q.poset.leq(x, y) && q.poset.rank(y) == q.poset.rank(x) + 1)
                    from_poset.insert(q.elements[y].to_string());
            std::set<std::string> from_moves;
            for (const auto& cov : dowling_covers(q.elements[x]))
                from_moves.insert(cov.to_string());
            CHECK(from_poset == from_moves);
        }
    }
}

TEST_CASE("Q_N(Z_1) is the partition lattice of [N+1]") {
    for (int N = 1; N <= 4; ++N) {
        LabeledPartitionPoset q = dowling_lattice(N, 1);
        PartitionPoset pi = bond_lattice(complete_graph(N + 1));
        REQUIRE(q.poset.size() == pi.poset.size());
        // explicit bijection: zero block gains N+1 in place of 0
        std::vector<int> image(q.poset.size(), -1);
        for (int i = 0; i < q.poset.size(); ++i) {
            std::vector<std::vector<int>> blocks;
            std::vector<int> zb;
            for (int e : q.elements[i].zero_block())
                zb.push_back(e == 0 ? N + 1 : e);
            blocks.push_back(zb);
            for (const auto& b : q.elements[i].labeled_blocks()) blocks.push_back(b.elems);
            image[i] = pi.index_of(SetPartition::from_blocks(blocks));
            REQUIRE(image[i] >= 0);
        }
        for (int x = 0; x < q.poset.size(); ++x)
            for (int y = 0; y < q.poset.size(); ++y)
                CHECK(q.poset.leq(x, y) == pi.poset.leq(image[x], image[y]));
    }
}

TEST_CASE("homogenized subposet at m=1 matches the Gamma subposet under 0 -> 2n") {
    for (int n = 1; n <= 3; ++n) {
        LabeledPartitionPoset L = homogenized_subposet(n, 1);
        PartitionPoset G = gamma_subposet(n);
        REQUIRE(L.poset.size() == G.poset.size());
        std::vector<int> image(L.poset.size(), -1);
        for (int i = 0; i < L.poset.size(); ++i) {
            std::vector<std::vector<int>> blocks;
            std::vector<int> zb;
            for (int e : L.elements[i].zero_block())
                zb.push_back(e == 0 ? 2 * n : e);
            blocks.push_back(zb);
            for (const auto& b : L.elements[i].labeled_blocks()) blocks.push_back(b.elems);
            image[i] = G.index_of(SetPartition::from_blocks(blocks));
            REQUIRE(image[i] >= 0);
        }
        for (int x = 0; x < L.poset.size(); ++x)
            for (int y = 0; y < L.poset.size(); ++y)
                CHECK(L.poset.leq(x, y) == G.poset.leq(image[x], image[y]));
        CHECK(L.poset.characteristic_polynomial() == G.poset.characteristic_polynomial());
    }
}

TEST_CASE("homogenized subposet L^2_3 structure") {
    // ground {0,1,2,3}, m = 2: f-vector (1,4,4,1), chi = (t-1)^2 (t-2)
    LabeledPartitionPoset L = homogenized_subposet(2, 2);
    REQUIRE(L.poset.size() == 10);
    std::map<int, int> by_rank;
    for (int i = 0; i < L.poset.size(); ++i) by_rank[L.poset.rank(i)]++;
    CHECK(by_rank == std::map<int, int>{{0, 1}, {1, 4}, {2, 4}, {3, 1}});
    CHECK(L.poset.characteristic_polynomial() == IntPolynomial{-2, 5, -4, 1});
    // the three pairwise intersections of x1-x2=y1, x1+x2=y1, x1=y1 coincide,
    // so one rank-2 element carries three atoms
    int triple = 0;
    for (int i = 0; i < L.poset.size(); ++i)
        if (L.poset.rank(i) == 2 && L.poset.atoms_below(i).size() == 3) ++triple;
    CHECK(triple == 1);
}

TEST_CASE("homogenized subposet chi for n=1 is t-1 for every m") {
    for (int m = 1; m <= 3; ++m)
        CHECK(homogenized_subposet(1, m).poset.characteristic_polynomial() ==
              IntPolynomial{-1, 1});
}

TEST_CASE("homogenized subposet excludes invalid labeled partitions") {
    LabeledPartitionPoset L = homogenized_subposet(2, 2); // ground {0} u [3]
    CHECK(L.index_of(lp(3, 2, {0, 2}, {{{1}, {0}}, {{3}, {0}}})) == -1); // min(B0\{0}) even
    CHECK(L.index_of(lp(3, 2, {0}, {{{2, 3}, {0, 1}}, {{1}, {0}}})) == -1); // even min block
    CHECK(L.index_of(lp(3, 2, {0, 1}, {{{2}, {0}}, {{3}, {0}}})) >= 0);
}

TEST_CASE("labeled cycle support") {
    // (1^0 3^1 4^1 2^2)(5^0)(6^0)(7^0 8^0) with 2n = 8
    Permutation base = Permutation::from_cycles({{1, 3, 4, 2}, {5}, {6}, {7, 8}});
    // ground order labels: 1,2,3,4,5,6,7,8
    LabeledPermutation sigma(base, {0, 2, 1, 1, 0, 0, 0, 0}, 3);
    CHECK(labeled_cycle_support(sigma).to_string() == "0 7|1^0 2^2 3^1 4^1|5^0|6^0");

    // the whole-[4] cycle collapses into the zero block
    Permutation whole = Permutation::from_cycles({{2, 1, 3, 4}});
    LabeledPermutation s2(whole, {0, 0, 0, 0}, 2);
    CHECK(labeled_cycle_support(s2).to_string() == "0 1 2 3");

    // identity: cycle (4) contributes only 0 to the zero block
    LabeledPermutation id4(Permutation::identity({1, 2, 3, 4}), {0, 0, 0, 0}, 2);
    CHECK(labeled_cycle_support(id4).to_string() == "0|1^0|2^0|3^0");
}

TEST_CASE("gandhi polynomials") {
    IntPolynomial x = IntPolynomial::t();
    CHECK(gandhi(0) == x);
    CHECK(gandhi(1) == x * x);
    CHECK(gandhi(2) == IntPolynomial{0, 0, 1, 2});       // 2x^3 + x^2
    CHECK(gandhi(3) == IntPolynomial{0, 0, 3, 8, 6});    // 6x^4 + 8x^3 + 3x^2
    CHECK(gandhi(2).eval(Int(1)) == 3);
    // G_n(1) runs through the Genocchi numbers g_{n+1}
    const long g[] = {1, 1, 3, 17, 155, 2073};
    for (int n = 0; n <= 5; ++n) CHECK(gandhi(n).eval(Int(1)) == g[n]);
    CHECK_THROWS_AS((void)gandhi(-1), ParameterError);
}

TEST_CASE("scaled reciprocal evaluation") {
    CHECK(scaled_reciprocal_eval(gandhi(1), 2, 3) == 2);  // 2^3 G_1(1/2)
    CHECK(scaled_reciprocal_eval(gandhi(2), 3, 5) == 45); // 3^5 G_2(1/3)
    CHECK(scaled_reciprocal_eval(gandhi(0), 5, 1) == 1);
    // fractional results are flagged
    CHECK_THROWS_AS((void)scaled_reciprocal_eval(gandhi(1), 2, 1), IntegrityError);
}
