#include <doctest.h>

#include <algorithm>

#include "homlin/graph.hpp"
#include "homlin/partition.hpp"
#include "homlin/poset.hpp"

using namespace homlin;

TEST_CASE("set partition canonical form") {
    SetPartition p = SetPartition::from_blocks({{5}, {4, 2, 1, 7}, {9, 3, 6, 8}});
    CHECK(p.to_string() == "1247|3689|5"); // blocks ordered by minima
    CHECK(p.block_count() == 3);
    CHECK(p.block_of(6) == 1);
    CHECK(p.block_of(5) == 2);
    CHECK_THROWS_AS((void)p.block_of(10), DomainError);
    CHECK_THROWS_AS((void)SetPartition::from_blocks({{1}, {1, 2}}), DomainError);

    SetPartition wide = SetPartition::from_blocks({{10, 1}, {2}});
    CHECK(wide.to_string() == "1 10|2"); // multi-digit grounds get spaces
}

TEST_CASE("refinement") {
    SetPartition fine = SetPartition::from_blocks({{1, 2}, {3}, {4}});
    SetPartition coarse = SetPartition::from_blocks({{1, 2, 4}, {3}});
    CHECK(fine.refines(coarse));
    CHECK_FALSE(coarse.refines(fine));
    CHECK(fine.refines(fine));
    SetPartition other = SetPartition::from_blocks({{1, 3}, {2}, {4}});
    CHECK_FALSE(other.refines(coarse));
}

TEST_CASE("partition enumeration hits the Bell numbers") {
    const long bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (int n = 0; n <= 6; ++n) {
        long c = 0;
        for_each_partition(n, [&](const SetPartition&) { ++c; });
        CHECK(c == bell[n]);
    }
}

TEST_CASE("Moebius function of the partition lattice") {
    PartitionPoset pi3 = bond_lattice(complete_graph(3));
    CHECK(pi3.poset.size() == 5);
    auto top = pi3.poset.top();
    REQUIRE(top.has_value());
    CHECK(pi3.poset.mobius_from_bottom(*top) == 2); // 3 atoms: -(1-3)
    CHECK(pi3.poset.characteristic_polynomial() == IntPolynomial{2, -3, 1});

    // mu over intervals
    int atom = pi3.poset.atoms().front();
    CHECK(pi3.poset.mobius(atom, *top) == -1);
    CHECK(pi3.poset.mobius(atom, atom) == 1);
    CHECK(pi3.poset.mobius(pi3.poset.bottom(), *top) == 2);
    int other_atom = pi3.poset.atoms().back();
    CHECK_THROWS_AS((void)pi3.poset.mobius(atom, other_atom), DomainError);
}

TEST_CASE("two-element chain") {
    FinitePoset chain(2, [](int x, int y) { return x == y || (x == 0 && y == 1); }, {0, 1});
    CHECK(chain.mobius_from_bottom(1) == -1);
    CHECK(chain.characteristic_polynomial() == IntPolynomial{-1, 1});
}

TEST_CASE("Moebius sums vanish above the bottom") {
    for (int n : {3, 4, 5}) {
        PartitionPoset p = bond_lattice(complete_graph(n));
        CHECK(p.poset.characteristic_polynomial().eval(Int(1)) == 0);
    }
}

TEST_CASE("mobius is independent of element enumeration order") {
    // same abstract poset, two different index orders
    auto leq_a = [](int x, int y) { return x == y || (x == 0) || (x != 3 && y == 3); };
    // elements: 0=bottom, 1,2=atoms, 3=top
    FinitePoset a(4, leq_a, {0, 1, 1, 2});
    // reversed indexing: 3=bottom, 1,2=atoms, 0=top
    auto leq_b = [](int x, int y) { return x == y || (x == 3) || (x != 0 && y == 0); };
    FinitePoset b(4, leq_b, {2, 1, 1, 0});
    CHECK(a.characteristic_polynomial() == b.characteristic_polynomial());

    // a real lattice under a reversed index map
    PartitionPoset pi4 = bond_lattice(complete_graph(4));
    const int n = pi4.poset.size();
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[i] = pi4.poset.rank(n - 1 - i);
    FinitePoset reversed(
        n, [&](int x, int y) { return pi4.poset.leq(n - 1 - x, n - 1 - y); }, rank);
    CHECK(reversed.characteristic_polynomial() == pi4.poset.characteristic_polynomial());
}

TEST_CASE("poset construction validates its inputs") {
    // rank gap without an intermediate element: not graded
    CHECK_THROWS_AS(FinitePoset(2, [](int x, int y) { return x <= y; }, {0, 2}), IntegrityError);
    // two minimal elements
    CHECK_THROWS_AS(FinitePoset(2, [](int x, int y) { return x == y; }, {0, 0}), IntegrityError);
    // rank not monotone
    CHECK_THROWS_AS(FinitePoset(2, [](int x, int y) { return x <= y; }, {0, 0}), IntegrityError);
    // not antisymmetric
    CHECK_THROWS_AS(FinitePoset(2, [](int, int) { return true; }, {0, 1}), IntegrityError);
}

TEST_CASE("zaslavsky region counts") {
    CHECK(zaslavsky_regions(IntPolynomial{2, -3, 1}) == 6);  // braid A_2
    CHECK(zaslavsky_regions(IntPolynomial{-1, 3, -3, 1}) == 8);
    CHECK(zaslavsky_regions(IntPolynomial{-1, 1}) == 2);
    CHECK(zaslavsky_bounded_regions(IntPolynomial{1, -3, 1}) == 1);
}

TEST_CASE("poincare polynomial") {
    CHECK(poincare_polynomial(IntPolynomial{-1, 1}, 1) == IntPolynomial{1, 1});
    CHECK(poincare_polynomial(IntPolynomial{2, -3, 1}, 2) == IntPolynomial{1, 3, 2});
    // evaluation at 1 equals |chi(-1)|
    IntPolynomial chi{-1, 3, -3, 1};
    CHECK(poincare_polynomial(chi, 3).eval(Int(1)) == zaslavsky_regions(chi));
    // a polynomial that cannot be a characteristic polynomial
    CHECK_THROWS_AS((void)poincare_polynomial(IntPolynomial{2, 3, 1}, 2), IntegrityError);
    CHECK_THROWS_AS((void)poincare_polynomial(IntPolynomial{2, -3, 1}, 1), ParameterError);
}
