#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "homlin/permutation.hpp"

using namespace homlin;

namespace {

std::vector<int> upto(int n) {
    std::vector<int> g(n);
    std::iota(g.begin(), g.end(), 1);
    return g;
}

// Independent oracle: filter all of S_n by a predicate on one-line words.
template <class Pred>
long brute_count(int n, Pred pred) {
    std::vector<int> p = upto(n);
    long c = 0;
    do {
        if (pred(p)) ++c;
    } while (std::next_permutation(p.begin(), p.end()));
    return c;
}

bool dperm_word(const std::vector<int>& s) {
    for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
        if (i % 2 == 1 && !(i <= s[i - 1])) return false;
        if (i % 2 == 0 && !(i >= s[i - 1])) return false;
    }
    return true;
}

int cycles_of_word(const std::vector<int>& s) {
    std::vector<bool> seen(s.size() + 1, false);
    int c = 0;
    for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
        if (seen[i]) continue;
        ++c;
        for (int j = i; !seen[j]; j = s[j - 1]) seen[j] = true;
    }
    return c;
}

} // namespace

TEST_CASE("canonical cycle form") {
    Permutation p = Permutation::from_cycles({{1, 3, 4, 2}});
    // the cycle containing the ground maximum is written ending at it
    CHECK(p.to_string() == "(2,1,3,4)");
    CHECK(p.image_of(1) == 3);
    CHECK(p.image_of(4) == 2);
    CHECK(p == Permutation::from_cycles({{4, 2, 1, 3}}));

    Permutation q = Permutation::from_cycles({{1, 4, 2}}, upto(4)); // fixed point 3 implied
    CHECK(q.to_string() == "(2,1,4)(3)");
    CHECK(q.cycle_count() == 2);

    CHECK(Permutation::identity(upto(3)).to_string() == "(1)(2)(3)");
    CHECK(Permutation{}.to_string() == "()");
    CHECK_THROWS_AS(Permutation::from_cycles({{1, 2}, {2, 3}}), DomainError);
    CHECK_THROWS_AS(Permutation::from_cycles({{1, 5}}, upto(4)), DomainError);
}

TEST_CASE("D-permutation predicate") {
    CHECK(is_d_permutation(Permutation::identity(upto(4))));
    CHECK(is_d_permutation(Permutation::from_cycles({{1, 3, 4, 2}})));
    CHECK_FALSE(is_d_permutation(Permutation::from_cycles({{1, 2, 4}}, upto(4))));
    // arbitrary ground sets are allowed
    CHECK(is_d_permutation(Permutation::from_cycles({{1, 4, 2}}, std::vector<int>{1, 2, 4})));
}

TEST_CASE("Dumont predicates") {
    CHECK(is_dumont(Permutation::from_cycles({{1, 2}, {3, 4}})));
    Permutation p = Permutation::from_cycles({{1, 4, 2}}, upto(4));
    CHECK(is_dumont(p));
    CHECK_FALSE(is_dumont_derangement(p)); // 3 is a fixed point
    CHECK(is_dumont_derangement(Permutation::from_cycles({{1, 2}})));
    CHECK_THROWS_AS((void)is_dumont(Permutation::identity({1, 2, 3})), ParameterError);
    CHECK_THROWS_AS((void)is_dumont(Permutation::identity({2, 3})), ParameterError);
}

TEST_CASE("enumerate dcycle on [4]") {
    std::vector<Permutation> got;
    enumerate_family(PermFamily::dcycle, upto(4), [&](const Permutation& p) { got.push_back(p); });
    REQUIRE(got.size() == 1);
    CHECK(got[0] == Permutation::from_cycles({{1, 3, 4, 2}}));
}

TEST_CASE("enumerate Dumont derangements on [6] matches the known list") {
    std::set<Permutation> got;
    enumerate_family(PermFamily::dumont_derangement, upto(6),
                     [&](const Permutation& p) { got.insert(p); });
    std::set<Permutation> expect = {
        Permutation::from_cycles({{1, 3, 5, 6, 4, 2}}), Permutation::from_cycles({{1, 3, 4, 2}, {5, 6}}),
        Permutation::from_cycles({{1, 2}, {3, 4}, {5, 6}}), Permutation::from_cycles({{1, 2}, {3, 5, 6, 4}}),
        Permutation::from_cycles({{1, 4, 3, 5, 6, 2}}), Permutation::from_cycles({{1, 5, 6, 3, 4, 2}}),
        Permutation::from_cycles({{1, 5, 6, 2}, {3, 4}}), Permutation::from_cycles({{1, 4, 2}, {3, 5, 6}}),
    };
    CHECK(got == expect);
}

TEST_CASE("enumeration is lexicographic on the one-line word and complete") {
    for (int n2 : {2, 4, 6}) {
        std::vector<std::vector<int>> words;
        enumerate_family(PermFamily::dperm, upto(n2),
                         [&](const Permutation& p) { words.push_back(p.one_line()); });
        CHECK(std::is_sorted(words.begin(), words.end()));
        CHECK(static_cast<long>(words.size()) == brute_count(n2, dperm_word));
    }
}

TEST_CASE("empty ground") {
    int count = 0;
    enumerate_family(PermFamily::dumont, {}, [&](const Permutation& p) {
        CHECK(p.empty());
        ++count;
    });
    CHECK(count == 1);
    count = 0;
    enumerate_family(PermFamily::dcycle, {}, [&](const Permutation&) { ++count; });
    CHECK(count == 0);
}

TEST_CASE("genocchi and median genocchi tables") {
    const long g[] = {0, 1, 1, 3, 17, 155};
    for (int n = 1; n <= 5; ++n) CHECK(genocchi(n) == g[n]);
    const long h[] = {1, 2, 8, 56, 608};
    for (int n = 0; n <= 4; ++n) CHECK(median_genocchi(n) == h[n]);
    CHECK_THROWS_AS((void)genocchi(0), ParameterError);
    CHECK_THROWS_AS((void)median_genocchi(-1), ParameterError);
}

TEST_CASE("descent class counts") {
    CHECK(count_descent_class(1) == 2);
    CHECK(count_descent_class(2) == 8);
    CHECK(count_descent_class(3) == 56);
    // independent oracle on S_4
    long oracle = brute_count(4, [](const std::vector<int>& s) {
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] > s[i + 1] && !(s[i] % 2 == 0 && s[i + 1] % 2 == 1)) return false;
        return true;
    });
    CHECK(count_descent_class(2) == oracle);
}

TEST_CASE("cycle support") {
    Permutation p = Permutation::from_cycles({{1, 7, 2, 4}, {5}, {6, 8, 9, 3}});
    CHECK(cycle_support(p).to_string() == "1247|3689|5"); // blocks ordered by minima
    CHECK(cycle_support(Permutation::identity(upto(4))).to_string() == "1|2|3|4");
    CHECK(cycle_support(Permutation::from_cycles({{1, 3, 4, 2}})).to_string() == "1234");
}

TEST_CASE("forced zero labels") {
    // sigma = (3,7,8,5,9,10)(1,4,2)(6): right-to-left minima of the 10-cycle
    // word are 10,9,5,3; cycle minima are 3,1,6.
    Permutation p = Permutation::from_cycles({{3, 7, 8, 5, 9, 10}, {1, 4, 2}, {6}});
    CHECK(forced_zero_elements(p) == std::vector<int>{1, 3, 5, 6, 9, 10});
}

TEST_CASE("labeled enumeration counts") {
    CountTable t = count_family(PermFamily::labeled_dperm, upto(4), 2);
    CHECK(t.count == 12); // sum of 2^{#free} over the 8 D-permutations on [4]
    CHECK(count_family(PermFamily::labeled_dperm, upto(4), 3).count == 16);
    CHECK(count_family(PermFamily::labeled_dcycle, upto(4), 3).count == 3);

    // m = 1 is in count-preserving bijection with the unlabeled family
    for (int n = 1; n <= 3; ++n) {
        CHECK(count_family(PermFamily::labeled_dperm, upto(2 * n), 1).count ==
              count_family(PermFamily::dperm, upto(2 * n)).count);
        CHECK(count_family(PermFamily::labeled_dcycle, upto(2 * n), 1).count ==
              count_family(PermFamily::dcycle, upto(2 * n)).count);
    }
}

TEST_CASE("labeled enumeration order is lexicographic, then by labels") {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> seen;
    enumerate_labeled_family(PermFamily::labeled_dperm, 4, 2, [&](const LabeledPermutation& lp) {
        seen.push_back({lp.base().one_line(), lp.labels()});
    });
    CHECK(seen.size() == 12);
    CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("labeled permutation validation") {
    Permutation base = Permutation::from_cycles({{1, 3, 4, 2}});
    // word ending at 4 is (2,1,3,4): forced zeros are 1, 3, 4; element 2 free
    CHECK(forced_zero_elements(base) == std::vector<int>{1, 3, 4});
    LabeledPermutation ok(base, {0, 1, 0, 0}, 2);
    CHECK(ok.label_of(2) == 1);
    CHECK(ok.to_string() == "(2^1,1^0,3^0,4^0)");
    CHECK_THROWS_AS(LabeledPermutation(base, {1, 0, 0, 0}, 2), DomainError);
    CHECK_THROWS_AS(LabeledPermutation(base, {0, 5, 0, 0}, 2), DomainError);
}

TEST_CASE("chain of containments for 2n <= 8") {
    for (int n = 1; n <= 4; ++n) {
        std::set<Permutation> dc, dd, dp, d;
        enumerate_family(PermFamily::dcycle, upto(2 * n), [&](const Permutation& p) { dc.insert(p); });
        enumerate_family(PermFamily::dumont_derangement, upto(2 * n),
                         [&](const Permutation& p) { dd.insert(p); });
        enumerate_family(PermFamily::dumont, upto(2 * n), [&](const Permutation& p) { dp.insert(p); });
        enumerate_family(PermFamily::dperm, upto(2 * n), [&](const Permutation& p) { d.insert(p); });
        CHECK(std::includes(dd.begin(), dd.end(), dc.begin(), dc.end()));
        CHECK(std::includes(dp.begin(), dp.end(), dd.begin(), dd.end()));
        CHECK(std::includes(d.begin(), d.end(), dp.begin(), dp.end()));
    }
}

TEST_CASE("D-permutation supports have odd-min/even-max blocks") {
    for (int n = 1; n <= 4; ++n)
        enumerate_family(PermFamily::dperm, upto(2 * n), [&](const Permutation& p) {
            SetPartition support = cycle_support(p);
            for (const auto& b : support.blocks()) {
                if (b.size() == 1) continue;
                CHECK(b.front() % 2 == 1);
                CHECK(b.back() % 2 == 0);
            }
        });
}

TEST_CASE("per-cycle-count table matches a brute filter on [6]") {
    CountTable t = count_family(PermFamily::dperm, upto(6));
    t.validate();
    std::map<int, long> oracle;
    std::vector<int> p = upto(6);
    do {
        if (dperm_word(p)) oracle[cycles_of_word(p)]++;
    } while (std::next_permutation(p.begin(), p.end()));
    for (const auto& [k, v] : oracle) CHECK(t.by_cycles[k] == v);
}

TEST_CASE("parameter errors") {
    CHECK_THROWS_AS(enumerate_family(PermFamily::dumont, {1, 2, 3}, [](const Permutation&) {}),
                    ParameterError);
    CHECK_THROWS_AS(enumerate_family(PermFamily::labeled_dperm, {1, 2}, [](const Permutation&) {}),
                    ParameterError);
    CHECK_THROWS_AS(enumerate_labeled_family(PermFamily::labeled_dperm, 3, 2,
                                             [](const LabeledPermutation&) {}),
                    ParameterError);
    CHECK_THROWS_AS(enumerate_labeled_family(PermFamily::labeled_dperm, 4, 0,
                                             [](const LabeledPermutation&) {}),
                    ParameterError);
}
