#include "finfree/combinatorics.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace finfree;

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
    CHECK(partitions_of(3) == std::vector<Partition>{Partition({3}), Partition({2, 1}),
                                                     Partition({1, 1, 1})});
    CHECK(partitions_of(6).size() == 11);
    for (int k = 0; k <= 12; ++k) {
        const auto parts = partitions_of(k);
        CHECK(static_cast<long long>(parts.size()) == oracle::partition_count(k));
        std::set<Partition> unique(parts.begin(), parts.end());
        CHECK(unique.size() == parts.size());
        for (const Partition& p : parts) CHECK(p.weight() == k);
    }
}

TEST_CASE("partition accessors") {
    const Partition p({3, 2, 2, 1});
    CHECK(p.weight() == 8);
    CHECK(p.length() == 4);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.multiplicity(5) == 0);
    CHECK(p.doubled() == Partition({6, 4, 4, 2}));
    CHECK(Partition::from_string("3,2,2,1") == p);
    CHECK(p.to_string() == "3,2,2,1");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
}

TEST_CASE("cycle type and sign") {
    CHECK(Permutation::identity(4).cycle_type() == Partition({1, 1, 1, 1}));
    CHECK(Permutation({2, 1, 3}).cycle_type() == Partition({2, 1}));
    // (1 2 3)(4 5)
    CHECK(Permutation({2, 3, 1, 5, 4}).cycle_type() == Partition({3, 2}));

    CHECK(Permutation::identity(5).sign() == 1);
    CHECK(Permutation::transposition(4, 2, 3).sign() == -1);
    CHECK(Permutation({2, 3, 1}).sign() == 1);

    for (int k = 0; k <= 6; ++k)
        for_each_permutation(k, [&](const Permutation& s) {
            CHECK(s.sign() == oracle::sign_by_inversions(s));
        });
}

TEST_CASE("sign is multiplicative") {
    for_each_permutation(5, [&](const Permutation& s) {
        const Permutation t({3, 1, 4, 5, 2});
        CHECK(compose(s, t).sign() == s.sign() * t.sign());
    });
}

TEST_CASE("z_of and conjugacy class sizes") {
    CHECK(z_of(Partition({1, 1, 1})) == 6);
    CHECK(z_of(Partition({2, 1})) == 2);
    CHECK(z_of(Partition({3})) == 3);

    // class sizes k!/z_rho sum to k!, and match enumeration
    for (int k = 1; k <= 8; ++k) {
        Int total = 0;
        for (const Partition& rho : partitions_of(k)) total += factorial(k) / z_of(rho);
        CHECK(total == factorial(k));
    }
    for (int k = 1; k <= 5; ++k) {
        std::map<Partition, long long> counts;
        for_each_permutation(k, [&](const Permutation& s) { ++counts[s.cycle_type()]; });
        for (const Partition& rho : partitions_of(k))
            CHECK(Int(counts[rho]) == factorial(k) / z_of(rho));
    }

    // doubling identity
    for (int k = 1; k <= 8; ++k)
        for (const Partition& rho : partitions_of(k))
            CHECK(z_of(rho.doubled()) == (Int(1) << rho.length()) * z_of(rho));
}

TEST_CASE("unsigned Stirling numbers") {
    CHECK(stirling_first_unsigned(3, 1) == 2);
    CHECK(stirling_first_unsigned(3, 3) == 1);
    CHECK(stirling_first_unsigned(4, 2) == 11);
    CHECK(stirling_first_unsigned(0, 0) == 1);
    CHECK_THROWS_AS(stirling_first_unsigned(3, 4), std::invalid_argument);

    for (int k = 0; k <= 7; ++k)
        for (int i = 0; i <= k; ++i)
            CHECK(stirling_first_unsigned(k, i) == Int(oracle::stirling_by_enumeration(k, i)));
}

TEST_CASE("Stirling numbers expand the rising factorial") {
    // sum_i c(k,i) x^i = x(x+1)...(x+k-1) as polynomials
    for (int k = 0; k <= 10; ++k) {
        std::vector<Rat> rising{Rat(1)};  // coefficients, lowest degree first
        for (int t = 0; t < k; ++t) {
            std::vector<Rat> next(rising.size() + 1, Rat(0));
            for (size_t i = 0; i < rising.size(); ++i) {
                next[i] += rising[i] * t;  // multiply by (x + t)
                next[i + 1] += rising[i];
            }
            rising = std::move(next);
        }
        for (int i = 0; i <= k; ++i)
            CHECK(rising[static_cast<size_t>(i)] == Rat(stirling_first_unsigned(k, i)));
    }
}

TEST_CASE("rising and falling factorials") {
    CHECK(rising_factorial(Rat(2), 3) == 24);
    CHECK(falling_factorial(Rat(5), 2) == 20);
    CHECK(rising_factorial(Rat(1), 3) == 6);
    CHECK(rising_factorial(Rat(7), 0) == 1);
    CHECK(falling_factorial(Rat(7), 0) == 1);
    for (int d = 1; d <= 8; ++d)
        for (int k = 0; k <= d; ++k)
            CHECK(falling_factorial(Rat(d), k) == Rat(factorial(d), factorial(d - k)));
}

TEST_CASE("coset type") {
    CHECK(coset_type(Permutation::identity(4)) == Partition({1, 1}));
    CHECK(coset_type(Permutation({2, 1})) == Partition({1}));
    CHECK(coset_type(Permutation::transposition(4, 2, 3)) == Partition({2}));
    CHECK_THROWS_AS(coset_type(Permutation::identity(3)), std::invalid_argument);

    for (int k = 1; k <= 3; ++k) {
        CHECK(coset_type(Permutation::identity(2 * k)).parts() == std::vector<int>(static_cast<size_t>(k), 1));
        // invariance under both-sided hyperoctahedral translation
        const auto hk = hyperoctahedral_group(k);
        for_each_permutation(2 * k, [&](const Permutation& s) {
            const Partition type = coset_type(s);
            const Permutation& z = hk[static_cast<size_t>(s.size() * 7 % hk.size())];
            CHECK(coset_type(compose(z, s)) == type);
            CHECK(coset_type(compose(s, z)) == type);
        });
    }
}

TEST_CASE("coset type invariance, exhaustive for k = 2") {
    const auto hk = hyperoctahedral_group(2);
    for_each_permutation(4, [&](const Permutation& s) {
        const Partition type = coset_type(s);
        for (const Permutation& z1 : hk)
            for (const Permutation& z2 : hk)
                CHECK(coset_type(compose(z1, compose(s, z2))) == type);
    });
}

TEST_CASE("hyperoctahedral group") {
    for (int k = 0; k <= 4; ++k) {
        const auto hk = hyperoctahedral_group(k);
        CHECK(Int(static_cast<long long>(hk.size())) == (Int(1) << k) * factorial(k));
        std::set<Permutation> unique(hk.begin(), hk.end());
        CHECK(unique.size() == hk.size());
        // every element commutes with (1 2)(3 4)...(2k-1 2k)
        std::vector<int> im(static_cast<size_t>(2 * k));
        for (int i = 1; i <= k; ++i) {
            im[static_cast<size_t>(2 * i - 1) - 1] = 2 * i;
            im[static_cast<size_t>(2 * i) - 1] = 2 * i - 1;
        }
        const Permutation base(im);
        for (const Permutation& z : hk) CHECK(compose(z, base) == compose(base, z));
    }
}

TEST_CASE("pair partitions and the embedding") {
    CHECK(pair_partition_to_permutation(PairPartition({{1, 2}, {3, 4}})) == Permutation::identity(4));
    CHECK(pair_partition_to_permutation(PairPartition({{1, 3}, {2, 4}})) ==
          Permutation({1, 3, 2, 4}));
    CHECK(pair_partition_to_permutation(PairPartition({{1, 4}, {2, 3}})) ==
          Permutation({1, 4, 2, 3}));

    // |P_2(2k)| = (2k-1)!! and the embedding is injective
    long long double_fact = 1;
    for (int k = 1; k <= 5; ++k) {
        double_fact *= 2 * k - 1;
        const auto pairings = all_pair_partitions(2 * k);
        CHECK(static_cast<long long>(pairings.size()) == double_fact);
        std::set<Permutation> images;
        for (const PairPartition& p : pairings) images.insert(pair_partition_to_permutation(p));
        CHECK(images.size() == pairings.size());
    }
}

TEST_CASE("multi-index kernels") {
    CHECK(kernel_of(MultiIndex({5, 5, 2})) == SetPartition({{1, 2}, {3}}, 3));
    CHECK(kernel_of(MultiIndex({1, 2, 1, 2})) == SetPartition({{1, 3}, {2, 4}}, 4));
    CHECK(kernel_of(MultiIndex({3, 1, 4})) == SetPartition({{1}, {2}, {3}}, 3));
    CHECK(MultiIndex({3, 1, 4}).is_injective());
    CHECK_FALSE(MultiIndex({3, 1, 3}).is_injective());
    CHECK(MultiIndex({1, 2}).in_range(2));
    CHECK_FALSE(MultiIndex({1, 3}).in_range(2));

    // refinement order
    const SetPartition fine({{1}, {2}, {3}}, 3);
    const SetPartition coarse({{1, 2, 3}}, 3);
    CHECK(fine.refines(coarse));
    CHECK_FALSE(coarse.refines(fine));
    CHECK(kernel_of(MultiIndex({7, 7, 9})).refines(coarse));
}

TEST_CASE("set partition enumeration counts Bell numbers") {
    const long long bell[] = {1, 1, 2, 5, 15, 52};
    for (int k = 0; k <= 5; ++k)
        CHECK(static_cast<long long>(all_set_partitions(k).size()) == bell[k]);
}

TEST_CASE("permutation composition conventions") {
    const Permutation s({2, 3, 1});
    const Permutation t({1, 3, 2});
    CHECK(compose(s, t)(2) == s(t(2)));
    CHECK(compose(s, s.inverse()) == Permutation::identity(3));
    CHECK(compose(s.inverse(), s) == Permutation::identity(3));
}
