#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "weylsheaf/irr_labels.hpp"

using namespace weylsheaf;

TEST(Partitions, CountsAgainstDirectRecursion) {
    for (int n = 0; n <= 60; ++n) EXPECT_EQ(partition_count(n), oracle::partitions(n)) << n;
    EXPECT_EQ(partition_count(5), 7u);
    EXPECT_EQ(partition_count(12), 77u);
    for (int n = 0; n <= 30; ++n) EXPECT_EQ(bipartition_count(n), oracle::bipartitions(n)) << n;
}

TEST(Partitions, IteratorProducesEachPartitionOnce) {
    for (int n = 1; n <= 14; ++n) {
        std::set<Partition> seen;
        PartitionIterator it(n);
        do {
            const Partition& p = *it;
            EXPECT_EQ(std::accumulate(p.begin(), p.end(), 0), n);
            EXPECT_TRUE(std::is_sorted(p.rbegin(), p.rend()));
            EXPECT_GT(p.back(), 0);
            EXPECT_TRUE(seen.insert(p).second);
        } while (it.next());
        EXPECT_EQ(seen.size(), oracle::partitions(n));
    }
}

TEST(IrrCount, DihedralAgainstClassCounts) {
    for (int m = 3; m <= 14; ++m) {
        // rotation and reflection of a regular m-gon
        oracle::Perm r(static_cast<std::size_t>(m)), s(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            r[static_cast<std::size_t>(i)] = (i + 1) % m;
            s[static_cast<std::size_t>(i)] = (m - i) % m;
        }
        const auto g = oracle::closure({r, s});
        ASSERT_EQ(g.size(), static_cast<std::size_t>(2 * m));
        EXPECT_EQ(dihedral_count(m), oracle::naive_class_count(g)) << m;
        EXPECT_EQ(dihedral_labels(m).size(), dihedral_count(m));
    }
}

TEST(IrrCount, WeylGroupsAgainstClassCounts) {
    struct Case {
        char family;
        int rank;
    };
    for (Case c : {Case{'A', 2}, Case{'A', 3}, Case{'A', 4}, Case{'B', 2}, Case{'B', 3}, Case{'C', 3}, Case{'B', 4}, Case{'D', 4},
                   Case{'D', 5}, Case{'G', 2}, Case{'F', 4}}) {
        const auto g = oracle::closure(oracle::reflection_permutations(oracle::simple_roots(c.family, c.rank)));
        EXPECT_EQ(irr_count(Factor{static_cast<Family>(c.family), c.rank}), oracle::naive_class_count(g))
            << c.family << c.rank;
    }
}

TEST(IrrCount, Fixtures) {
    EXPECT_EQ(irr_count(parse_cartan_type("F4")), 25u);
    EXPECT_EQ(irr_count(parse_cartan_type("E6")), 25u);
    EXPECT_EQ(irr_count(parse_cartan_type("E7")), 60u);
    EXPECT_EQ(irr_count(parse_cartan_type("E8")), 112u);
    EXPECT_EQ(irr_count(parse_cartan_type("D4")), 13u);
    EXPECT_EQ(irr_count(parse_cartan_type("G2")), 6u);
    EXPECT_EQ(irr_count(parse_cartan_type("C3")), 10u);
    EXPECT_EQ(irr_count(parse_cartan_type("1")), 1u);
    EXPECT_EQ(irr_count(parse_cartan_type("A1+G2")), 12u);
}

TEST(IrrLabels, StreamMatchesCountAndIsDuplicateFree) {
    for (const char* name : {"A5", "B4", "C5", "D4", "D5", "D6", "D8", "G2", "F4", "E6", "E7", "E8", "A1+B2", "G2+G2", "1"}) {
        const CartanType t = parse_cartan_type(name);
        std::set<std::string> seen;
        IrrLabelStream s(t);
        std::uint64_t n = 0;
        while (auto l = s.next()) {
            ++n;
            EXPECT_TRUE(seen.insert(to_string(*l)).second) << name << " " << to_string(*l);
        }
        EXPECT_EQ(n, irr_count(t)) << name;
        EXPECT_EQ(irr_labels(t).size(), n);
    }
}

TEST(IrrLabels, SplitLabelsInEvenD) {
    int split = 0;
    for (const auto& l : irr_labels(parse_cartan_type("D6"))) {
        const auto* d = std::get_if<DLabel>(&l.value);
        ASSERT_NE(d, nullptr);
        if (d->split != 0) {
            ++split;
            EXPECT_EQ(d->alpha, d->beta);
        }
    }
    EXPECT_EQ(split, 2 * static_cast<int>(oracle::partitions(3)));
    for (const auto& l : irr_labels(parse_cartan_type("D5"))) EXPECT_EQ(std::get<DLabel>(l.value).split, 0);
}

TEST(IrrLabels, Text) {
    std::vector<std::string> g2;
    for (const auto& l : irr_labels(parse_cartan_type("G2"))) g2.push_back(to_string(l));
    EXPECT_EQ(g2, (std::vector<std::string>{"unit", "sign", "sign'", "sign''", "refl(1)", "refl(2)"}));
    std::vector<std::string> a2;
    for (const auto& l : irr_labels(parse_cartan_type("A2"))) a2.push_back(to_string(l));
    EXPECT_EQ(a2, (std::vector<std::string>{"[3]", "[2,1]", "[1,1,1]"}));
    EXPECT_EQ(to_string(irr_labels(parse_cartan_type("1")).front()), "1");
    EXPECT_EQ(to_string(irr_labels(parse_cartan_type("E8")).back()), "chi_112");
}
