#include <gtest/gtest.h>

#include "oracles.hpp"
#include "weylsheaf/group.hpp"
#include "weylsheaf/root_system.hpp"
#include "weylsheaf/weyl_rep.hpp"

using namespace weylsheaf;

namespace {

std::vector<Factor> sample_types() {
    std::vector<Factor> t;
    for (int n = 1; n <= 9; ++n) t.push_back({Family::A, n});
    for (int n = 2; n <= 9; ++n) t.push_back({Family::B, n});
    for (int n = 3; n <= 9; ++n) t.push_back({Family::C, n});
    for (int n = 4; n <= 9; ++n) t.push_back({Family::D, n});
    for (int n = 6; n <= 8; ++n) t.push_back({Family::E, n});
    t.push_back({Family::F, 4});
    t.push_back({Family::G, 2});
    return t;
}

} // namespace

TEST(RootSystem, RootCountsAgreeWithExplicitReflectionClosure) {
    for (Factor f : sample_types()) {
        RootSystem rs(CartanType({f}));
        const auto roots = oracle::root_closure(oracle::simple_roots(static_cast<char>(f.family), f.rank));
        EXPECT_EQ(static_cast<std::size_t>(rs.root_count()), roots.size()) << f.name();
        EXPECT_EQ(static_cast<std::uint64_t>(rs.positive_count()), nu_closed_form(f)) << f.name();
    }
}

TEST(RootSystem, ExceptionalReflectionCounts) {
    // 2*3*4 and 4*5*6
    EXPECT_EQ(RootSystem(parse_cartan_type("F4")).positive_count(), 24);
    EXPECT_EQ(RootSystem(parse_cartan_type("E8")).positive_count(), 120);
    EXPECT_EQ(RootSystem(parse_cartan_type("E6")).positive_count(), 36);
    EXPECT_EQ(RootSystem(parse_cartan_type("E7")).positive_count(), 63);
    EXPECT_EQ(RootSystem(parse_cartan_type("G2")).positive_count(), 6);
}

TEST(RootSystem, CartanMatrixMatchesBourbakiCoordinates) {
    for (Factor f : sample_types()) {
        RootSystem rs(CartanType({f}));
        const auto simple = oracle::simple_roots(static_cast<char>(f.family), f.rank);
        const auto expect = oracle::cartan_matrix(simple);
        for (std::size_t i = 0; i < expect.size(); ++i)
            for (std::size_t j = 0; j < expect.size(); ++j)
                EXPECT_EQ(rs.cartan_matrix()[i][j], expect[i][j]) << f.name() << " a" << i + 1 << j + 1;
        // Gram matrices proportional
        for (std::size_t i = 0; i < expect.size(); ++i)
            for (std::size_t j = 0; j < expect.size(); ++j)
                EXPECT_EQ(rs.gram()[i][j] * oracle::dot(simple[0], simple[0]), oracle::dot(simple[i], simple[j]) * rs.gram()[0][0])
                    << f.name();
    }
}

TEST(RootSystem, SimpleRootsFirstAndNegativesPaired) {
    RootSystem rs(parse_cartan_type("F4"));
    for (int i = 0; i < rs.rank(); ++i) {
        auto c = rs.root(i);
        for (int j = 0; j < rs.rank(); ++j) EXPECT_EQ(c[static_cast<std::size_t>(j)], i == j ? 1 : 0);
    }
    for (int r = 0; r < rs.root_count(); ++r) {
        auto a = rs.root(r);
        auto b = rs.root(rs.negative(r));
        for (int j = 0; j < rs.rank(); ++j) EXPECT_EQ(a[static_cast<std::size_t>(j)], -b[static_cast<std::size_t>(j)]);
        EXPECT_EQ(rs.is_positive(r), !rs.is_positive(rs.negative(r)));
    }
}

TEST(RootSystem, CoxeterMatrixFromCartanEntries) {
    const std::map<int, int> by_product = {{0, 2}, {1, 3}, {2, 4}, {3, 6}};
    for (Factor f : sample_types()) {
        RootSystem rs(CartanType({f}));
        const auto m = rs.coxeter_matrix(SubsetJ::full(rs.rank()));
        const auto& A = rs.cartan_matrix();
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j) {
                const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
                const int expect = i == j ? 1 : by_product.at(A[ui][uj] * A[uj][ui]);
                EXPECT_EQ(m[ui][uj], expect) << f.name();
                // and as the order of s_i s_j on the roots
                EXPECT_EQ(element_order(rs.simple_reflection(i) * rs.simple_reflection(j)), expect) << f.name();
            }
    }
}

TEST(RootSystem, LongestElementsOfAllSubsets) {
    for (const char* name : {"F4", "E6", "B4", "D5", "G2"}) {
        RootSystem rs(parse_cartan_type(name));
        for (SubsetJ J : all_subsets(rs.rank())) {
            const WeylElement w = longest_element(rs, J);
            // positive roots supported in J, counted directly
            int inside = 0;
            for (int r = 0; r < rs.positive_count(); ++r) {
                auto c = rs.root(r);
                bool ok = true;
                for (int i = 0; i < rs.rank(); ++i)
                    if (c[static_cast<std::size_t>(i)] != 0 && !J.contains(i)) ok = false;
                inside += ok;
            }
            EXPECT_EQ(w.length(), inside) << name << " " << J.bits();
            EXPECT_EQ(nu(rs, J), inside);
            EXPECT_TRUE((w * w).is_identity());
            for (int j : J.indices()) EXPECT_FALSE(rs.is_positive(w(static_cast<std::size_t>(j))));
        }
    }
}

TEST(RootSystem, WordsRoundTrip) {
    RootSystem rs(parse_cartan_type("E6"));
    const WeylElement w = rs.from_word(std::vector<int>{0, 2, 3, 1, 4, 5, 3, 2});
    const auto word = reduced_word(rs, w);
    EXPECT_EQ(static_cast<int>(word.size()), w.length());
    EXPECT_TRUE(rs.from_word(word) == w);
    EXPECT_TRUE(reduced_word(rs, rs.identity()).empty());
}

TEST(WeylGroup, OrdersMatchExplicitPermutationGroups) {
    for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4", "A1+A2"}) {
        const CartanType t = parse_cartan_type(name);
        const auto store = group::enumerate(group::weyl_group(t));
        EXPECT_EQ(store.size(), group_order(t)) << name;
    }
    for (Factor f : {Factor{Family::B, 4}, Factor{Family::F, 4}, Factor{Family::E, 6}}) {
        const auto gens = oracle::reflection_permutations(oracle::simple_roots(static_cast<char>(f.family), f.rank));
        EXPECT_EQ(oracle::closure(gens).size(), group_order(CartanType({f}))) << f.name();
    }
}

TEST(WeylGroup, DegreeProducts) {
    EXPECT_EQ(group_order(parse_cartan_type("E8")), 696729600u);
    EXPECT_EQ(group_order(parse_cartan_type("E7")), 2903040u);
    EXPECT_EQ(group_order(parse_cartan_type("E6")), 51840u);
    EXPECT_EQ(group_order(parse_cartan_type("F4")), 1152u);
    EXPECT_EQ(group_order(parse_cartan_type("D4")), 192u);
    EXPECT_EQ(group_order(parse_cartan_type("A4")), 120u);
}

TEST(CartanType, ParsingAndCanonicalForm) {
    EXPECT_EQ(parse_cartan_type("G2+A1").name(), "A1+G2");
    EXPECT_EQ(parse_cartan_type("A1xA1").name(), "A1+A1");
    EXPECT_EQ(parse_cartan_type("C2").name(), "B2");
    EXPECT_EQ(parse_cartan_type("D3").name(), "A3");
    EXPECT_EQ(parse_cartan_type("B1").name(), "A1");
    EXPECT_EQ(parse_cartan_type("1").name(), "1");
    EXPECT_TRUE(parse_cartan_type("A0").is_trivial());
    EXPECT_EQ(parse_cartan_type(" e8 ").name(), "E8");
    for (const char* bad : {"", "X3", "E9", "E5", "F3", "G3", "A", "B2+", "A1++A2", "A-1"})
        EXPECT_THROW(parse_cartan_type(bad), InputError) << "'" << bad << "'";
}

TEST(Diagram, IdentifiesEveryIrreducibleType) {
    for (Factor f : sample_types()) {
        RootSystem rs(CartanType({f}));
        EXPECT_EQ(subdiagram_type(rs, SubsetJ::full(rs.rank())), CartanType({f})) << f.name();
    }
}

TEST(Diagram, SubdiagramsOfE8) {
    RootSystem rs(parse_cartan_type("E8"));
    EXPECT_EQ(subdiagram_type(rs, SubsetJ::from_indices(std::vector<int>{1, 2, 3, 4})).name(), "D4");
    EXPECT_EQ(subdiagram_type(rs, SubsetJ::from_indices(std::vector<int>{0, 1, 2, 3, 4, 5})).name(), "E6");
    EXPECT_EQ(subdiagram_type(rs, SubsetJ::from_indices(std::vector<int>{0, 2, 6, 7})).name(), "A2+A2");
    EXPECT_EQ(subdiagram_type(rs, SubsetJ{}).name(), "1");
}

TEST(Diagram, ShortAndLongNodesOfB3C3) {
    // B3: node 3 short; C3: node 3 long
    RootSystem b(parse_cartan_type("B3")), c(parse_cartan_type("C3"));
    EXPECT_LT(b.gram()[2][2], b.gram()[0][0]);
    EXPECT_GT(c.gram()[2][2], c.gram()[0][0]);
    EXPECT_EQ(subdiagram_type(b, SubsetJ::from_indices(std::vector<int>{1, 2})).name(), "B2");
    EXPECT_EQ(subdiagram_type(c, SubsetJ::from_indices(std::vector<int>{1, 2})).name(), "B2");
}
