#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "weylsheaf/relative_weyl.hpp"
#include "weylsheaf/verify.hpp"

using namespace weylsheaf;

namespace {

SubsetJ nodes(std::vector<int> bourbaki) {
    for (int& i : bourbaki) --i;
    return SubsetJ::from_indices(bourbaki);
}

RelativeWeylGroup relative(const char* type, std::vector<int> levi) {
    return relative_weyl_group(RootSystem(parse_cartan_type(type)), nodes(std::move(levi)));
}

/// |N_W(W_J)| by conjugating the whole subgroup W_J, on explicit root permutations.
std::size_t naive_normalizer_order(char family, int rank, const std::vector<int>& levi) {
    const auto gens = oracle::reflection_permutations(oracle::simple_roots(family, rank));
    const auto W = oracle::closure(gens);
    std::vector<oracle::Perm> parabolic_gens;
    for (int j : levi) parabolic_gens.push_back(gens[static_cast<std::size_t>(j - 1)]);
    const auto WJ = parabolic_gens.empty() ? std::vector<oracle::Perm>{W.front()} : oracle::closure(parabolic_gens);
    const std::set<oracle::Perm> sub(WJ.begin(), WJ.end());
    std::size_t n = 0;
    for (const auto& g : W) {
        const auto gi = oracle::invert(g);
        bool ok = true;
        for (const auto& x : parabolic_gens)
            if (!sub.count(oracle::compose(oracle::compose(g, x), gi))) {
                ok = false;
                break;
            }
        n += ok;
    }
    return n;
}

} // namespace

TEST(RelativeWeyl, ExceptionalFixtures) {
    EXPECT_EQ(relative("F4", {2, 3}).identified_type.name(), "B2");
    EXPECT_EQ(relative("E6", {2, 3, 4, 5}).identified_type.name(), "A2");
    EXPECT_EQ(relative("E7", {2, 3, 4, 5}).identified_type.name(), "C3");
    EXPECT_EQ(relative("E7", {1, 2, 3, 4, 5, 6}).identified_type.name(), "A1");
    EXPECT_EQ(relative("E8", {2, 3, 4, 5}).identified_type.name(), "F4");
    EXPECT_EQ(relative("E8", {1, 2, 3, 4, 5, 6}).identified_type.name(), "G2");
    EXPECT_EQ(relative("E8", {1, 2, 3, 4, 5, 6, 7}).identified_type.name(), "A1");
}

TEST(RelativeWeyl, ClassicalTailsGiveTypeB) {
    for (int k = 1; k <= 6; ++k) {
        const std::string expect = k == 1 ? "A1" : "B" + std::to_string(k);
        for (auto [family, m] : {std::pair{'B', 2}, std::pair{'B', 6}, std::pair{'C', 2}, std::pair{'D', 4}, std::pair{'D', 16}}) {
            std::vector<int> tail;
            for (int i = k + 1; i <= m + k; ++i) tail.push_back(i);
            const std::string ambient = std::string(1, family) + std::to_string(m + k);
            EXPECT_EQ(relative(ambient.c_str(), tail).identified_type.name(), expect) << ambient;
        }
    }
}

TEST(RelativeWeyl, E7OverD4CoxeterMatrix) {
    const auto g = relative("E7", {2, 3, 4, 5});
    ASSERT_EQ(g.complement, (std::vector<int>{0, 5, 6}));
    EXPECT_EQ(g.coxeter_matrix[0][1], 3);
    EXPECT_EQ(g.coxeter_matrix[1][2], 4);
    EXPECT_EQ(g.coxeter_matrix[0][2], 2);
}

TEST(RelativeWeyl, EmptyLeviReproducesAmbient) {
    for (const char* name : {"E8", "F4", "G2", "B5", "D6", "A4"}) {
        RootSystem rs(parse_cartan_type(name));
        const auto g = relative_weyl_group(rs, SubsetJ{});
        EXPECT_EQ(g.identified_type.name(), parse_cartan_type(name).name());
        EXPECT_EQ(g.coxeter_matrix, rs.coxeter_matrix(SubsetJ::full(rs.rank())));
        for (std::size_t k = 0; k < g.generators.size(); ++k) EXPECT_EQ(g.words[k], std::vector<int>{g.complement[k]});
    }
}

TEST(RelativeWeyl, GeneratorsAreInvolutionsStabilizingJ) {
    for (const char* name : {"E6", "E7", "E8", "F4", "B6", "D8"}) {
        RootSystem rs(parse_cartan_type(name));
        for (SubsetJ J : verify::cuspidal_subsets(rs)) {
            for (int h = 0; h < rs.rank(); ++h) {
                if (J.contains(h)) continue;
                const WeylElement s = sigma(rs, J, h);
                EXPECT_TRUE((s * s).is_identity());
                EXPECT_EQ(s.length(), nu(rs, J.with(h)) - nu(rs, J));
                // w(alpha_j) for j in J is a simple root of J, up to sign
                for (int j : J.indices()) {
                    int img = s(static_cast<std::size_t>(j));
                    if (!rs.is_positive(img)) img = rs.negative(img);
                    EXPECT_TRUE(img < rs.rank() && J.contains(img)) << name;
                }
            }
        }
    }
}

TEST(RelativeWeyl, OrderFormulaIsACrystallographicOrder) {
    for (const char* name : {"E8", "E7", "F4", "B7", "D9"}) {
        RootSystem rs(parse_cartan_type(name));
        for (SubsetJ J : verify::cuspidal_subsets(rs)) {
            const auto g = relative_weyl_group(rs, J);
            for (std::size_t a = 0; a < g.complement.size(); ++a)
                for (std::size_t b = a + 1; b < g.complement.size(); ++b) {
                    const Rational f = order_formula(rs, J, g.complement[a], g.complement[b]);
                    ASSERT_EQ(f.denominator(), 1);
                    EXPECT_TRUE(f.numerator() == 2 || f.numerator() == 3 || f.numerator() == 4 || f.numerator() == 6);
                    EXPECT_EQ(f.numerator(), element_order(g.generators[a] * g.generators[b]));
                }
        }
    }
}

TEST(RelativeWeyl, NormalizerAgainstSubgroupConjugation) {
    struct Case {
        char family;
        int rank;
        std::vector<int> levi;
    };
    for (const Case& c : {Case{'B', 3, {2, 3}}, Case{'B', 4, {3, 4}}, Case{'F', 4, {2, 3}}, Case{'G', 2, {}}, Case{'C', 4, {3, 4}},
                          Case{'D', 5, {2, 3, 4, 5}}}) {
        const std::string name = std::string(1, c.family) + std::to_string(c.rank);
        RootSystem rs(parse_cartan_type(name));
        const auto report = normalizer_complement_check(rs, nodes(c.levi));
        EXPECT_EQ(report.normalizer_order, naive_normalizer_order(c.family, c.rank, c.levi)) << name;
        EXPECT_TRUE(report.holds()) << name;
        EXPECT_EQ(report.normalizer_order, report.parabolic_order * report.relative_order);
    }
}

TEST(RelativeWeyl, ProjectedNorms) {
    // F4 over B2 on {2,3}: alpha_1 keeps its long norm, alpha_4 projects to half its norm
    RootSystem rs(parse_cartan_type("F4"));
    const SubsetJ J = nodes({2, 3});
    EXPECT_EQ(projected_norm(rs, J, 0), Rational(rs.gram()[0][0]) / 2);
    EXPECT_EQ(projected_norm(rs, J, 3), Rational(rs.gram()[3][3]) / 2);
    EXPECT_EQ(projected_norm(rs, SubsetJ{}, 0), Rational(rs.gram()[0][0]));
}

TEST(RelativeWeyl, HypothesisViolations) {
    RootSystem f4(parse_cartan_type("F4"));
    EXPECT_THROW(relative_weyl_group(f4, nodes({1, 2})), CuspidalityViolation);   // A2
    EXPECT_THROW(relative_weyl_group(f4, nodes({1})), CuspidalityViolation);      // A1
    EXPECT_THROW(sigma(f4, nodes({2, 3}), 1), InputError);                        // h in J
    EXPECT_THROW(sigma(f4, nodes({2, 3}), 7), InputError);
    EXPECT_THROW(order_formula(f4, nodes({2, 3}), 0, 0), InputError);
    EXPECT_THROW(relative_weyl_group(f4, SubsetJ(std::uint64_t{1} << 5)), InputError);
    RootSystem e7(parse_cartan_type("E7"));
    EXPECT_THROW(normalizer_complement_check(e7, nodes({2, 3, 4, 5}), group::Bounds{1000, 1000}), BoundExceeded);
}
