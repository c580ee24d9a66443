#include <gtest/gtest.h>

#include "weylsheaf/e8_classes.hpp"
#include "weylsheaf/weyl_rep.hpp"

using namespace weylsheaf;

TEST(Census, CentralizersMatchEnumeration) {
    for (const char* t : {"G2", "B3", "F4"}) {
        RootSystem rs(parse_cartan_type(t));
        const census::RootGeometry geo(rs);
        const auto W = group::weyl_group(rs.cartan_type());
        const auto store = group::enumerate(W);
        const auto part = group::conjugacy_classes(W, store);
        for (const auto& c : part.classes) {
            const WeylElement w = W.rep().to_element(c.rep);
            EXPECT_EQ(census::centralizer_order(geo, w) * c.size, store.size()) << t;
        }
    }
}

TEST(Census, ConjugacyTestAgreesWithClassMap) {
    RootSystem rs(parse_cartan_type("F4"));
    const census::RootGeometry geo(rs);
    const auto W = group::weyl_group(rs.cartan_type());
    const auto store = group::enumerate(W);
    const auto part = group::conjugacy_classes(W, store);
    for (std::size_t a = 0; a < store.size(); a += 37)
        for (std::size_t b = 5; b < store.size(); b += 53) {
            const bool same = part.class_of[a] == part.class_of[b];
            EXPECT_EQ(census::conjugate(geo, W.rep().to_element(store[a]), W.rep().to_element(store[b])), same);
        }
}

TEST(Census, ClassCountsOfEnumerableTypes) {
    for (const char* t : {"G2", "B3", "C4", "F4", "B5", "E7"}) {
        RootSystem rs(parse_cartan_type(t));
        const auto c = census::class_census(rs, 1'000'000);
        EXPECT_TRUE(c.complete()) << t;
        EXPECT_EQ(c.classes.size(), irr_count(rs.cartan_type())) << t;
    }
}

TEST(Census, RefusesTypesWithDiagramAutomorphisms) {
    for (const char* t : {"A3", "D4", "E6", "B2+G2"}) EXPECT_THROW(census::class_census(RootSystem(parse_cartan_type(t)), 10), InputError);
}

TEST(Census, E8ClassCount) {
    const auto r = verify::e8_class_count(verify::Options{});
    EXPECT_TRUE(r.passed) << r.detail;
}
