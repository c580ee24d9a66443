#include <gtest/gtest.h>

#include <numeric>

#include "weylsheaf/cuspidal.hpp"

using namespace weylsheaf;

namespace {

std::vector<std::string> names(const CartanType& t) {
    std::vector<std::string> out;
    for (const auto& z : cuspidal_set(t)) out.push_back(to_string(z));
    return out;
}

std::size_t count_of(const char* t) { return cuspidal_set(parse_cartan_type(t)).size(); }

} // namespace

TEST(Cuspidal, SetSizes) {
    for (int n = 1; n <= 20; ++n) EXPECT_EQ(count_of(("A" + std::to_string(n)).c_str()), 0u);
    EXPECT_EQ(count_of("B6"), 1u);
    EXPECT_EQ(count_of("D16"), 1u);
    EXPECT_EQ(count_of("E6"), 2u);
    EXPECT_EQ(count_of("E7"), 2u);
    EXPECT_EQ(count_of("F4"), 7u);
    EXPECT_EQ(count_of("G2"), 4u);
    EXPECT_EQ(count_of("E8"), 13u);
    EXPECT_EQ(count_of("1"), 1u);
}

TEST(Cuspidal, ClassicalRanksWithACuspidal) {
    // B_n, C_n: n = s^2 + s; D_n: n = 4 s^2
    std::set<int> bc, d;
    for (int s = 1; s * s + s <= 300; ++s) bc.insert(s * s + s);
    for (int s = 1; 4 * s * s <= 300; ++s) d.insert(4 * s * s);
    for (int n = 2; n <= 300; ++n) {
        EXPECT_EQ(cuspidal_count(Factor{Family::B, n}), bc.count(n)) << n;
        if (n >= 3) {
            EXPECT_EQ(cuspidal_count(Factor{Family::C, n}), bc.count(n)) << n;
        }
        if (n >= 4) {
            EXPECT_EQ(cuspidal_count(Factor{Family::D, n}), d.count(n)) << n;
        }
    }
}

TEST(Cuspidal, ClassicalSigns) {
    // (-1)^{(s^2+s)/2} for B/C, (-1)^s for D
    for (int s = 1; s <= 8; ++s) {
        const int n = s * s + s;
        const auto z = cuspidal_labels(Factor{Family::B, n});
        ASSERT_EQ(z.size(), 1u);
        EXPECT_EQ(z[0].order(), ((n / 2) % 2) ? 2 : 1) << "B" << n;
        const auto zd = cuspidal_labels(Factor{Family::D, 4 * s * s});
        ASSERT_EQ(zd.size(), 1u);
        EXPECT_EQ(zd[0].order(), s % 2 ? 2 : 1) << "D" << 4 * s * s;
    }
    EXPECT_EQ(names(parse_cartan_type("B6")), std::vector<std::string>{"-1"});
    EXPECT_EQ(names(parse_cartan_type("B2")), std::vector<std::string>{"-1"});
    EXPECT_EQ(names(parse_cartan_type("D16")), std::vector<std::string>{"1"});
    EXPECT_EQ(names(parse_cartan_type("D4")), std::vector<std::string>{"-1"});
}

TEST(Cuspidal, E8LabelsAreRootsOfItsPolynomial) {
    // (z^4-1)(z^5-1)(z^6-1)/(z^2-1) has degree 13; its roots with multiplicity are the labels
    const auto z = cuspidal_labels(Factor{Family::E, 8});
    ASSERT_EQ(z.size(), 13u);
    std::map<int, int> by_order;
    for (const auto& l : z) ++by_order[l.order()];
    EXPECT_EQ(by_order[1], 2);  // 1' and 1''
    EXPECT_EQ(by_order[2], 1);
    EXPECT_EQ(by_order[3], 2);
    EXPECT_EQ(by_order[4], 2);
    EXPECT_EQ(by_order[5], 4);
    EXPECT_EQ(by_order[6], 2);
    // the multiset of roots of z^4-1, z^5-1, z^6-1 minus those of z^2-1, by order
    std::map<int, int> expect;
    for (int m : {4, 5, 6})
        for (int k = 0; k < m; ++k) ++expect[m / std::gcd(m, k)];
    for (int k = 0; k < 2; ++k) --expect[2 / std::gcd(2, k)];
    for (auto [order, mult] : expect) EXPECT_EQ(by_order[order], mult) << order;
}

TEST(Cuspidal, ExceptionalLabelText) {
    EXPECT_EQ(names(parse_cartan_type("G2")), (std::vector<std::string>{"1", "-1", "zeta(3,1)", "zeta(3,2)"}));
    EXPECT_EQ(names(parse_cartan_type("E6")), (std::vector<std::string>{"zeta(3,1)", "zeta(3,2)"}));
    EXPECT_EQ(names(parse_cartan_type("E7")), (std::vector<std::string>{"zeta(4,1)", "zeta(4,3)"}));
    EXPECT_EQ(names(parse_cartan_type("F4")),
              (std::vector<std::string>{"1'", "1''", "-1", "zeta(3,1)", "zeta(3,2)", "zeta(4,1)", "zeta(4,3)"}));
}

TEST(Cuspidal, ProductsAndParsing) {
    const auto set = cuspidal_set(parse_cartan_type("G2+B2"));
    EXPECT_EQ(set.size(), 4u);
    EXPECT_EQ(cuspidal_count(parse_cartan_type("E8+E8+F4")), 13u * 13u * 7u);
    EXPECT_FALSE(has_cuspidal(parse_cartan_type("E8+A1")));
    for (const auto& z : cuspidal_set(parse_cartan_type("E8+G2"))) EXPECT_EQ(parse_zeta_label(to_string(z)), z);
    EXPECT_EQ(parse_cuspidal_label("i"), CuspidalLabel(4, 1));
    EXPECT_EQ(parse_cuspidal_label("-i"), CuspidalLabel(4, 3));
    EXPECT_EQ(CuspidalLabel(6, 3), CuspidalLabel(2, 1));
    EXPECT_EQ(CuspidalLabel(3, -1), CuspidalLabel(3, 2));
    EXPECT_THROW(parse_cuspidal_label("zeta(0,1)"), InputError);
    EXPECT_THROW(parse_cuspidal_label("banana"), InputError);
    EXPECT_THROW(CuspidalLabel(3, 1, PrimeMark::prime), InputError);
}
