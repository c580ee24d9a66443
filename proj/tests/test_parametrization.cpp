#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "weylsheaf/parametrization.hpp"
#include "weylsheaf/serialize.hpp"

using namespace weylsheaf;

namespace {

std::uint64_t count(const char* t) { return count_parameters(parse_cartan_type(t)); }

std::multiset<std::uint64_t> series_sizes(const char* t) {
    std::multiset<std::uint64_t> s;
    for (const auto& e : series_report(parse_cartan_type(t)).series) s.insert(e.count);
    return s;
}

} // namespace

TEST(Parametrization, FixedTotals) {
    EXPECT_EQ(count("G2"), 10u);
    EXPECT_EQ(count("F4"), 37u);
    EXPECT_EQ(count("E6"), 30u);
    EXPECT_EQ(count("E7"), 76u);
    EXPECT_EQ(count("E8"), 166u);
    EXPECT_EQ(count("B2"), 6u);
    EXPECT_EQ(count("B3"), 12u);
    EXPECT_EQ(count("1"), 1u);
}

TEST(Parametrization, TypeAIsPartitions) {
    for (int n = 2; n <= 12; ++n) {
        const CartanType t = parse_cartan_type("A" + std::to_string(n - 1));
        EXPECT_EQ(count_parameters(t), oracle::partitions(n)) << n;
        const auto all = enumerate_parameters(t);
        EXPECT_EQ(all.size(), oracle::partitions(n));
        for (const auto& p : all) EXPECT_EQ(p.J(), SubsetJ{});
    }
}

TEST(Parametrization, ClassicalTotalsAgainstDirectSum) {
    // sum over J with a cuspidal Levi of |cuspidal labels| * |Irr W^{S/J}|, with the relative type from the series
    for (const char* t : {"B4", "B6", "C5", "D4", "D6", "D9"}) {
        std::uint64_t sum = 0;
        for (const auto& s : series_report(parse_cartan_type(t)).series) {
            EXPECT_EQ(s.count, irr_count(s.relative));
            sum += s.count;
        }
        EXPECT_EQ(sum, count(t)) << t;
    }
}

TEST(Parametrization, StreamLengthEqualsCount) {
    for (const char* t : {"G2", "F4", "E6", "E7", "E8", "B5", "C6", "D8", "A1+G2", "B2+B2", "1", "E6+A2"}) {
        const CartanType type = parse_cartan_type(t);
        std::uint64_t n = 0;
        for_each_parameter(type, [&](const SheafParameter&) { ++n; });
        EXPECT_EQ(n, count_parameters(type)) << t;
        EXPECT_EQ(series_report(type).total, n) << t;
    }
}

TEST(Parametrization, ProductLaw) {
    EXPECT_EQ(count("A2+G2"), count("A2") * count("G2"));
    EXPECT_EQ(count("B2+B2"), count("B2") * count("B2"));
    EXPECT_EQ(count("E8+F4"), 166u * 37u);
    EXPECT_EQ(enumerate_parameters(parse_cartan_type("A2+G2")).size(), 30u);
}

TEST(Parametrization, SeriesStructure) {
    EXPECT_EQ(series_sizes("F4"), (std::multiset<std::uint64_t>{25, 5, 1, 1, 1, 1, 1, 1, 1}));
    std::multiset<std::uint64_t> e8{112, 25, 6, 6, 2, 2};
    for (int i = 0; i < 13; ++i) e8.insert(1);
    EXPECT_EQ(series_sizes("E8"), e8);
    const auto g2 = series_report(parse_cartan_type("G2"));
    ASSERT_EQ(g2.series.size(), 5u);
    EXPECT_EQ(g2.series[0].count, 6u);
    const auto trivial = series_report(parse_cartan_type("1"));
    ASSERT_EQ(trivial.series.size(), 1u);
    EXPECT_EQ(trivial.total, 1u);
}

TEST(Parametrization, InvariantsOfEveryParameter) {
    for (const char* t : {"F4", "E7", "B6", "D4", "G2+B2"}) {
        const CartanType type = parse_cartan_type(t);
        RootSystem rs(type);
        for_each_parameter(type, [&](const SheafParameter& p) {
            EXPECT_EQ(p.levi(), subdiagram_type(rs, p.J()));
            for (const auto& part : p.parts) {
                const auto cs = cuspidal_set(part.levi);
                EXPECT_NE(std::find(cs.begin(), cs.end(), part.zeta), cs.end());
                const auto eps = irr_labels(part.relative);
                EXPECT_NE(std::find(eps.begin(), eps.end(), part.epsilon), eps.end());
            }
            if (p.J() == SubsetJ::full(rs.rank())) {
                EXPECT_TRUE(p.relative().is_trivial());
                EXPECT_EQ(p.epsilon_string().find_first_not_of("1(;)"), std::string::npos);
            }
        });
    }
}

TEST(Parametrization, DocumentedOrder) {
    for (const char* t : {"E8", "F4", "B2+G2", "D4+D4"}) {
        const auto all = enumerate_parameters(parse_cartan_type(t));
        for (std::size_t i = 1; i < all.size(); ++i) EXPECT_FALSE(all[i].J() < all[i - 1].J()) << t << " at " << i;
    }
    // within one J, zeta tuples first, then epsilon
    const auto b2 = enumerate_parameters(parse_cartan_type("B2"));
    ASSERT_EQ(b2.size(), 6u);
    EXPECT_EQ(b2.back().zeta_string(), "-1");
}

TEST(Parametrization, NoRepeatedLeviTypes) {
    for (const char* t : {"E6", "E7", "E8", "F4", "G2", "B8", "C8", "D8"}) {
        std::set<std::string> seen;
        for (const auto& s : series_report(parse_cartan_type(t)).series)
            if (s.zeta.front() == cuspidal_set(s.levi).front()) {
                EXPECT_TRUE(seen.insert(s.levi.name()).second) << t << " " << s.levi.name();
            }
    }
}

TEST(Parametrization, EmbedCuspidal) {
    const auto g2 = parse_cartan_type("G2");
    const auto p = embed_cuspidal(g2, parse_zeta_label("-1"));
    EXPECT_EQ(p.J(), SubsetJ::full(2));
    EXPECT_EQ(p.zeta_string(), "-1");
    EXPECT_EQ(p.epsilon_string(), "1");
    const auto all = enumerate_parameters(g2);
    EXPECT_NE(std::find(all.begin(), all.end(), p), all.end());

    const auto e8 = parse_cartan_type("E8");
    const auto q = embed_cuspidal(e8, parse_zeta_label("1'"));
    EXPECT_EQ(q.zeta_string(), "1'");
    const auto e8all = enumerate_parameters(e8);
    EXPECT_NE(std::find(e8all.begin(), e8all.end(), q), e8all.end());

    EXPECT_THROW(embed_cuspidal(parse_cartan_type("A2"), parse_zeta_label("1")), LabelNotCuspidal);
    EXPECT_THROW(embed_cuspidal(g2, parse_zeta_label("zeta(5,1)")), LabelNotCuspidal);
    EXPECT_NO_THROW(embed_cuspidal(parse_cartan_type("G2+B2"), parse_zeta_label("(-1;-1)")));
}

TEST(Serialization, JsonShape) {
    const auto all = enumerate_parameters(parse_cartan_type("E8"));
    const Json j = to_json(all[112]);
    EXPECT_EQ(j.dump(), R"({"ambient":"E8","J":[2,3,4,5],"levi":"D4","zeta":"-1","relative":"F4","epsilon":"chi_1"})");
    const auto prod = enumerate_parameters(parse_cartan_type("A1+G2"));
    const Json k = to_json(prod.front());
    ASSERT_TRUE(k.contains("components"));
    EXPECT_EQ(k["components"].size(), 2u);
    EXPECT_EQ(k["components"][1]["tag"], "G2#2");
    const Json r = to_json(series_report(parse_cartan_type("G2")));
    EXPECT_EQ(r["total"], 10);
    EXPECT_EQ(r["series"].size(), 5u);
}

TEST(Serialization, Csv) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    const auto b2 = enumerate_parameters(parse_cartan_type("B2"));
    EXPECT_EQ(csv_row(b2.back()), "B2,1 2,B2,-1,1,1");
    EXPECT_EQ(csv_row(b2[1]), "B2,,1,1,B2,\"[1,1|]\"");
}
