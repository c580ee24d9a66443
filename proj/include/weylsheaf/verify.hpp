#pragma once

// Invariant checks behind `weylsheaf verify`. Each check returns a named
// pass/fail result with a short detail line; exceptions are caught and
// reported as failures.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "weylsheaf/cartan_type.hpp"
#include "weylsheaf/character_table.hpp"
#include "weylsheaf/cuspidal.hpp"
#include "weylsheaf/irr_labels.hpp"
#include "weylsheaf/parametrization.hpp"
#include "weylsheaf/partitions.hpp"
#include "weylsheaf/permutation_rep.hpp"
#include "weylsheaf/relative_weyl.hpp"
#include "weylsheaf/root_system.hpp"
#include "weylsheaf/serialize.hpp"
#include "weylsheaf/weyl_rep.hpp"

namespace weylsheaf::verify {

struct Options {
    int max_rank = 8;           // exceptional and small classical types
    int classical_max_rank = 12;
    bool heavy = false;
    group::Bounds bounds{};
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Irreducible types of rank <= max_rank, plus B, C, D up to classical_max_rank.
inline std::vector<CartanType> irreducible_types(int max_rank, int classical_max_rank) {
    std::vector<CartanType> out;
    auto add = [&](Family f, int n) { out.push_back(CartanType::single(f, n)); };
    for (int n = 1; n <= max_rank; ++n) add(Family::A, n);
    for (int n = 2; n <= std::max(max_rank, classical_max_rank); ++n) add(Family::B, n);
    for (int n = 3; n <= std::max(max_rank, classical_max_rank); ++n) add(Family::C, n);
    for (int n = 4; n <= std::max(max_rank, classical_max_rank); ++n) add(Family::D, n);
    for (int n = 6; n <= std::min(max_rank, 8); ++n) add(Family::E, n);
    if (max_rank >= 4) add(Family::F, 4);
    if (max_rank >= 2) add(Family::G, 2);
    return out;
}

/// Subsets J whose cuspidal set is nonempty.
inline std::vector<SubsetJ> cuspidal_subsets(const RootSystem& rs) {
    std::vector<SubsetJ> out;
    for (SubsetJ J : all_subsets(rs.rank()))
        if (has_cuspidal(subdiagram_type(rs, J))) out.push_back(J);
    return out;
}

inline CheckResult run_check(const std::string& name, const std::function<std::string(bool&)>& body) {
    CheckResult r{name, false, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
        bool ok = true;
        r.detail = body(ok);
        r.passed = ok;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline std::string fail_note(std::string& first, const std::string& msg) {
    if (first.empty()) first = msg;
    return first;
}

// ---- coxeter-core ---------------------------------------------------------

inline CheckResult root_counts(const Options& o) {
    return run_check("positive root counts match closed forms", [&](bool& ok) {
        std::string note;
        int n = 0;
        for (const auto& t : irreducible_types(o.max_rank, o.classical_max_rank)) {
            RootSystem rs(t);
            ++n;
            if (static_cast<std::uint64_t>(rs.positive_count()) != nu_closed_form(t)) {
                ok = false;
                fail_note(note, t.name() + ": " + std::to_string(rs.positive_count()));
            }
            for (int r = 0; r < rs.positive_count(); ++r)
                for (int c : rs.root(r))
                    if (c < 0) {
                        ok = false;
                        fail_note(note, t.name() + ": negative coordinate in a positive root");
                    }
        }
        return ok ? std::to_string(n) + " types" : note;
    });
}

inline CheckResult longest_elements(const Options& o) {
    return run_check("longest elements: involutions of length nu(J); subdiagram root counts", [&](bool& ok) {
        std::string note;
        std::uint64_t subsets = 0;
        for (const auto& t : irreducible_types(o.max_rank, o.classical_max_rank)) {
            RootSystem rs(t);
            for (SubsetJ J : all_subsets(rs.rank())) {
                ++subsets;
                const WeylElement w = longest_element(rs, J);
                const int nj = nu(rs, J);
                if (!(w * w).is_identity() || w.length() != nj || static_cast<int>(w.word().size()) != nj) {
                    ok = false;
                    fail_note(note, t.name() + " J=" + std::to_string(J.bits()) + ": bad longest element");
                }
                if (static_cast<std::uint64_t>(nj) != nu_closed_form(subdiagram_type(rs, J)) ||
                    RootSystem(subdiagram_type(rs, J)).positive_count() != nj) {
                    ok = false;
                    fail_note(note, t.name() + " J=" + std::to_string(J.bits()) + ": subdiagram root count");
                }
            }
        }
        return ok ? std::to_string(subsets) + " subsets" : note;
    });
}

inline CheckResult group_orders(const Options& o) {
    return run_check("simple reflections generate groups of the closed-form order", [&](bool& ok) {
        std::string note;
        int n = 0;
        for (const auto& t : irreducible_types(o.max_rank, o.classical_max_rank)) {
            if (group_order(t) > o.bounds.enumeration) continue;
            RootSystem rs(t);
            const auto store = enumerate_weyl(rs, o.bounds);
            ++n;
            if (store.size() != group_order(t)) {
                ok = false;
                fail_note(note, t.name() + ": enumerated " + std::to_string(store.size()));
            }
        }
        return ok ? std::to_string(n) + " groups enumerated" : note;
    });
}

// ---- relative-weyl --------------------------------------------------------

inline CheckResult order_formula_soundness(const Options& o) {
    return run_check("order formula equals the order of sigma_h sigma_h'", [&](bool& ok) {
        std::string note;
        std::uint64_t pairs = 0;
        for (const auto& t : irreducible_types(o.max_rank, o.classical_max_rank)) {
            RootSystem rs(t);
            for (SubsetJ J : cuspidal_subsets(rs)) {
                std::vector<int> comp;
                for (int h = 0; h < rs.rank(); ++h)
                    if (!J.contains(h)) comp.push_back(h);
                std::vector<WeylElement> sig;
                for (int h : comp) sig.push_back(sigma(rs, J, h));
                for (std::size_t a = 0; a < comp.size(); ++a)
                    for (std::size_t b = a + 1; b < comp.size(); ++b) {
                        ++pairs;
                        const Rational f = order_formula(rs, J, comp[a], comp[b]);
                        const int direct = element_order(sig[a] * sig[b]);
                        const bool crystallographic = f.denominator() == 1 &&
                                                      (f.numerator() == 2 || f.numerator() == 3 || f.numerator() == 4 || f.numerator() == 6);
                        if (!crystallographic || f != Rational(direct)) {
                            ok = false;
                            fail_note(note, t.name() + " J=" + std::to_string(J.bits()) + " h=" + std::to_string(comp[a] + 1) +
                                                " h'=" + std::to_string(comp[b] + 1));
                        }
                    }
            }
        }
        return ok ? std::to_string(pairs) + " pairs" : note;
    });
}

inline CheckResult involution_stability(const Options& o) {
    return run_check("sigma_h involutions; w0(J') stabilizes J for J in J'", [&](bool& ok) {
        std::string note;
        std::uint64_t checks = 0;
        for (const auto& t : irreducible_types(o.max_rank, o.classical_max_rank)) {
            RootSystem rs(t);
            for (SubsetJ J : cuspidal_subsets(rs)) {
                for (int h = 0; h < rs.rank(); ++h) {
                    if (J.contains(h)) continue;
                    const WeylElement s = longest_element(rs, J.with(h)) * longest_element(rs, J);
                    ++checks;
                    if (!(s * s).is_identity()) {
                        ok = false;
                        fail_note(note, t.name() + ": sigma_" + std::to_string(h + 1) + " squared is not 1");
                    }
                }
                // every J' containing J
                const std::uint64_t free = SubsetJ::full(rs.rank()).bits() & ~J.bits();
                for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
                    const SubsetJ Jp(J.bits() | sub);
                    ++checks;
                    if (!permutes_simple(rs, longest_element(rs, Jp), J)) {
                        ok = false;
                        fail_note(note, t.name() + ": w0(" + std::to_string(Jp.bits()) + ") moves J=" + std::to_string(J.bits()));
                    }
                    if (sub == 0) break;
                }
            }
        }
        return ok ? std::to_string(checks) + " checks" : note;
    });
}

inline CheckResult empty_levi_reproduces_ambient(const Options& o) {
    return run_check("J = {} reproduces the ambient Coxeter matrix and type", [&](bool& ok) {
        std::string note;
        for (const auto& t : irreducible_types(o.max_rank, o.classical_max_rank)) {
            RootSystem rs(t);
            const auto g = relative_weyl_group(rs, SubsetJ{});
            if (g.coxeter_matrix != rs.coxeter_matrix(SubsetJ::full(rs.rank())) || !(g.identified_type == t)) {
                ok = false;
                fail_note(note, t.name() + " -> " + g.identified_type.name());
            }
        }
        return ok ? std::string("all types") : note;
    });
}

inline CheckResult levi_irreducible(const Options& o) {
    return run_check("cuspidal Levi subdiagrams are irreducible or trivial; no repeated Levi types", [&](bool& ok) {
        std::string note;
        std::uint64_t n = 0;
        for (const auto& t : irreducible_types(o.max_rank, o.classical_max_rank)) {
            RootSystem rs(t);
            std::map<std::string, int> seen;
            for (SubsetJ J : cuspidal_subsets(rs)) {
                ++n;
                const CartanType levi = subdiagram_type(rs, J);
                if (levi.factors().size() > 1) {
                    ok = false;
                    fail_note(note, t.name() + ": reducible Levi " + levi.name());
                }
                if (++seen[levi.name()] > 1) {
                    ok = false;
                    fail_note(note, t.name() + ": Levi type " + levi.name() + " occurs for two subsets");
                }
            }
        }
        return ok ? std::to_string(n) + " subsets" : note;
    });
}

struct RelativeFixture {
    std::string ambient;
    std::vector<int> levi;  // 1-based
    std::string expected;
};

inline std::vector<RelativeFixture> relative_fixtures() {
    std::vector<RelativeFixture> f = {
        {"F4", {2, 3}, "B2"},
        {"E6", {2, 3, 4, 5}, "A2"},
        {"E7", {2, 3, 4, 5}, "C3"},
        {"E7", {1, 2, 3, 4, 5, 6}, "A1"},
        {"E8", {2, 3, 4, 5}, "F4"},
        {"E8", {1, 2, 3, 4, 5, 6}, "G2"},
        {"E8", {1, 2, 3, 4, 5, 6, 7}, "A1"},
    };
    auto tail = [](int from, int to) {
        std::vector<int> v;
        for (int i = from; i <= to; ++i) v.push_back(i);
        return v;
    };
    for (int k = 1; k <= 6; ++k) {
        const std::string bk = k == 1 ? "A1" : "B" + std::to_string(k);
        for (int m : {2, 6}) f.push_back({"B" + std::to_string(m + k), tail(k + 1, m + k), bk});
        for (int m : {4, 16}) f.push_back({"D" + std::to_string(m + k), tail(k + 1, m + k), bk});
    }
    return f;
}

inline CheckResult relative_types(const Options&) {
    return run_check("relative Weyl group fixtures", [&](bool& ok) {
        std::string note;
        const auto fx = relative_fixtures();
        for (const auto& f : fx) {
            RootSystem rs(parse_cartan_type(f.ambient));
            std::vector<int> idx;
            for (int i : f.levi) idx.push_back(i - 1);
            const auto g = relative_weyl_group(rs, SubsetJ::from_indices(idx));
            if (g.identified_type.name() != f.expected) {
                ok = false;
                fail_note(note, f.ambient + ": got " + g.identified_type.name() + ", expected " + f.expected);
            }
        }
        return ok ? std::to_string(fx.size()) + " fixtures" : note;
    });
}

inline CheckResult normalizer_complements(const Options& o) {
    return run_check("W^{S/J} is a complement to W_J in N(W_J)", [&](bool& ok) {
        std::string note;
        int n = 0;
        for (const auto& t : irreducible_types(o.max_rank, o.classical_max_rank)) {
            if (group_order(t) > o.bounds.enumeration) continue;
            RootSystem rs(t);
            const auto store = enumerate_weyl(rs, o.bounds);
            for (SubsetJ J : cuspidal_subsets(rs)) {
                ++n;
                const auto r = normalizer_complement_check(rs, J, store, o.bounds);
                if (!r.holds()) {
                    ok = false;
                    fail_note(note, t.name() + " J=" + node_string(J) + ": |N|=" + std::to_string(r.normalizer_order) +
                                        " |W_J|=" + std::to_string(r.parabolic_order) + " |W^{S/J}|=" + std::to_string(r.relative_order));
                }
            }
        }
        return ok ? std::to_string(n) + " (type, J) pairs" : note;
    });
}

// ---- cuspidal-data --------------------------------------------------------

inline CheckResult cuspidal_sets(const Options&) {
    return run_check("cuspidal label sets", [&](bool& ok) {
        std::string note;
        auto expect = [&](const std::string& t, std::uint64_t n) {
            const auto c = cuspidal_count(parse_cartan_type(t));
            if (c != n || cuspidal_set(parse_cartan_type(t)).size() != n) {
                ok = false;
                fail_note(note, t + ": " + std::to_string(c));
            }
        };
        for (int n = 1; n <= 12; ++n) expect("A" + std::to_string(n), 0);
        expect("B6", 1);
        expect("D16", 1);
        expect("E6", 2);
        expect("E7", 2);
        expect("F4", 7);
        expect("G2", 4);
        expect("E8", 13);
        expect("A3+B2", 0);
        if (cuspidal_set(parse_cartan_type("B6")).front().front().to_string() != "-1") {
            ok = false;
            fail_note(note, "B6 sign");
        }
        if (cuspidal_set(parse_cartan_type("D16")).front().front().to_string() != "1") {
            ok = false;
            fail_note(note, "D16 sign");
        }
        for (int n = 2; n <= 200; ++n) {
            const bool bc = n == 2 || n == 6 || n == 12 || n == 20 || n == 30 || n == 42 || n == 56 || n == 72 || n == 90 ||
                            n == 110 || n == 132 || n == 156 || n == 182;
            const bool d = n == 4 || n == 16 || n == 36 || n == 64 || n == 100 || n == 144 || n == 196;
            if ((cuspidal_count(CartanType::single(Family::B, n)) == 1) != bc || (cuspidal_count(CartanType::single(Family::C, n)) == 1) != bc) {
                ok = false;
                fail_note(note, "B/C" + std::to_string(n));
            }
            if (n >= 3 && (cuspidal_count(CartanType::single(Family::D, n)) == 1) != d) {
                ok = false;
                fail_note(note, "D" + std::to_string(n));
            }
        }
        std::multiset<int> orders;
        int ones = 0;
        for (const auto& z : cuspidal_set(parse_cartan_type("E8"))) {
            orders.insert(z.front().order());
            ones += z.front().order() == 1;
        }
        if (orders != std::multiset<int>{1, 1, 2, 3, 3, 4, 4, 5, 5, 5, 5, 6, 6} || ones != 2) {
            ok = false;
            fail_note(note, "E8 label orders");
        }
        return ok ? std::string("all fixtures") : note;
    });
}

// ---- irr-labels -----------------------------------------------------------

inline CheckResult class_counts(const Options& o) {
    return run_check("Irr counts equal brute-force conjugacy class counts", [&](bool& ok) {
        std::string note;
        std::string summary;
        int n = 0;
        for (const auto& t : irreducible_types(o.max_rank, o.classical_max_rank)) {
            if (group_order(t) > o.bounds.enumeration) continue;
            RootSystem rs(t);
            const auto store = enumerate_weyl(rs, o.bounds);
            group::WeylGroup W(group::WeylRep(std::make_shared<const RootSystem>(rs)), o.bounds);
            const auto classes = group::class_count(W, store);
            ++n;
            if (classes != irr_count(t) || irr_labels(t).size() != irr_count(t)) {
                ok = false;
                fail_note(note, t.name() + ": " + std::to_string(classes) + " classes, formula " + std::to_string(irr_count(t)));
            }
        }
        return ok ? std::to_string(n) + " groups" : note;
    });
}

inline CheckResult partition_recurrence(const Options&) {
    return run_check("pentagonal recurrence matches direct partition enumeration; dihedral counts", [&](bool& ok) {
        std::string note;
        for (int n = 0; n <= 40; ++n) {
            std::uint64_t direct = 0;
            PartitionIterator it(n);
            do ++direct;
            while (it.next());
            if (direct != partition_count(n)) {
                ok = false;
                fail_note(note, "p(" + std::to_string(n) + ")");
            }
        }
        for (int m : {3, 4, 6}) {
            const auto cls = group::class_count(group::dihedral_group(m), group::enumerate(group::dihedral_group(m)));
            if (cls != dihedral_count(m) || dihedral_labels(m).size() != dihedral_count(m)) {
                ok = false;
                fail_note(note, "I2(" + std::to_string(m) + ")");
            }
        }
        return ok ? std::string("n <= 40, m in {3,4,6}") : note;
    });
}

// ---- parametrization ------------------------------------------------------

inline CheckResult parameter_counts(const Options& o) {
    return run_check("parameter totals, stream lengths, product law", [&](bool& ok) {
        std::string note;
        const std::vector<std::pair<std::string, std::uint64_t>> fixed = {
            {"B2", 6}, {"B3", 12}, {"G2", 10}, {"F4", 37}, {"E6", 30}, {"E7", 76}, {"E8", 166}, {"1", 1}};
        for (const auto& [t, n] : fixed) {
            const auto c = count_parameters(parse_cartan_type(t));
            if (c != n) {
                ok = false;
                fail_note(note, t + ": " + std::to_string(c));
            }
        }
        for (int n = 2; n <= 12; ++n) {
            const CartanType t = CartanType::single(Family::A, n - 1);
            bool all_empty = true;
            const auto len = for_each_parameter(t, [&](const SheafParameter& p) { all_empty = all_empty && p.J().empty(); });
            if (count_parameters(t) != partition_count(n) || len != partition_count(n) || !all_empty) {
                ok = false;
                fail_note(note, t.name() + " vs p(" + std::to_string(n) + ")");
            }
        }
        for (const auto& t : irreducible_types(o.max_rank, std::min(o.classical_max_rank, 10))) {
            const auto len = for_each_parameter(t, [](const SheafParameter&) {});
            const auto rep = series_report(t);
            if (len != count_parameters(t) || rep.total != len) {
                ok = false;
                fail_note(note, t.name() + ": stream " + std::to_string(len) + " vs count " + std::to_string(count_parameters(t)));
            }
        }
        for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{{"A2", "G2"}, {"B2", "B2"}, {"G2", "F4"}}) {
            const auto ab = parse_cartan_type(a + "+" + b);
            const auto len = for_each_parameter(ab, [](const SheafParameter&) {});
            const auto prod = count_parameters(parse_cartan_type(a)) * count_parameters(parse_cartan_type(b));
            if (count_parameters(ab) != prod || len != prod) {
                ok = false;
                fail_note(note, "product law " + ab.name());
            }
        }
        return ok ? std::string("all totals") : note;
    });
}

inline CheckResult series_against_normalizers(const Options& o) {
    return run_check("series sizes equal Irr counts of brute-forced relative groups", [&](bool& ok) {
        std::string note;
        int n = 0;
        for (const auto& t : irreducible_types(o.max_rank, o.classical_max_rank)) {
            if (group_order(t) > o.bounds.table) continue;
            RootSystem rs(t);
            for (SubsetJ J : cuspidal_subsets(rs)) {
                const auto g = relative_weyl_group(rs, J);
                if (g.generators.empty()) continue;
                group::WeylGroup R(group::WeylRep(std::make_shared<const RootSystem>(rs), g.generators), o.bounds);
                const auto store = group::enumerate(R);
                const auto classes = group::class_count(R, store);
                ++n;
                if (classes != irr_count(g.identified_type) || store.size() != group_order(g.identified_type)) {
                    ok = false;
                    fail_note(note, t.name() + " J=" + node_string(J));
                }
            }
        }
        return ok ? std::to_string(n) + " relative groups" : note;
    });
}

// ---- group-engine ---------------------------------------------------------

template <class Group>
inline std::string table_problem(const Group& g) {
    const auto t = group::character_table(g);
    std::int64_t sum = 0;
    for (auto d : t.degrees()) {
        if (static_cast<std::int64_t>(t.group_order) % d != 0) return "degree does not divide |G|";
        sum += d * d;
    }
    if (sum != static_cast<std::int64_t>(t.group_order)) return "sum of squared degrees";
    if (!t.rows_orthogonal() || !t.columns_orthogonal()) return "orthogonality";
    if (t.size() != t.class_sizes.size()) return "table not square";
    return {};
}

inline CheckResult m_sets(const Options&) {
    return run_check("M(G) sizes and character table orthogonality", [&](bool& ok) {
        std::string note;
        const std::vector<std::pair<std::string, std::size_t>> fx = {{"Z2", 4}, {"S3", 8}, {"S4", 21}, {"S5", 39}};
        for (const auto& [spec, n] : fx) {
            const auto g = group::parse_group_spec(spec);
            const auto m = group::m_set(g);
            if (m.pairs.size() != n) {
                ok = false;
                fail_note(note, "|M(" + spec + ")| = " + std::to_string(m.pairs.size()));
            }
            if (auto p = table_problem(g); !p.empty()) {
                ok = false;
                fail_note(note, spec + ": " + p);
            }
        }
        for (const auto& spec : {"Dih4", "Dih5", "Dih6", "Z2^3", "weyl:B3", "weyl:D4", "weyl:G2", "weyl:F4"}) {
            if (auto p = table_problem(group::parse_group_spec(spec)); !p.empty()) {
                ok = false;
                fail_note(note, std::string(spec) + ": " + p);
            }
        }
        return ok ? std::string("all fixtures") : note;
    });
}

inline std::vector<CheckResult> run_all(const Options& o, const std::function<void(const CheckResult&)>& report = {}) {
    std::vector<std::function<CheckResult(const Options&)>> checks = {
        root_counts,          longest_elements,        group_orders,   order_formula_soundness, involution_stability,
        empty_levi_reproduces_ambient, levi_irreducible, relative_types, cuspidal_sets,     partition_recurrence,
        parameter_counts,     m_sets,                  series_against_normalizers, normalizer_complements, class_counts,
    };
    std::vector<CheckResult> out;
    for (const auto& c : checks) {
        out.push_back(c(o));
        if (report) report(out.back());
    }
    return out;
}

} // namespace weylsheaf::verify
