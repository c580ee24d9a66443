#pragma once

// Conjugacy class census for Weyl groups too large to enumerate (E8).
//
// Candidate representatives come from a seeded random walk, closed under
// powers and under w -> w0 w when w0 = -1. Samples are bucketed by two class
// functions (characteristic polynomial on the reflection representation,
// cycle type on the roots with root lengths recorded). Buckets can hold
// several classes, so a sample landing in a bucket that is visited more often
// than its known classes explain is tested for conjugacy against the bucket's
// representatives.
//
// Each class size is |W| / |Z(w)|, with |Z(w)| counted by backtracking over
// isometries commuting with w. The census is certified only when the class
// sizes add up to |W|; representatives are pairwise non-conjugate by
// construction, so the class count is then exact.
//
// The backtrack relies on Aut(Phi) = W, so it is restricted to irreducible
// types without diagram automorphisms (A1, B, C, E7, E8, F4, G2).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "weylsheaf/cartan_type.hpp"
#include "weylsheaf/errors.hpp"
#include "weylsheaf/irr_labels.hpp"
#include "weylsheaf/root_system.hpp"
#include "weylsheaf/verify.hpp"

namespace weylsheaf::census {

using ClassInvariant = std::pair<std::vector<std::int64_t>, std::vector<int>>;

inline bool has_trivial_diagram_automorphisms(const CartanType& t) {
    if (!t.is_irreducible()) return false;
    const Factor f = t.factors().front();
    switch (f.family) {
    case Family::A: return f.rank == 1;
    case Family::D: return false;
    case Family::E: return f.rank != 6;
    default: return true;
    }
}

/// Inner products of all root pairs, shared by every search.
struct RootGeometry {
    explicit RootGeometry(const RootSystem& rs) : rs(rs), R(static_cast<std::size_t>(rs.root_count())) {
        if (!has_trivial_diagram_automorphisms(rs.cartan_type()))
            throw InputError("class census needs an irreducible type without diagram automorphisms");
        const auto& G = rs.gram();
        ip.assign(R * R, 0);
        for (std::size_t a = 0; a < R; ++a) {
            auto x = rs.root(static_cast<int>(a));
            for (std::size_t b = 0; b < R; ++b) {
                auto y = rs.root(static_cast<int>(b));
                int s = 0;
                for (std::size_t i = 0; i < x.size(); ++i) {
                    if (!x[i]) continue;
                    for (std::size_t j = 0; j < y.size(); ++j)
                        if (y[j]) s += x[i] * y[j] * G[i][j];
                }
                ip[a * R + b] = static_cast<std::int16_t>(s);
            }
        }
        for (std::size_t r = 0; r < R; ++r) longest = std::max(longest, inner(static_cast<int>(r), static_cast<int>(r)));
    }

    int inner(int a, int b) const { return ip[static_cast<std::size_t>(a) * R + static_cast<std::size_t>(b)]; }

    const RootSystem& rs;
    std::size_t R;
    std::vector<std::int16_t> ip;
    int longest = 0;
};

/// Matrix of w on simple-root coordinates: column i is w(alpha_i).
inline std::vector<std::vector<std::int64_t>> coordinate_matrix(const RootSystem& rs, const WeylElement& w) {
    const auto n = static_cast<std::size_t>(rs.rank());
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        auto c = rs.root(w(i));
        for (std::size_t r = 0; r < n; ++r) m[r][i] = c[r];
    }
    return m;
}

/// Integer characteristic polynomial, low degree first (Faddeev-LeVerrier; divisions are exact).
inline std::vector<std::int64_t> characteristic_polynomial(const std::vector<std::vector<std::int64_t>>& a) {
    const std::size_t n = a.size();
    std::vector<std::int64_t> c(n + 1, 0);
    c[n] = 1;
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0)), am = m;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::int64_t s = 0;
                for (std::size_t t = 0; t < n; ++t) s += a[i][t] * m[t][j];
                am[i][j] = s;
            }
        for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
        m.swap(am);
        std::int64_t tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < n; ++t) tr += a[i][t] * m[t][i];
        c[n - k] = -tr / static_cast<std::int64_t>(k);
    }
    return c;
}

/// Sorted cycle lengths on the roots; each entry is 2 * length + (1 for a cycle of short roots).
inline std::vector<int> root_cycle_type(const RootGeometry& g, const WeylElement& w) {
    const auto& p = w.perm();
    std::vector<char> seen(p.size(), 0);
    std::vector<int> out;
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::size_t r = s; !seen[r]; r = p[r]) {
            seen[r] = 1;
            ++len;
        }
        const bool is_short = g.inner(static_cast<int>(s), static_cast<int>(s)) < g.longest;
        out.push_back(2 * len + (is_short ? 1 : 0));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline ClassInvariant class_invariant(const RootGeometry& g, const WeylElement& w) {
    return {characteristic_polynomial(coordinate_matrix(g.rs, w)), root_cycle_type(g, w)};
}

/// Backtrack over z in W with z w = v z. Images are chosen for one root per
/// w-orbit (the rest of the orbit is forced) until the chosen roots span; a
/// leaf is accepted when the induced isometry maps every simple root to a root,
/// which puts z in Aut(Phi) = W.
class IntertwinerSearch {
public:
    IntertwinerSearch(const RootGeometry& g, const WeylElement& w, const WeylElement& v) : g_(g), w_(w), v_(v) { choose_orbits(); }

    std::uint64_t count() {
        stop_first_ = false;
        return run();
    }

    bool exists() {
        stop_first_ = true;
        return run() > 0;
    }

private:
    std::uint64_t run() {
        count_ = 0;
        image_.assign(assigned_.size(), -1);
        search(0);
        return count_;
    }

    std::vector<int> orbit(int r) const {
        std::vector<int> o{r};
        for (int x = w_(static_cast<std::size_t>(r)); x != r; x = w_(static_cast<std::size_t>(x))) o.push_back(x);
        return o;
    }

    // Longest orbits first, keeping those that raise the rank.
    void choose_orbits() {
        const RootSystem& rs = g_.rs;
        const int n = rs.rank();
        std::vector<std::pair<int, int>> by_len;  // (-orbit length, root)
        std::vector<char> covered(g_.R, 0);
        for (int r = 0; r < rs.root_count(); ++r) {
            if (covered[static_cast<std::size_t>(r)]) continue;
            auto o = orbit(r);
            for (int x : o) covered[static_cast<std::size_t>(x)] = 1;
            by_len.emplace_back(-static_cast<int>(o.size()), r);
        }
        std::sort(by_len.begin(), by_len.end());

        std::vector<std::vector<Rational>> echelon;
        std::vector<int> pivots;
        auto try_add = [&](int root) {
            std::vector<Rational> v(static_cast<std::size_t>(n));
            auto c = rs.root(root);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = c[i];
            for (std::size_t b = 0; b < echelon.size(); ++b) {
                const auto p = static_cast<std::size_t>(pivots[b]);
                if (v[p] == Rational(0)) continue;
                const Rational f = v[p] / echelon[b][p];
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * echelon[b][i];
            }
            for (int i = 0; i < n; ++i)
                if (v[static_cast<std::size_t>(i)] != Rational(0)) {
                    echelon.push_back(v);
                    pivots.push_back(i);
                    return true;
                }
            return false;
        };
        for (auto [neg_len, r] : by_len) {
            if (static_cast<int>(echelon.size()) == n) break;
            bool raised = false;
            for (int x : orbit(r)) raised = try_add(x) || raised;
            if (raised) {
                orbit_start_.push_back(static_cast<int>(assigned_.size()));
                for (int x : orbit(r)) assigned_.push_back(x);
            }
        }
        orbit_start_.push_back(static_cast<int>(assigned_.size()));

        echelon.clear();
        pivots.clear();
        for (std::size_t k = 0; k < assigned_.size(); ++k)
            if (try_add(assigned_[k])) basis_.push_back(static_cast<int>(k));

        // coeff_[i][j]: coefficient of basis root j in alpha_i
        const auto N = static_cast<std::size_t>(n);
        std::vector<std::vector<Rational>> a(N, std::vector<Rational>(2 * N));
        for (std::size_t c = 0; c < N; ++c) {
            auto col = rs.root(assigned_[static_cast<std::size_t>(basis_[c])]);
            for (std::size_t r = 0; r < N; ++r) a[r][c] = col[r];
        }
        for (std::size_t r = 0; r < N; ++r) a[r][N + r] = 1;
        for (std::size_t c = 0; c < N; ++c) {
            std::size_t p = c;
            while (a[p][c] == Rational(0)) ++p;
            std::swap(a[p], a[c]);
            const Rational d = a[c][c];
            for (auto& x : a[c]) x /= d;
            for (std::size_t r = 0; r < N; ++r) {
                if (r == c || a[r][c] == Rational(0)) continue;
                const Rational f = a[r][c];
                for (std::size_t t = 0; t < 2 * N; ++t) a[r][t] -= f * a[c][t];
            }
        }
        coeff_.assign(N, std::vector<Rational>(N));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) coeff_[i][j] = a[j][N + i];
    }

    void search(std::size_t level) {
        if (level + 1 == orbit_start_.size()) {
            if (leaf_ok()) ++count_;
            return;
        }
        const auto begin = static_cast<std::size_t>(orbit_start_[level]);
        const auto end = static_cast<std::size_t>(orbit_start_[level + 1]);
        const std::size_t len = end - begin;
        for (int c = 0; c < g_.rs.root_count(); ++c) {
            bool ok = true;
            int x = c;
            for (std::size_t k = 0; k < len && ok; ++k) {
                image_[begin + k] = x;
                for (std::size_t q = 0; q <= begin + k && ok; ++q)
                    if (g_.inner(image_[q], x) != g_.inner(assigned_[q], assigned_[begin + k])) ok = false;
                x = v_(static_cast<std::size_t>(x));
            }
            if (ok && x != c) ok = false;  // the v-orbit of c must close with the same length
            if (ok) search(level + 1);
            if (stop_first_ && count_ > 0) return;
        }
    }

    bool leaf_ok() const {
        const auto N = static_cast<std::size_t>(g_.rs.rank());
        std::vector<Rational> v(N);
        std::vector<int> iv(N);
        for (std::size_t i = 0; i < N; ++i) {
            std::fill(v.begin(), v.end(), Rational(0));
            for (std::size_t j = 0; j < N; ++j) {
                if (coeff_[i][j] == Rational(0)) continue;
                auto img = g_.rs.root(image_[static_cast<std::size_t>(basis_[j])]);
                for (std::size_t t = 0; t < N; ++t) v[t] += coeff_[i][j] * img[t];
            }
            for (std::size_t t = 0; t < N; ++t) {
                if (v[t].denominator() != 1) return false;
                iv[t] = static_cast<int>(v[t].numerator());
            }
            if (!g_.rs.find(iv)) return false;
        }
        return true;
    }

    const RootGeometry& g_;
    const WeylElement& w_;
    const WeylElement& v_;
    std::vector<int> assigned_;     // roots whose images are chosen
    std::vector<int> orbit_start_;  // level boundaries in assigned_
    std::vector<int> basis_;        // positions in assigned_ forming a basis
    std::vector<std::vector<Rational>> coeff_;
    std::vector<int> image_;
    std::uint64_t count_ = 0;
    bool stop_first_ = false;
};

inline std::uint64_t centralizer_order(const RootGeometry& g, const WeylElement& w) { return IntertwinerSearch(g, w, w).count(); }

inline bool conjugate(const RootGeometry& g, const WeylElement& a, const WeylElement& b) { return IntertwinerSearch(g, a, b).exists(); }

struct ClassRecord {
    WeylElement rep;
    std::uint64_t centralizer = 0;
    std::uint64_t size = 0;
};

struct Census {
    std::uint64_t group_order = 0;
    std::uint64_t covered = 0;  // sum of class sizes found
    std::uint64_t samples = 0;
    std::uint64_t conjugacy_tests = 0;
    std::vector<ClassRecord> classes;
    bool complete() const { return covered == group_order; }
};

/// Random-walk census; stops once the class sizes cover the group.
inline Census class_census(const RootSystem& rs, std::uint64_t max_samples, std::uint64_t seed = 1) {
    const RootGeometry geo(rs);
    Census c;
    c.group_order = group_order(rs.cartan_type());
    const WeylElement w0 = longest_element(rs, SubsetJ::full(rs.rank()));
    bool minus_one = true;
    for (int i = 0; i < rs.rank(); ++i)
        if (w0(static_cast<std::size_t>(i)) != rs.negative(i)) minus_one = false;

    struct Bucket {
        std::vector<std::size_t> classes;
        std::uint64_t covered = 0;
        std::uint64_t hits = 0;  // samples in the current window
        bool suspect = false;
    };
    std::map<ClassInvariant, Bucket> buckets;
    std::vector<WeylElement> pending;

    auto add_class = [&](Bucket& b, const WeylElement& w) {
        bool central = true;
        for (int i = 0; i < rs.rank() && central; ++i) {
            const WeylElement s = rs.simple_reflection(i);
            central = (s * w) == (w * s);
        }
        const std::uint64_t z = central ? c.group_order : centralizer_order(geo, w);
        b.classes.push_back(c.classes.size());
        b.covered += c.group_order / z;
        c.classes.push_back({w, z, c.group_order / z});
        c.covered += c.group_order / z;
        b.suspect = false;
        pending.push_back(w);
    };
    auto consider = [&](const WeylElement& w, bool sampled) {
        Bucket& b = buckets[class_invariant(geo, w)];
        if (sampled) ++b.hits;
        if (b.classes.empty()) return add_class(b, w);
        if (!b.suspect) return;
        for (std::size_t k : b.classes) {
            ++c.conjugacy_tests;
            if (conjugate(geo, c.classes[k].rep, w)) return;
        }
        add_class(b, w);
    };
    auto close = [&]() {
        while (!pending.empty()) {
            const WeylElement w = pending.back();
            pending.pop_back();
            const int ord = element_order(w);
            WeylElement p = w;
            for (int k = 2; k < ord; ++k) {
                p = p * w;
                if (std::gcd(k, ord) != 1) consider(p, false);
            }
            if (minus_one) consider(w0 * w, false);
        }
    };

    consider(rs.identity(), false);
    close();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, rs.rank() - 1);
    WeylElement cur = rs.identity();
    constexpr std::uint64_t window = 20000;
    std::uint64_t in_window = 0;
    while (!c.complete() && c.samples < max_samples) {
        for (int step = 0; step < 7; ++step) cur = rs.times_simple(cur, pick(rng));
        cur = WeylElement(cur.perm(), {}, rs.rank(), rs.positive_count());
        ++c.samples;
        consider(cur, true);
        close();
        if (++in_window == window) {
            // flag buckets sampled well above the share their known classes explain
            for (auto& [key, b] : buckets) {
                const double expected = static_cast<double>(window) * static_cast<double>(b.covered) / static_cast<double>(c.group_order);
                b.suspect = static_cast<double>(b.hits) > expected + 4.0 * std::sqrt(expected) + 4.0;
                b.hits = 0;
            }
            in_window = 0;
        }
    }
    std::sort(c.classes.begin(), c.classes.end(), [](const ClassRecord& a, const ClassRecord& b) { return a.size < b.size; });
    return c;
}

} // namespace weylsheaf::census

namespace weylsheaf::verify {

/// Opt-in: number of conjugacy classes of W(E8) against the Irr count.
inline CheckResult e8_class_count(const Options&, std::uint64_t max_samples = 4'000'000) {
    return run_check("E8 class census equals the Irr count (heavy)", [&](bool& ok) {
        const CartanType t = parse_cartan_type("E8");
        RootSystem rs(t);
        const auto c = census::class_census(rs, max_samples);
        ok = c.complete() && c.classes.size() == irr_count(t);
        return std::to_string(c.classes.size()) + " classes covering " + std::to_string(c.covered) + " of " +
               std::to_string(c.group_order) + " elements after " + std::to_string(c.samples) + " samples";
    });
}

} // namespace weylsheaf::verify
