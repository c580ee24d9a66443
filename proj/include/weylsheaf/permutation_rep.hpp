#pragma once

// Permutation groups on {0, ..., degree-1}, plus the named presets and the
// cycle-notation parser used by the command line.

#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "weylsheaf/cartan_type.hpp"
#include "weylsheaf/errors.hpp"
#include "weylsheaf/group.hpp"
#include "weylsheaf/root_system.hpp"

namespace weylsheaf::group {

using Permutation = std::vector<std::uint16_t>;

class PermutationRep {
public:
    using Element = Permutation;

    PermutationRep(std::size_t degree, std::vector<Permutation> generators)
        : degree_(degree), generators_(std::move(generators)) {
        for (const auto& g : generators_) {
            if (g.size() != degree_) throw InputError("generator has the wrong degree");
            std::vector<char> hit(degree_, 0);
            for (auto p : g) {
                if (p >= degree_ || hit[p]) throw InputError("generator is not a bijection");
                hit[p] = 1;
            }
            inverses_.push_back(inverse(g));
        }
    }

    std::size_t degree() const { return degree_; }

    Element identity() const {
        Permutation p(degree_);
        std::iota(p.begin(), p.end(), std::uint16_t{0});
        return p;
    }

    /// (a*b)(x) = a(b(x)).
    Element multiply(const Element& a, const Element& b) const {
        Permutation p(degree_);
        for (std::size_t x = 0; x < degree_; ++x) p[x] = a[b[x]];
        return p;
    }

    Element inverse(const Element& a) const {
        Permutation p(a.size());
        for (std::size_t x = 0; x < a.size(); ++x) p[a[x]] = static_cast<std::uint16_t>(x);
        return p;
    }

    std::size_t generator_count() const { return generators_.size(); }
    const Element& generator(std::size_t i) const { return generators_[i]; }
    Element left_multiply(std::size_t i, const Element& x) const { return multiply(generators_[i], x); }
    Element conjugate(std::size_t i, const Element& x) const {
        return multiply(inverses_[i], multiply(x, generators_[i]));
    }
    PermutationRep with_generators(std::vector<Element> gens) const { return {degree_, std::move(gens)}; }

    /// Largest cycle length lcm.
    int order_of(const Element& a) const {
        std::vector<char> seen(a.size(), 0);
        long long order = 1;
        for (std::size_t s = 0; s < a.size(); ++s) {
            long long len = 0;
            for (std::size_t x = s; !seen[x]; x = a[x]) {
                seen[x] = 1;
                ++len;
            }
            if (len) order = std::lcm(order, len);
        }
        return static_cast<int>(order);
    }

private:
    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> inverses_;
};

using PermutationGroup = FiniteGroup<PermutationRep>;

inline Permutation cycle_permutation(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), std::uint16_t{0});
    for (const auto& c : cycles)
        for (std::size_t k = 0; k < c.size(); ++k)
            p[static_cast<std::size_t>(c[k])] = static_cast<std::uint16_t>(c[(k + 1) % c.size()]);
    return p;
}

inline PermutationGroup symmetric_group(int n, Bounds bounds = {}) {
    if (n < 1) throw InputError("symmetric group needs n >= 1");
    std::vector<Permutation> gens;
    if (n >= 2) {
        gens.push_back(cycle_permutation(static_cast<std::size_t>(n), {{0, 1}}));
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        if (n >= 3) gens.push_back(cycle_permutation(static_cast<std::size_t>(n), {all}));
    }
    return PermutationGroup(PermutationRep(static_cast<std::size_t>(n), std::move(gens)), bounds);
}

inline PermutationGroup cyclic_group(int n, Bounds bounds = {}) {
    if (n < 1) throw InputError("cyclic group needs n >= 1");
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    std::vector<Permutation> gens;
    if (n >= 2) gens.push_back(cycle_permutation(static_cast<std::size_t>(n), {all}));
    return PermutationGroup(PermutationRep(static_cast<std::size_t>(n), std::move(gens)), bounds);
}

/// Dihedral group of order 2m acting on the m vertices of a polygon.
inline PermutationGroup dihedral_group(int m, Bounds bounds = {}) {
    if (m < 3) throw InputError("dihedral group needs m >= 3");
    const auto deg = static_cast<std::size_t>(m);
    std::vector<int> rot(deg);
    std::iota(rot.begin(), rot.end(), 0);
    std::vector<std::vector<int>> flips;
    for (int a = 1, b = m - 1; a < b; ++a, --b) flips.push_back({a, b});
    return PermutationGroup(PermutationRep(deg, {cycle_permutation(deg, {rot}), cycle_permutation(deg, flips)}), bounds);
}

inline PermutationGroup elementary_abelian_2(int k, Bounds bounds = {}) {
    if (k < 1) throw InputError("Z2^k needs k >= 1");
    const auto deg = static_cast<std::size_t>(2 * k);
    std::vector<Permutation> gens;
    for (int i = 0; i < k; ++i) gens.push_back(cycle_permutation(deg, {{2 * i, 2 * i + 1}}));
    return PermutationGroup(PermutationRep(deg, std::move(gens)), bounds);
}

/// W(t) acting on its full root list.
inline PermutationGroup weyl_permutation_group(const CartanType& t, Bounds bounds = {}) {
    RootSystem rs(t);
    std::vector<Permutation> gens;
    for (int i = 0; i < rs.rank(); ++i) gens.push_back(rs.reflection_perm(i));
    std::size_t degree = static_cast<std::size_t>(rs.root_count());
    if (degree == 0) degree = 1;
    return PermutationGroup(PermutationRep(degree, std::move(gens)), bounds);
}

/// Generators in cycle notation, 1-based points: "(1,2,3)(4,5),(1,2)".
/// Top-level commas or semicolons separate generators.
inline PermutationGroup parse_cycle_generators(std::string_view text, Bounds bounds = {}) {
    std::vector<std::vector<std::vector<int>>> gens(1);
    int depth = 0;
    std::string number;
    std::vector<int> cycle;
    int max_point = 0;
    auto flush_number = [&]() {
        if (number.empty()) return;
        int v = std::stoi(number);
        if (v < 1 || v > 60000) throw InputError("point out of range in cycle notation");
        cycle.push_back(v - 1);
        max_point = std::max(max_point, v);
        number.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '(') {
            if (depth != 0) throw InputError("nested parentheses in cycle notation");
            depth = 1;
        } else if (c == ')') {
            if (depth != 1) throw InputError("unbalanced parentheses in cycle notation");
            flush_number();
            if (cycle.empty()) throw InputError("empty cycle");
            gens.back().push_back(cycle);
            cycle.clear();
            depth = 0;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (depth != 1) throw InputError("point outside a cycle");
            number += c;
        } else if (c == ',' && depth == 1) {
            flush_number();
        } else if ((c == ',' || c == ';') && depth == 0) {
            gens.emplace_back();
        } else {
            throw InputError(std::string("unexpected character '") + c + "' in cycle notation");
        }
    }
    if (depth != 0) throw InputError("unbalanced parentheses in cycle notation");
    const auto degree = static_cast<std::size_t>(std::max(max_point, 1));
    std::vector<Permutation> perms;
    for (const auto& g : gens) {
        for (const auto& cyc : g) {
            std::vector<char> seen(degree, 0);
            for (int p : cyc) {
                if (seen[static_cast<std::size_t>(p)]) throw InputError("repeated point in a cycle");
                seen[static_cast<std::size_t>(p)] = 1;
            }
        }
        if (!g.empty()) {
            // cycles within one generator compose right to left
            Permutation p(degree);
            std::iota(p.begin(), p.end(), std::uint16_t{0});
            PermutationRep tmp(degree, {});
            for (auto it = g.rbegin(); it != g.rend(); ++it) p = tmp.multiply(cycle_permutation(degree, {*it}), p);
            perms.push_back(std::move(p));
        }
    }
    return PermutationGroup(PermutationRep(degree, std::move(perms)), bounds);
}

/// Presets "S<n>", "Z<n>", "Z2^<k>", "Dih<m>", "weyl:<type>", or cycle notation.
inline PermutationGroup parse_group_spec(std::string_view spec, Bounds bounds = {}) {
    std::string s(spec);
    auto all_digits = [](const std::string& d) {
        return !d.empty() && d.size() < 6 && std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    if (s.rfind("weyl:", 0) == 0) return weyl_permutation_group(parse_cartan_type(s.substr(5)), bounds);
    if (s.rfind("Z2^", 0) == 0 && all_digits(s.substr(3))) return elementary_abelian_2(std::stoi(s.substr(3)), bounds);
    if (s.size() > 1 && s[0] == 'S' && all_digits(s.substr(1))) return symmetric_group(std::stoi(s.substr(1)), bounds);
    if (s.size() > 1 && s[0] == 'Z' && all_digits(s.substr(1))) return cyclic_group(std::stoi(s.substr(1)), bounds);
    if (s.rfind("Dih", 0) == 0 && all_digits(s.substr(3))) return dihedral_group(std::stoi(s.substr(3)), bounds);
    if (!s.empty() && s.front() == '(') return parse_cycle_generators(s, bounds);
    throw InputError("unknown group spec '" + s + "'");
}

} // namespace weylsheaf::group
