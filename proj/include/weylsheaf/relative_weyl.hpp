#pragma once

// Relative Weyl groups W^{S/J} for J with a nonempty cuspidal set.
//
// Generators are sigma_h = w0(J u {h}) w0(J) for h outside J. Every Coxeter
// matrix entry is computed twice: as the order of sigma_h sigma_h' and from
// the reflection-count formula
//   2 (nu(J+h+h') - nu(J)) / (nu(J+h) + nu(J+h') - 2 nu(J)).
//
// Generator lengths (used to tell B from C in the identified type) are the
// squared lengths of the projections of alpha_h onto the orthogonal
// complement of span{alpha_j : j in J}.

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "weylsheaf/cartan_type.hpp"
#include "weylsheaf/cuspidal.hpp"
#include "weylsheaf/diagram.hpp"
#include "weylsheaf/errors.hpp"
#include "weylsheaf/group.hpp"
#include "weylsheaf/root_system.hpp"
#include "weylsheaf/weyl_rep.hpp"

namespace weylsheaf {

namespace detail {

inline void check_hypothesis(const RootSystem& rs, SubsetJ J) {
    if (!J.valid_for(rs.rank())) throw InputError("subset index out of range");
    if (!has_cuspidal(subdiagram_type(rs, J)))
        throw CuspidalityViolation("W_J of type " + subdiagram_type(rs, J).name() + " has an empty cuspidal set");
}

inline void check_outside(const RootSystem& rs, SubsetJ J, int h) {
    if (h < 0 || h >= rs.rank()) throw InputError("node index out of range: " + std::to_string(h + 1));
    if (J.contains(h)) throw InputError("node " + std::to_string(h + 1) + " lies in J");
}

} // namespace detail

/// w sends every alpha_j (j in J) to +-alpha_j' with j' in J, i.e. w normalizes
/// the set of simple reflections of J.
inline bool permutes_simple(const RootSystem& rs, const WeylElement& w, SubsetJ J) {
    std::vector<char> hit(static_cast<std::size_t>(rs.rank()), 0);
    for (int j : J.indices()) {
        int img = w(static_cast<std::size_t>(j));
        if (!rs.is_positive(img)) img = rs.negative(img);
        if (img >= rs.rank() || !J.contains(img) || hit[static_cast<std::size_t>(img)]) return false;
        hit[static_cast<std::size_t>(img)] = 1;
    }
    return true;
}

inline WeylElement sigma(const RootSystem& rs, SubsetJ J, int h) {
    detail::check_hypothesis(rs, J);
    detail::check_outside(rs, J, h);
    WeylElement s = longest_element(rs, J.with(h)) * longest_element(rs, J);
    if (!(s * s).is_identity()) throw InvolutionFailure("sigma_" + std::to_string(h + 1) + " is not an involution");
    if (!permutes_simple(rs, s, J))
        throw InvolutionFailure("sigma_" + std::to_string(h + 1) + " does not stabilize the simple reflections of J");
    return s;
}

inline Rational order_formula(const RootSystem& rs, SubsetJ J, int h, int h2) {
    if (!J.valid_for(rs.rank())) throw InputError("subset index out of range");
    detail::check_outside(rs, J, h);
    detail::check_outside(rs, J, h2);
    if (h == h2) throw InputError("order formula needs two distinct nodes");
    const std::int64_t nj = nu(rs, J);
    const std::int64_t num = 2 * (nu(rs, J.with(h).with(h2)) - nj);
    const std::int64_t den = nu(rs, J.with(h)) + nu(rs, J.with(h2)) - 2 * nj;
    if (den == 0) throw DegenerateFormula("order formula has a zero denominator");
    return Rational(num, den);
}

/// |alpha_h|^2 - b^T G_J^{-1} b with b_j = (alpha_h, alpha_j), in the integral form.
inline Rational projected_norm(const RootSystem& rs, SubsetJ J, int h) {
    const auto& G = rs.gram();
    const auto idx = J.indices();
    const std::size_t k = idx.size();
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) a[r][c] = G[static_cast<std::size_t>(idx[r])][static_cast<std::size_t>(idx[c])];
        a[r][k] = G[static_cast<std::size_t>(idx[r])][static_cast<std::size_t>(h)];
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (a[p][c] == Rational(0)) ++p;
        std::swap(a[p], a[c]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c || a[r][c] == Rational(0)) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t t = c; t <= k; ++t) a[r][t] -= f * a[c][t];
        }
    }
    Rational n = G[static_cast<std::size_t>(h)][static_cast<std::size_t>(h)];
    for (std::size_t r = 0; r < k; ++r)
        n -= Rational(G[static_cast<std::size_t>(idx[r])][static_cast<std::size_t>(h)]) * a[r][k] / a[r][r];
    return n;
}

struct RelativeWeylGroup {
    CartanType ambient;
    SubsetJ J;
    std::vector<int> complement;           // h in S - J, increasing
    std::vector<WeylElement> generators;   // sigma_h, aligned with complement
    std::vector<std::vector<int>> words;   // reduced words of the generators, 0-based
    IntMatrix coxeter_matrix;              // rows/cols aligned with complement
    std::vector<Rational> generator_norms;
    std::vector<IdentifiedComponent> components;  // nodes are positions in `complement`
    CartanType identified_type;
};

inline RelativeWeylGroup relative_weyl_group(const RootSystem& rs, SubsetJ J) {
    detail::check_hypothesis(rs, J);
    RelativeWeylGroup g{rs.cartan_type(), J, {}, {}, {}, {}, {}, {}, CartanType{}};
    for (int h = 0; h < rs.rank(); ++h)
        if (!J.contains(h)) g.complement.push_back(h);
    const std::size_t k = g.complement.size();
    for (int h : g.complement) {
        g.generators.push_back(sigma(rs, J, h));
        g.words.push_back(reduced_word(rs, g.generators.back()));
        g.generator_norms.push_back(projected_norm(rs, J, h));
    }
    g.coxeter_matrix.assign(k, std::vector<int>(k, 1));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            const int direct = element_order(g.generators[a] * g.generators[b]);
            const Rational formula = order_formula(rs, J, g.complement[a], g.complement[b]);
            if (formula != Rational(direct))
                throw MatrixMismatch("order of sigma_" + std::to_string(g.complement[a] + 1) + " sigma_" +
                                     std::to_string(g.complement[b] + 1) + " is " + std::to_string(direct) +
                                     " but the formula gives " + std::to_string(formula.numerator()) + "/" +
                                     std::to_string(formula.denominator()));
            g.coxeter_matrix[a][b] = g.coxeter_matrix[b][a] = direct;
        }
    g.components = identify_diagram(g.coxeter_matrix, g.generator_norms);
    g.identified_type = to_cartan_type(g.components);
    return g;
}

struct NormalizerReport {
    std::uint64_t ambient_order = 0;
    std::uint64_t normalizer_order = 0;
    std::uint64_t parabolic_order = 0;
    std::uint64_t relative_order = 0;
    std::uint64_t intersection_order = 0;
    std::uint64_t identified_order = 0;  // |W| of the identified relative type
    bool generators_normalize = false;

    bool holds() const {
        return normalizer_order == parabolic_order * relative_order && intersection_order == 1 && generators_normalize &&
               relative_order == identified_order;
    }
};

/// Brute-force check that W^{S/J} is a complement to W_J in N_W(W_J).
/// `all` is the element store of W(rs), in the WeylKey encoding.
inline NormalizerReport normalizer_complement_check(const RootSystem& rs, SubsetJ J, const group::ElementStore<group::WeylKey>& all,
                                                    group::Bounds bounds = {}) {
    detail::check_hypothesis(rs, J);
    auto shared = std::make_shared<const RootSystem>(rs);
    const auto rel = relative_weyl_group(rs, J);

    NormalizerReport out;
    out.ambient_order = all.size();
    const auto idx = J.indices();
    for (const auto& x : all) {
        bool normalizes = true;
        for (int j : idx)
            if (!rs.supported_in(x.images[static_cast<std::size_t>(j)], J)) {
                normalizes = false;
                break;
            }
        if (normalizes) ++out.normalizer_order;
    }

    std::vector<WeylElement> parabolic_gens;
    for (int j : idx) parabolic_gens.push_back(rs.simple_reflection(j));
    const auto parabolic = group::enumerate(group::WeylGroup(group::WeylRep(shared, parabolic_gens), bounds));
    const auto relative = group::enumerate(group::WeylGroup(group::WeylRep(shared, rel.generators), bounds));
    out.parabolic_order = parabolic.size();
    out.relative_order = relative.size();
    std::vector<group::WeylKey> common;
    std::set_intersection(parabolic.begin(), parabolic.end(), relative.begin(), relative.end(), std::back_inserter(common));
    out.intersection_order = common.size();
    out.generators_normalize = std::all_of(rel.generators.begin(), rel.generators.end(),
                                           [&](const WeylElement& s) { return permutes_simple(rs, s, J); });
    out.identified_order = group_order(rel.identified_type);
    return out;
}

inline group::ElementStore<group::WeylKey> enumerate_weyl(const RootSystem& rs, group::Bounds bounds = {}) {
    const std::uint64_t order = group_order(rs.cartan_type());
    if (order > bounds.enumeration)
        throw BoundExceeded("|W(" + rs.cartan_type().name() + ")| = " + std::to_string(order) + " exceeds the enumeration bound");
    return group::enumerate(group::WeylGroup(group::WeylRep(std::make_shared<const RootSystem>(rs)), bounds));
}

inline NormalizerReport normalizer_complement_check(const RootSystem& rs, SubsetJ J, group::Bounds bounds = {}) {
    detail::check_hypothesis(rs, J);
    return normalizer_complement_check(rs, J, enumerate_weyl(rs, bounds), bounds);
}

} // namespace weylsheaf
