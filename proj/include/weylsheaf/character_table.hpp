#pragma once

// Character tables by the class-algebra eigenvector method (Burnside, with
// Dixon's modular refinement), and the set M(G) of pairs (g, rho) with g up
// to conjugacy and rho in Irr Z_G(g).
//
// Outline:
//  1. Class multiplication coefficients c_ijk are counted in the element store.
//  2. Over F_p, with p = 1 mod exponent(G) and p > 2 sqrt|G|, the matrices
//     (M_i)_jk = c_ijk are simultaneously diagonalized; each common eigenvector,
//     scaled to 1 at the identity class, is a central character omega.
//  3. chi(1)^2 = |G| / sum_k omega_k omega_k* / |C_k|, lifted from F_p.
//  4. Values are lifted to Z[zeta_e] from the eigenvalue multiplicities of
//     each element, m_t = (1/o) sum_l chi(g^l) z^(-tl).
// The lifted table is then checked against exact row orthogonality.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "weylsheaf/cyclotomic.hpp"
#include "weylsheaf/errors.hpp"
#include "weylsheaf/group.hpp"

namespace weylsheaf::group {

namespace modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1U) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1U;
    }
    return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Smallest generator of F_p^*.
inline std::uint64_t primitive_root(std::uint64_t p) {
    std::vector<std::uint64_t> factors;
    std::uint64_t m = p - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) factors.push_back(m);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto q : factors)
            if (pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    return 1;
}

using Vec = std::vector<std::uint64_t>;

/// Basis of { c : sum_col A[row][col] c[col] = 0 }, A given as columns.
inline std::vector<Vec> nullspace(std::vector<Vec> cols, std::uint64_t p) {
    const std::size_t d = cols.size();
    if (d == 0) return {};
    const std::size_t r = cols[0].size();
    // row-major copy
    std::vector<Vec> a(r, Vec(d));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < d; ++j) a[i][j] = cols[j][i];
    std::vector<int> pivot_col_of_row;
    std::vector<char> is_pivot(d, 0);
    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < r; ++col) {
        std::size_t sel = row;
        while (sel < r && a[sel][col] == 0) ++sel;
        if (sel == r) continue;
        std::swap(a[sel], a[row]);
        const std::uint64_t iv = inv(a[row][col], p);
        for (auto& v : a[row]) v = mul(v, iv, p);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const std::uint64_t f = a[i][col];
            for (std::size_t j = 0; j < d; ++j) a[i][j] = (a[i][j] + p - mul(f, a[row][j], p)) % p;
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        is_pivot[col] = 1;
        ++row;
    }
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < d; ++free) {
        if (is_pivot[free]) continue;
        Vec v(d, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[static_cast<std::size_t>(pivot_col_of_row[i])] = (p - a[i][free]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}


/// Matrix A (as columns) with M B = B A, given the columns of B and of M B.
inline std::vector<Vec> restrict_to(const std::vector<Vec>& basis, const std::vector<Vec>& image, std::uint64_t p) {
    const std::size_t d = basis.size();
    const std::size_t r = basis[0].size();
    // augmented rows [B | MB]
    std::vector<Vec> a(r, Vec(2 * d));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            a[i][j] = basis[j][i];
            a[i][d + j] = image[j][i];
        }
    std::size_t row = 0;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t sel = row;
        while (sel < r && a[sel][col] == 0) ++sel;
        if (sel == r) throw Error("eigenspace basis is degenerate");
        std::swap(a[sel], a[row]);
        const std::uint64_t iv = inv(a[row][col], p);
        for (auto& v : a[row]) v = mul(v, iv, p);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const std::uint64_t f = a[i][col];
            for (std::size_t j = 0; j < 2 * d; ++j) a[i][j] = (a[i][j] + p - mul(f, a[row][j], p)) % p;
        }
        ++row;
    }
    std::vector<Vec> cols(d, Vec(d));
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t i = 0; i < d; ++i) cols[c][i] = a[i][d + c];
    return cols;
}

/// Characteristic polynomial (low degree first) by Faddeev-LeVerrier; needs p > d.
inline Vec charpoly(const std::vector<Vec>& cols, std::uint64_t p) {
    const std::size_t d = cols.size();
    Vec c(d + 1, 0);
    c[d] = 1;
    std::vector<Vec> m(d, Vec(d, 0));  // row-major M_k
    std::vector<Vec> am(d, Vec(d, 0));
    for (std::size_t k = 1; k <= d; ++k) {
        // M_k = A M_{k-1} + c_{d-k+1} I
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                std::uint64_t acc = 0;
                for (std::size_t t = 0; t < d; ++t) acc = (acc + mul(cols[t][i], m[t][j], p)) % p;
                am[i][j] = acc;
            }
        for (std::size_t i = 0; i < d; ++i) am[i][i] = (am[i][i] + c[d - k + 1]) % p;
        m.swap(am);
        std::uint64_t tr = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t t = 0; t < d; ++t) tr = (tr + mul(cols[t][i], m[t][i], p)) % p;
        c[d - k] = mul((p - tr) % p, inv(k % p, p), p);
    }
    return c;
}

inline std::uint64_t eval(const Vec& poly, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (mul(acc, x, p) + poly[i]) % p;
    return acc;
}

} // namespace modp

template <class E>
struct CharacterTable {
    std::size_t group_order = 0;
    std::vector<E> class_reps;
    std::vector<std::size_t> class_sizes;
    std::vector<int> element_orders;
    std::vector<std::size_t> inverse_class;
    std::shared_ptr<const CyclotomicField> field;
    std::vector<std::vector<Cyclotomic>> values;  // values[character][class]

    std::size_t size() const { return values.size(); }

    std::vector<std::int64_t> degrees() const {
        std::vector<std::int64_t> d;
        for (const auto& row : values) d.push_back(row[0].integer_part());
        return d;
    }

    /// sum_k |C_k| chi_a(g_k) conj(chi_b(g_k)) == |G| delta_ab, exactly.
    bool rows_orthogonal() const {
        for (std::size_t a = 0; a < values.size(); ++a)
            for (std::size_t b = 0; b < values.size(); ++b) {
                Cyclotomic s(field, 0);
                for (std::size_t k = 0; k < class_sizes.size(); ++k)
                    s = s + values[a][k] * values[b][k].conj() * static_cast<std::int64_t>(class_sizes[k]);
                if (!(s == Cyclotomic(field, a == b ? static_cast<std::int64_t>(group_order) : 0))) return false;
            }
        return true;
    }

    /// sum_chi chi(g_k) conj(chi(g_l)) == |Z(g_k)| delta_kl, exactly.
    bool columns_orthogonal() const {
        for (std::size_t k = 0; k < class_sizes.size(); ++k)
            for (std::size_t l = 0; l < class_sizes.size(); ++l) {
                Cyclotomic s(field, 0);
                for (const auto& row : values) s = s + row[k] * row[l].conj();
                const auto expect = k == l ? static_cast<std::int64_t>(group_order / class_sizes[k]) : 0;
                if (!(s == Cyclotomic(field, expect))) return false;
            }
        return true;
    }
};

template <GroupRep R>
int element_order(const R& rep, const typename R::Element& x) {
    int k = 1;
    auto y = x;
    const auto id = rep.identity();
    while (!(y == id)) {
        y = rep.multiply(y, x);
        ++k;
    }
    return k;
}

template <GroupRep R>
CharacterTable<typename R::Element> character_table(const FiniteGroup<R>& g, const ElementStore<typename R::Element>& store,
                                                    const ClassPartition<typename R::Element>& part) {
    using E = typename R::Element;
    using modp::Vec;
    const R& rep = g.rep();
    const std::size_t order = store.size();
    if (order > g.bounds().table)
        throw BoundExceeded("character table requested for a group of order " + std::to_string(order) + " above the table bound");
    const std::size_t r = part.classes.size();
    if (!(part.classes[0].rep == rep.identity())) throw Error("first class is not the identity");

    CharacterTable<E> t;
    t.group_order = order;
    for (const auto& c : part.classes) {
        t.class_reps.push_back(c.rep);
        t.class_sizes.push_back(c.size);
        t.element_orders.push_back(element_order(rep, c.rep));
    }
    auto class_of = [&](const E& x) -> std::size_t {
        auto idx = store.index_of(x);
        if (!idx) throw Error("element outside the store");
        return part.class_of[*idx];
    };
    for (const auto& c : part.classes) t.inverse_class.push_back(class_of(rep.inverse(c.rep)));

    int exponent = 1;
    for (int o : t.element_orders) exponent = std::lcm(exponent, o);
    t.field = cyclotomic_field(exponent);

    const auto e = static_cast<std::uint64_t>(exponent);
    const auto floor_sqrt = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(order)) + 1e-9);
    std::uint64_t p = e + 1;
    while (!(modp::is_prime(p) && p > 2 * floor_sqrt + 2 && p > r)) p += e;
    const std::uint64_t z_e = modp::pow(modp::primitive_root(p), (p - 1) / e, p);

    // c[i][j][k] = #{ x in C_i : x^-1 z_k in C_j }
    std::vector<std::vector<Vec>> M(r, std::vector<Vec>(r, Vec(r, 0)));
    {
        std::vector<std::size_t> cls(order);
        std::vector<E> inverses;
        inverses.reserve(order);
        for (std::size_t s = 0; s < order; ++s) {
            cls[s] = part.class_of[s];
            inverses.push_back(rep.inverse(store[s]));
        }
        for (std::size_t k = 0; k < r; ++k) {
            const E& z = part.classes[k].rep;
            for (std::size_t s = 0; s < order; ++s) {
                const std::size_t j = class_of(rep.multiply(inverses[s], z));
                auto& cell = M[cls[s]][j][k];
                cell = (cell + 1) % p;
            }
        }
    }

    // simultaneous eigenspaces, each space given by column vectors in F_p^r
    std::vector<std::vector<Vec>> spaces;
    {
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < r; ++i) {
            Vec v(r, 0);
            v[i] = 1;
            basis.push_back(v);
        }
        spaces.push_back(basis);
    }
    for (std::size_t i = 1; i < r; ++i) {
        if (spaces.size() == r) break;
        std::vector<std::vector<Vec>> next;
        for (auto& space : spaces) {
            if (space.size() == 1) {
                next.push_back(std::move(space));
                continue;
            }
            const std::size_t d = space.size();
            std::vector<Vec> image(d, Vec(r, 0));
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t row = 0; row < r; ++row) {
                    std::uint64_t acc = 0;
                    for (std::size_t col = 0; col < r; ++col) acc = (acc + modp::mul(M[i][row][col], space[c][col], p)) % p;
                    image[c][row] = acc;
                }
            const auto A = modp::restrict_to(space, image, p);
            const auto poly = modp::charpoly(A, p);
            std::size_t found = 0;
            std::vector<std::vector<Vec>> pieces;
            for (std::uint64_t lambda = 0; lambda < p && found < d; ++lambda) {
                if (modp::eval(poly, lambda, p) != 0) continue;
                std::vector<Vec> cols = A;
                for (std::size_t c = 0; c < d; ++c) cols[c][c] = (cols[c][c] + p - lambda) % p;
                auto kernel = modp::nullspace(cols, p);
                std::vector<Vec> piece;
                for (const auto& kv : kernel) {
                    Vec v(r, 0);
                    for (std::size_t c = 0; c < d; ++c)
                        for (std::size_t row = 0; row < r; ++row) v[row] = (v[row] + modp::mul(kv[c], space[c][row], p)) % p;
                    piece.push_back(std::move(v));
                }
                found += piece.size();
                pieces.push_back(std::move(piece));
            }
            if (found != d) throw Error("class matrix is not diagonalizable over F_p");
            for (auto& pc : pieces) next.push_back(std::move(pc));
        }
        spaces = std::move(next);
    }
    if (spaces.size() != r) throw Error("class algebra did not split into one-dimensional eigenspaces");

    const auto order_mod = static_cast<std::uint64_t>(order) % p;
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& space : spaces) {
        Vec w = space[0];
        if (w[0] == 0) throw Error("central character vanishes at the identity");
        const std::uint64_t s = modp::inv(w[0], p);
        for (auto& v : w) v = modp::mul(v, s, p);

        std::uint64_t denom = 0;
        for (std::size_t k = 0; k < r; ++k)
            denom = (denom + modp::mul(modp::mul(w[k], w[t.inverse_class[k]], p), modp::inv(t.class_sizes[k] % p, p), p)) % p;
        const std::uint64_t deg_sq = modp::mul(order_mod, modp::inv(denom, p), p);
        std::uint64_t degree = 0;
        for (std::uint64_t dd = 1; dd * dd <= order; ++dd)
            if ((dd * dd) % p == deg_sq) {
                degree = dd;
                break;
            }
        if (degree == 0) throw Error("no integral degree matches the modular central character");

        Vec chi(r);
        for (std::size_t k = 0; k < r; ++k) chi[k] = modp::mul(modp::mul(w[k], degree, p), modp::inv(t.class_sizes[k] % p, p), p);

        std::vector<Cyclotomic> row;
        for (std::size_t k = 0; k < r; ++k) {
            const int o = t.element_orders[k];
            std::vector<std::size_t> powers(static_cast<std::size_t>(o));
            E y = rep.identity();
            for (int l = 0; l < o; ++l) {
                powers[static_cast<std::size_t>(l)] = class_of(y);
                y = rep.multiply(y, t.class_reps[k]);
            }
            const std::uint64_t z_o = modp::pow(z_e, e / static_cast<std::uint64_t>(o), p);
            const std::uint64_t z_inv = modp::inv(z_o, p);
            const std::uint64_t o_inv = modp::inv(static_cast<std::uint64_t>(o) % p, p);
            std::vector<std::int64_t> mult(static_cast<std::size_t>(o));
            for (int tt = 0; tt < o; ++tt) {
                std::uint64_t acc = 0;
                const std::uint64_t step = modp::pow(z_inv, static_cast<std::uint64_t>(tt), p);
                std::uint64_t zpow = 1;
                for (int l = 0; l < o; ++l) {
                    acc = (acc + modp::mul(chi[powers[static_cast<std::size_t>(l)]], zpow, p)) % p;
                    zpow = modp::mul(zpow, step, p);
                }
                const std::uint64_t m = modp::mul(acc, o_inv, p);
                if (m > degree) throw Error("eigenvalue multiplicity out of range while lifting a character");
                mult[static_cast<std::size_t>(tt)] = static_cast<std::int64_t>(m);
            }
            row.push_back(Cyclotomic::from_root_sum(t.field, mult, exponent / o));
        }
        rows.push_back(std::move(row));
    }

    auto is_trivial = [](const std::vector<Cyclotomic>& row) {
        return std::all_of(row.begin(), row.end(), [](const Cyclotomic& c) { return c.is_integer() && c.integer_part() == 1; });
    };
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        if (is_trivial(a) != is_trivial(b)) return is_trivial(a);
        if (a[0].integer_part() != b[0].integer_part()) return a[0].integer_part() < b[0].integer_part();
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].coefficients() != b[k].coefficients()) return a[k].coefficients() < b[k].coefficients();
        return false;
    });
    t.values = std::move(rows);
    if (!t.rows_orthogonal()) throw Error("lifted character table fails row orthogonality");
    return t;
}

template <GroupRep R>
CharacterTable<typename R::Element> character_table(const FiniteGroup<R>& g) {
    auto store = enumerate(g, g.bounds().table);
    auto part = conjugacy_classes(g, store);
    return character_table(g, store, part);
}

template <class E>
struct MPair {
    E class_rep;
    std::size_t irr_index = 0;
};

template <class E>
struct MClassSummary {
    E rep;
    std::size_t class_size = 0;
    std::size_t centralizer_order = 0;
    std::size_t centralizer_classes = 0;
    std::vector<std::int64_t> centralizer_degrees;
};

template <class E>
struct MSet {
    std::size_t group_order = 0;
    std::vector<MClassSummary<E>> classes;
    std::vector<MPair<E>> pairs;
};

/// M(G): one pair per conjugacy class and irreducible character of its centralizer.
template <GroupRep R>
MSet<typename R::Element> m_set(const FiniteGroup<R>& g) {
    using E = typename R::Element;
    auto store = enumerate(g);
    auto part = conjugacy_classes(g, store);
    MSet<E> out;
    out.group_order = store.size();
    for (const auto& c : part.classes) {
        auto z = centralizer(g, store, c.rep);
        auto zstore = enumerate(z, g.bounds().table);
        auto zpart = conjugacy_classes(z, zstore);
        auto table = character_table(z, zstore, zpart);
        MClassSummary<E> s{c.rep, c.size, zstore.size(), zpart.classes.size(), table.degrees()};
        if (table.size() != zpart.classes.size()) throw Error("character count differs from class count");
        for (std::size_t i = 0; i < table.size(); ++i) out.pairs.push_back({c.rep, i});
        out.classes.push_back(std::move(s));
    }
    return out;
}

} // namespace weylsheaf::group
