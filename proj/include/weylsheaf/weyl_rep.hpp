#pragma once

// Weyl group elements encoded by the images of the simple roots (one byte
// per simple root, up to 16 simple roots and 256 roots). The encoding is
// faithful: an element is determined by where it sends the simple roots.
//
// Left multiplication by a generator is one table lookup per simple root.
// Conjugation by a simple reflection s_k uses
//   (s_k x s_k)(alpha_i) = s_k( x(alpha_i) - A[k][i] x(alpha_k) ),
// with a precomputed table of root + c * root for c in {1, 2, 3}.

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "weylsheaf/errors.hpp"
#include "weylsheaf/group.hpp"
#include "weylsheaf/root_system.hpp"

namespace weylsheaf::group {

struct WeylKey {
    std::array<std::uint8_t, 16> images{};
    auto operator<=>(const WeylKey&) const = default;
    bool operator==(const WeylKey&) const = default;
};

namespace detail {

struct WeylTables {
    std::shared_ptr<const RootSystem> rs;
    int n = 0;
    int roots = 0;
    // combo[(c-1) * roots * roots + a * roots + b] = index of root(a) + c * root(b), or 0xFFFF
    std::vector<std::uint16_t> combo;

    explicit WeylTables(std::shared_ptr<const RootSystem> system) : rs(std::move(system)) {
        n = rs->rank();
        roots = rs->root_count();
        if (n > 16 || roots > 256)
            throw BoundExceeded("Weyl group too large for the packed element encoding (rank <= 16, <= 256 roots)");
        const auto R = static_cast<std::size_t>(roots);
        combo.assign(3 * R * R, 0xFFFF);
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int c = 1; c <= 3; ++c)
            for (int a = 0; a < roots; ++a)
                for (int b = 0; b < roots; ++b) {
                    auto ra = rs->root(a);
                    auto rb = rs->root(b);
                    for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = ra[static_cast<std::size_t>(j)] + c * rb[static_cast<std::size_t>(j)];
                    if (auto idx = rs->find(v))
                        combo[static_cast<std::size_t>(c - 1) * R * R + static_cast<std::size_t>(a) * R + static_cast<std::size_t>(b)] =
                            static_cast<std::uint16_t>(*idx);
                }
    }
};

} // namespace detail

class WeylRep {
public:
    using Element = WeylKey;

    /// The full Weyl group, generated by the simple reflections.
    explicit WeylRep(std::shared_ptr<const RootSystem> rs)
        : tables_(std::make_shared<detail::WeylTables>(std::move(rs))) {
        std::vector<WeylElement> gens;
        for (int i = 0; i < tables_->n; ++i) gens.push_back(tables_->rs->simple_reflection(i));
        set_generators(gens);
    }

    WeylRep(std::shared_ptr<const RootSystem> rs, const std::vector<WeylElement>& gens)
        : tables_(std::make_shared<detail::WeylTables>(std::move(rs))) {
        set_generators(gens);
    }

    const RootSystem& root_system() const { return *tables_->rs; }

    Element identity() const {
        WeylKey k;
        for (int i = 0; i < tables_->n; ++i) k.images[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        return k;
    }

    Element key_of(const WeylElement& w) const {
        WeylKey k;
        for (int i = 0; i < tables_->n; ++i) k.images[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(w(static_cast<std::size_t>(i)));
        return k;
    }

    /// x applied to an arbitrary root, by linearity from the simple-root images.
    int apply(const Element& x, int root) const {
        const RootSystem& rs = *tables_->rs;
        const int n = tables_->n;
        if (root < n) return x.images[static_cast<std::size_t>(root)];
        auto c = rs.root(root);
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            int cj = c[static_cast<std::size_t>(j)];
            if (!cj) continue;
            auto img = rs.root(x.images[static_cast<std::size_t>(j)]);
            for (int t = 0; t < n; ++t) v[static_cast<std::size_t>(t)] += cj * img[static_cast<std::size_t>(t)];
        }
        auto idx = rs.find(v);
        if (!idx) throw Error("key does not encode a Weyl group element");
        return *idx;
    }

    /// Full root permutation of x.
    WeylElement to_element(const Element& x) const {
        const RootSystem& rs = *tables_->rs;
        std::vector<RootIndex> p(static_cast<std::size_t>(rs.root_count()));
        for (int r = 0; r < rs.positive_count(); ++r) {
            int img = apply(x, r);
            p[static_cast<std::size_t>(r)] = static_cast<RootIndex>(img);
            p[static_cast<std::size_t>(rs.negative(r))] = static_cast<RootIndex>(rs.negative(img));
        }
        return {std::move(p), {}, rs.rank(), rs.positive_count()};
    }

    Element multiply(const Element& a, const Element& b) const {
        WeylKey k;
        for (int i = 0; i < tables_->n; ++i) k.images[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(apply(a, b.images[static_cast<std::size_t>(i)]));
        return k;
    }

    Element inverse(const Element& a) const { return key_of(to_element(a).inverse()); }

    std::size_t generator_count() const { return gens_.size(); }
    const Element& generator(std::size_t i) const { return gens_[i]; }

    Element left_multiply(std::size_t i, const Element& x) const {
        const auto& perm = perms_[i];
        WeylKey k;
        for (int j = 0; j < tables_->n; ++j) k.images[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(perm[x.images[static_cast<std::size_t>(j)]]);
        return k;
    }

    Element conjugate(std::size_t i, const Element& x) const {
        const int s = simple_[i];
        if (s < 0) return multiply(inverses_[i], multiply(x, gens_[i]));
        const RootSystem& rs = *tables_->rs;
        const auto& perm = perms_[i];
        const auto R = static_cast<std::size_t>(tables_->roots);
        const int xs = x.images[static_cast<std::size_t>(s)];
        WeylKey k;
        for (int j = 0; j < tables_->n; ++j) {
            int img;
            if (j == s) {
                img = rs.negative(xs);
            } else {
                int a = rs.cartan_matrix()[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
                img = x.images[static_cast<std::size_t>(j)];
                if (a != 0)
                    img = tables_->combo[static_cast<std::size_t>(-a - 1) * R * R + static_cast<std::size_t>(img) * R + static_cast<std::size_t>(xs)];
            }
            k.images[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(perm[static_cast<std::size_t>(img)]);
        }
        return k;
    }

    WeylRep with_generators(std::vector<Element> gens) const {
        WeylRep out(*this);
        std::vector<WeylElement> elems;
        for (const auto& g : gens) elems.push_back(to_element(g));
        out.set_generators(elems);
        return out;
    }

private:
    void set_generators(const std::vector<WeylElement>& gens) {
        gens_.clear();
        inverses_.clear();
        perms_.clear();
        simple_.clear();
        for (const auto& g : gens) {
            gens_.push_back(key_of(g));
            inverses_.push_back(key_of(g.inverse()));
            perms_.push_back(g.perm());
            int simple = -1;
            for (int i = 0; i < tables_->n; ++i)
                if (g == tables_->rs->simple_reflection(i)) simple = i;
            simple_.push_back(simple);
        }
    }

    std::shared_ptr<const detail::WeylTables> tables_;
    std::vector<Element> gens_;
    std::vector<Element> inverses_;
    std::vector<std::vector<RootIndex>> perms_;
    std::vector<int> simple_;
};

using WeylGroup = FiniteGroup<WeylRep>;

inline WeylGroup weyl_group(const CartanType& t, Bounds bounds = {}) {
    return WeylGroup(WeylRep(std::make_shared<const RootSystem>(t)), bounds);
}

} // namespace weylsheaf::group
