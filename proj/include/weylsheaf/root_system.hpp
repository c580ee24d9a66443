#pragma once

// Root systems in simple-root coordinates and Weyl group elements acting on
// them as permutations of the full root list.
//
// Root list layout: indices [0, nu) are the positive roots sorted by height
// (so index i < rank is the simple root alpha_{i+1}); index r + nu is -root(r).
// Nodes are numbered globally, component after component in canonical order,
// each component in Bourbaki order. Internally indices are 0-based.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylsheaf/cartan_type.hpp"
#include "weylsheaf/diagram.hpp"
#include "weylsheaf/errors.hpp"

namespace weylsheaf {

/// A subset of the simple reflections, as a bitset over node indices.
class SubsetJ {
public:
    constexpr SubsetJ() = default;
    constexpr explicit SubsetJ(std::uint64_t bits) : bits_(bits) {}

    static SubsetJ full(int n) { return SubsetJ(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)); }

    static SubsetJ from_indices(std::span<const int> indices) {
        std::uint64_t b = 0;
        for (int i : indices) {
            if (i < 0 || i >= 64) throw InputError("node index out of range: " + std::to_string(i));
            b |= std::uint64_t{1} << i;
        }
        return SubsetJ(b);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    constexpr SubsetJ with(int i) const { return SubsetJ(bits_ | (std::uint64_t{1} << i)); }
    constexpr bool is_subset_of(SubsetJ other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr SubsetJ operator|(SubsetJ o) const { return SubsetJ(bits_ | o.bits_); }
    constexpr SubsetJ operator&(SubsetJ o) const { return SubsetJ(bits_ & o.bits_); }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    /// Every index below n.
    bool valid_for(int n) const { return n >= 64 || (bits_ >> n) == 0; }

    constexpr bool operator==(const SubsetJ&) const = default;

    /// The documented total order: by size, then by bit value.
    friend bool operator<(SubsetJ a, SubsetJ b) {
        int pa = a.size(), pb = b.size();
        return pa != pb ? pa < pb : a.bits_ < b.bits_;
    }

private:
    std::uint64_t bits_ = 0;
};

/// All subsets of {0..n-1} in (popcount, bitset value) order.
inline std::vector<SubsetJ> all_subsets(int n) {
    if (n > 30) throw BoundExceeded("subset scan over more than 2^30 subsets");
    std::vector<SubsetJ> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(b);
    std::stable_sort(out.begin(), out.end());
    return out;
}

using RootIndex = std::uint16_t;

/// A Weyl group element as a permutation of the full root list, with a word
/// in the simple reflections (0-based indices; the element is s_{w[0]} s_{w[1]} ...).
class WeylElement {
public:
    WeylElement() = default;
    WeylElement(std::vector<RootIndex> perm, std::vector<int> word, int simple_count, int positive_count)
        : perm_(std::move(perm)), word_(std::move(word)), simple_count_(simple_count), positive_count_(positive_count) {}

    const std::vector<RootIndex>& perm() const { return perm_; }
    const std::vector<int>& word() const { return word_; }
    int simple_count() const { return simple_count_; }

    RootIndex operator()(std::size_t root) const { return perm_[root]; }

    /// Number of positive roots sent to negative roots.
    int length() const {
        int l = 0;
        for (int r = 0; r < positive_count_; ++r)
            if (perm_[static_cast<std::size_t>(r)] >= positive_count_) ++l;
        return l;
    }

    bool is_identity() const {
        for (int i = 0; i < simple_count_; ++i)
            if (perm_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    /// Product: apply rhs first, then *this.
    WeylElement operator*(const WeylElement& rhs) const {
        std::vector<RootIndex> p(perm_.size());
        for (std::size_t r = 0; r < p.size(); ++r) p[r] = perm_[rhs.perm_[r]];
        std::vector<int> w = word_;
        w.insert(w.end(), rhs.word_.begin(), rhs.word_.end());
        return {std::move(p), std::move(w), simple_count_, positive_count_};
    }

    WeylElement inverse() const {
        std::vector<RootIndex> p(perm_.size());
        for (std::size_t r = 0; r < p.size(); ++r) p[perm_[r]] = static_cast<RootIndex>(r);
        std::vector<int> w(word_.rbegin(), word_.rend());
        return {std::move(p), std::move(w), simple_count_, positive_count_};
    }

    /// Elements are equal when they agree on the simple roots.
    bool operator==(const WeylElement& other) const {
        return std::equal(perm_.begin(), perm_.begin() + simple_count_, other.perm_.begin(),
                          other.perm_.begin() + other.simple_count_);
    }

private:
    std::vector<RootIndex> perm_;
    std::vector<int> word_;
    int simple_count_ = 0;
    int positive_count_ = 0;
};

/// Least k >= 1 with w^k = 1, from the cycle structure of the permutation.
inline int element_order(const WeylElement& w) {
    const auto& p = w.perm();
    std::vector<char> seen(p.size(), 0);
    long long order = 1;
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        long long len = 0;
        for (std::size_t r = s; !seen[r]; r = p[r]) {
            seen[r] = 1;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return static_cast<int>(order);
}

class RootSystem {
public:
    explicit RootSystem(CartanType type) : type_(std::move(type)) {
        build_cartan();
        build_roots();
        build_reflections();
    }

    const CartanType& cartan_type() const { return type_; }
    int rank() const { return rank_; }
    int positive_count() const { return nu_; }
    int root_count() const { return 2 * nu_; }

    /// A[i][j] = <alpha_j, alpha_i^vee>, so s_i(alpha_j) = alpha_j - A[i][j] alpha_i.
    const IntMatrix& cartan_matrix() const { return cartan_; }
    /// Integral invariant form: short roots have norm 2, long roots 4 (B, C, F) or 6 (G).
    const IntMatrix& gram() const { return gram_; }

    /// Which component and which Bourbaki node a global index belongs to.
    const std::vector<std::pair<int, int>>& node_origin() const { return origin_; }
    /// First global index of each component.
    const std::vector<int>& component_offsets() const { return offsets_; }

    std::span<const int> root(int index) const {
        return {coords_.data() + static_cast<std::size_t>(index) * static_cast<std::size_t>(rank_), static_cast<std::size_t>(rank_)};
    }

    bool is_positive(int index) const { return index < nu_; }
    int negative(int index) const { return index < nu_ ? index + nu_ : index - nu_; }
    int height(int index) const {
        int h = 0;
        for (int c : root(index)) h += c;
        return h;
    }

    /// (r, r) in the integral form.
    int norm(int index) const {
        auto c = root(index);
        int total = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) total += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j)] * gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return total;
    }

    /// Long relative to its own irreducible component.
    bool is_long(int index) const {
        int comp = component_of_root(index);
        return norm(index) == max_norm_[static_cast<std::size_t>(comp)];
    }

    int component_of_root(int index) const {
        auto c = root(index);
        for (int i = 0; i < rank_; ++i)
            if (c[static_cast<std::size_t>(i)] != 0) return origin_[static_cast<std::size_t>(i)].first;
        return 0;
    }

    /// Root support lies in J.
    bool supported_in(int index, SubsetJ J) const {
        auto c = root(index);
        for (int i = 0; i < rank_; ++i)
            if (c[static_cast<std::size_t>(i)] != 0 && !J.contains(i)) return false;
        return true;
    }

    std::optional<int> find(std::span<const int> coords) const {
        auto it = lookup_.find(key(coords));
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }

    /// s_i as a permutation of the root list.
    const std::vector<RootIndex>& reflection_perm(int i) const { return reflections_[static_cast<std::size_t>(i)]; }

    int coxeter_entry(int i, int j) const {
        if (i == j) return 1;
        int p = cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * cartan_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        switch (p) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: throw UnknownDiagram("non-finite Cartan entry");
        }
    }

    IntMatrix coxeter_matrix(SubsetJ J) const {
        auto idx = J.indices();
        IntMatrix m(idx.size(), std::vector<int>(idx.size()));
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) m[a][b] = coxeter_entry(idx[a], idx[b]);
        return m;
    }

    WeylElement identity() const {
        std::vector<RootIndex> p(static_cast<std::size_t>(root_count()));
        std::iota(p.begin(), p.end(), RootIndex{0});
        return {std::move(p), {}, rank_, nu_};
    }

    WeylElement simple_reflection(int i) const { return {reflections_[static_cast<std::size_t>(i)], {i}, rank_, nu_}; }

    /// Right multiplication by a simple reflection: (w s_i).
    WeylElement times_simple(const WeylElement& w, int i) const {
        const auto& s = reflections_[static_cast<std::size_t>(i)];
        std::vector<RootIndex> p(w.perm().size());
        for (std::size_t r = 0; r < p.size(); ++r) p[r] = w.perm()[s[r]];
        std::vector<int> word = w.word();
        word.push_back(i);
        return {std::move(p), std::move(word), rank_, nu_};
    }

    /// The element with the given word (0-based simple indices).
    WeylElement from_word(std::span<const int> word) const {
        WeylElement w = identity();
        for (int i : word) {
            if (i < 0 || i >= rank_) throw InputError("simple reflection index out of range");
            w = times_simple(w, i);
        }
        return w;
    }

private:
    static std::string key(std::span<const int> coords) {
        std::string k(coords.size(), '\0');
        for (std::size_t i = 0; i < coords.size(); ++i) k[i] = static_cast<char>(coords[i]);
        return k;
    }

    void build_cartan() {
        for (const Factor& f : type_.factors()) {
            offsets_.push_back(rank_);
            rank_ += f.rank;
        }
        if (rank_ > 64) throw InputError("rank above 64 is not supported");
        cartan_.assign(static_cast<std::size_t>(rank_), std::vector<int>(static_cast<std::size_t>(rank_), 0));
        gram_ = cartan_;
        for (std::size_t c = 0; c < type_.factors().size(); ++c) {
            const Factor f = type_.factors()[c];
            const int o = offsets_[c];
            const int n = f.rank;
            std::vector<int> norms(static_cast<std::size_t>(n), 2);
            std::vector<std::pair<int, int>> edges;  // 0-based local, simple bonds
            auto chain = [&](int from, int to) {
                for (int i = from; i < to; ++i) edges.emplace_back(i, i + 1);
            };
            switch (f.family) {
            case Family::A: chain(0, n - 1); break;
            case Family::B:
                chain(0, n - 1);
                std::fill(norms.begin(), norms.end() - 1, 4);
                break;
            case Family::C:
                chain(0, n - 1);
                norms[static_cast<std::size_t>(n - 1)] = 4;
                break;
            case Family::D:
                chain(0, n - 2);
                edges.emplace_back(n - 3, n - 1);
                break;
            case Family::E:
                edges.emplace_back(0, 2);
                edges.emplace_back(1, 3);
                chain(2, n - 1);
                break;
            case Family::F:
                chain(0, 3);
                norms = {4, 4, 2, 2};
                break;
            case Family::G:
                edges.emplace_back(0, 1);
                norms = {2, 6};
                break;
            }
            for (int i = 0; i < n; ++i) {
                gram_[static_cast<std::size_t>(o + i)][static_cast<std::size_t>(o + i)] = norms[static_cast<std::size_t>(i)];
                origin_.emplace_back(static_cast<int>(c), i);
            }
            for (auto [a, b] : edges) {
                int na = norms[static_cast<std::size_t>(a)], nb = norms[static_cast<std::size_t>(b)];
                // (alpha_a, alpha_b) = -max(norm)/2 for every bond in a finite diagram
                int ip = -std::max(na, nb) / 2;
                gram_[static_cast<std::size_t>(o + a)][static_cast<std::size_t>(o + b)] = ip;
                gram_[static_cast<std::size_t>(o + b)][static_cast<std::size_t>(o + a)] = ip;
            }
            max_norm_.push_back(*std::max_element(norms.begin(), norms.end()));
        }
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    2 * gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] / gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    }

    // Closure from the simple roots: a positive root other than alpha_i is
    // sent by s_i to another positive root, and every positive root is
    // reached from a simple one by such steps.
    void build_roots() {
        const std::size_t n = static_cast<std::size_t>(rank_);
        std::vector<std::vector<int>> pos;
        std::unordered_map<std::string, int> seen;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<int> e(n, 0);
            e[i] = 1;
            seen.emplace(key(e), static_cast<int>(pos.size()));
            pos.push_back(std::move(e));
        }
        for (std::size_t q = 0; q < pos.size(); ++q) {
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<int> r = pos[q];
                int pairing = 0;
                for (std::size_t j = 0; j < n; ++j) pairing += r[j] * cartan_[i][j];
                r[i] -= pairing;
                if (std::any_of(r.begin(), r.end(), [](int c) { return c < 0; })) continue;
                if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) continue;
                if (seen.emplace(key(r), static_cast<int>(pos.size())).second) pos.push_back(std::move(r));
            }
        }
        std::sort(pos.begin(), pos.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
            int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
            if (ha != hb) return ha < hb;
            return a > b;
        });
        nu_ = static_cast<int>(pos.size());
        if (2 * static_cast<long>(nu_) > 65535) throw InputError("root system too large");
        coords_.assign(static_cast<std::size_t>(2 * nu_) * n, 0);
        for (int r = 0; r < nu_; ++r)
            for (std::size_t j = 0; j < n; ++j) {
                coords_[static_cast<std::size_t>(r) * n + j] = pos[static_cast<std::size_t>(r)][j];
                coords_[static_cast<std::size_t>(r + nu_) * n + j] = -pos[static_cast<std::size_t>(r)][j];
            }
        for (int r = 0; r < 2 * nu_; ++r) lookup_.emplace(key(root(r)), r);
    }

    void build_reflections() {
        const std::size_t n = static_cast<std::size_t>(rank_);
        reflections_.assign(n, std::vector<RootIndex>(static_cast<std::size_t>(2 * nu_)));
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (int r = 0; r < 2 * nu_; ++r) {
                auto c = root(r);
                int pairing = 0;
                for (std::size_t j = 0; j < n; ++j) pairing += c[j] * cartan_[i][j];
                std::copy(c.begin(), c.end(), v.begin());
                v[i] -= pairing;
                auto img = find(v);
                if (!img) throw Error("root closure is not reflection-stable");
                reflections_[i][static_cast<std::size_t>(r)] = static_cast<RootIndex>(*img);
            }
        }
    }

    CartanType type_;
    int rank_ = 0;
    int nu_ = 0;
    IntMatrix cartan_;
    IntMatrix gram_;
    std::vector<int> offsets_;
    std::vector<std::pair<int, int>> origin_;
    std::vector<int> max_norm_;
    std::vector<int> coords_;
    std::unordered_map<std::string, int> lookup_;
    std::vector<std::vector<RootIndex>> reflections_;
};

inline RootSystem build_root_system(const CartanType& t) { return RootSystem(t); }

/// Number of reflections of W_J: positive roots supported in J.
inline int nu(const RootSystem& rs, SubsetJ J) {
    if (!J.valid_for(rs.rank())) throw InputError("subset index out of range");
    int count = 0;
    for (int r = 0; r < rs.positive_count(); ++r)
        if (rs.supported_in(r, J)) ++count;
    return count;
}

/// Longest element of W_J. Greedy: while some alpha_j (j in J, lowest index
/// first) is still sent to a positive root, multiply by s_j on the right.
inline WeylElement longest_element(const RootSystem& rs, SubsetJ J) {
    if (!J.valid_for(rs.rank())) throw InputError("subset index out of range");
    const auto idx = J.indices();
    WeylElement w = rs.identity();
    for (;;) {
        int next = -1;
        for (int j : idx)
            if (rs.is_positive(w(static_cast<std::size_t>(j)))) {
                next = j;
                break;
            }
        if (next < 0) return w;
        w = rs.times_simple(w, next);
    }
}

/// Reduced word (0-based indices, leftmost first) found by stripping left descents.
inline std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
    std::vector<int> word;
    WeylElement cur = w;
    while (!cur.is_identity()) {
        const WeylElement inv = cur.inverse();
        for (int i = 0; i < rs.rank(); ++i)
            if (!rs.is_positive(inv(static_cast<std::size_t>(i)))) {
                word.push_back(i);
                cur = rs.simple_reflection(i) * cur;
                break;
            }
    }
    return word;
}

/// Components of the subdiagram on J; node lists are global indices in Bourbaki order.
inline std::vector<IdentifiedComponent> subdiagram_components(const RootSystem& rs, SubsetJ J) {
    if (!J.valid_for(rs.rank())) throw InputError("subset index out of range");
    auto idx = J.indices();
    std::vector<Rational> lengths;
    for (int i : idx) lengths.emplace_back(rs.gram()[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    auto comps = identify_diagram(rs.coxeter_matrix(J), lengths);
    for (auto& c : comps)
        for (int& v : c.nodes) v = idx[static_cast<std::size_t>(v)];
    return comps;
}

inline CartanType subdiagram_type(const RootSystem& rs, SubsetJ J) { return to_cartan_type(subdiagram_components(rs, J)); }

} // namespace weylsheaf
