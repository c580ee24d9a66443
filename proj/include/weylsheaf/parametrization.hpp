#pragma once

// The set of triples (J, epsilon, zeta): J a subset of the simple reflections
// with nonempty cuspidal set for W_J, zeta a cuspidal label of W_J and
// epsilon an irreducible character label of the relative Weyl group.
//
// Irreducible components are handled independently and combined as a
// product, first component outermost. Within a component the order is
// J by (size, bitset value), then zeta, then epsilon.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "weylsheaf/cartan_type.hpp"
#include "weylsheaf/cuspidal.hpp"
#include "weylsheaf/irr_labels.hpp"
#include "weylsheaf/relative_weyl.hpp"
#include "weylsheaf/root_system.hpp"

namespace weylsheaf {

/// One Harish-Chandra series of one irreducible component: the fiber over (J, zeta).
struct Series {
    SubsetJ J;  // global node indices
    CartanType levi;
    ZetaLabel zeta;
    CartanType relative;
    std::uint64_t count = 0;
};

struct ParameterPart {
    std::string tag;  // "E8#1"; "1" for the trivial ambient type
    SubsetJ J;
    CartanType levi;
    ZetaLabel zeta;
    CartanType relative;
    IrrLabel epsilon;

    bool operator==(const ParameterPart&) const = default;
};

struct SheafParameter {
    CartanType ambient;
    std::vector<ParameterPart> parts;  // one per irreducible component

    SubsetJ J() const {
        SubsetJ j;
        for (const auto& p : parts) j = j | p.J;
        return j;
    }

    CartanType levi() const {
        CartanType t;
        for (const auto& p : parts) t = t + p.levi;
        return t;
    }

    CartanType relative() const {
        CartanType t;
        for (const auto& p : parts) t = t + p.relative;
        return t;
    }

    std::string zeta_string() const {
        if (parts.size() == 1) return to_string(parts.front().zeta);
        std::string out = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ';';
            out += to_string(parts[i].zeta);
        }
        return out + ")";
    }

    std::string epsilon_string() const {
        if (parts.size() == 1) return to_string(parts.front().epsilon);
        std::string out = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ';';
            out += to_string(parts[i].epsilon);
        }
        return out + ")";
    }

    bool operator==(const SheafParameter& o) const { return ambient == o.ambient && parts == o.parts; }
};

namespace detail {

inline std::vector<int> component_offsets(const CartanType& t) {
    std::vector<int> off;
    int acc = 0;
    for (const Factor& f : t.factors()) {
        off.push_back(acc);
        acc += f.rank;
    }
    return off;
}

inline std::string component_tag(const CartanType& t, std::size_t c) {
    if (t.is_trivial()) return "1";
    return t.factors()[c].name() + "#" + std::to_string(c + 1);
}

} // namespace detail

/// Series of one irreducible component, J shifted by `offset` into global numbering.
inline std::vector<Series> component_series(Factor f, int offset = 0) {
    const CartanType t({f});
    RootSystem rs(t);
    std::vector<Series> out;
    auto shift = [&](SubsetJ J) { return SubsetJ(J.bits() << offset); };
    auto add = [&](SubsetJ J, const CartanType& levi, const CartanType& relative) {
        const std::uint64_t n = irr_count(relative);
        for (const auto& z : cuspidal_set(levi)) out.push_back({shift(J), levi, z, relative, n});
    };
    if (f.family == Family::A) {
        // every nonempty parabolic of A_n is of type A; only J = {} contributes
        add(SubsetJ{}, CartanType{}, t);
        return out;
    }
    for (SubsetJ J : all_subsets(rs.rank())) {
        const CartanType levi = subdiagram_type(rs, J);
        if (!has_cuspidal(levi)) continue;
        add(J, levi, relative_weyl_group(rs, J).identified_type);
    }
    return out;
}

/// Series of the whole type: products of component series, first component outermost.
inline std::vector<std::vector<Series>> series_by_component(const CartanType& t) {
    std::vector<std::vector<Series>> out;
    if (t.is_trivial()) {
        out.push_back({Series{SubsetJ{}, CartanType{}, ZetaLabel{}, CartanType{}, 1}});
        return out;
    }
    const auto off = detail::component_offsets(t);
    for (std::size_t c = 0; c < t.factors().size(); ++c) out.push_back(component_series(t.factors()[c], off[c]));
    return out;
}

namespace detail {

/// Products of component series (one index per component), ordered by the
/// global J as (popcount, bits); within one J the zeta tuples stay lexicographic.
inline std::vector<std::vector<std::size_t>> product_series(const std::vector<std::vector<Series>>& by_comp) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& c : by_comp)
        if (c.empty()) return out;
    std::vector<std::size_t> pos(by_comp.size(), 0);
    for (;;) {
        out.push_back(pos);
        std::size_t c = by_comp.size();
        while (c-- > 0) {
            if (++pos[c] < by_comp[c].size()) break;
            pos[c] = 0;
        }
        if (c == static_cast<std::size_t>(-1)) break;
    }
    auto global_J = [&](const std::vector<std::size_t>& idx) {
        SubsetJ J;
        for (std::size_t c = 0; c < idx.size(); ++c) J = J | by_comp[c][idx[c]].J;
        return J;
    };
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return global_J(a) < global_J(b); });
    return out;
}

} // namespace detail

/// Calls `visit` once per parameter, in the documented order. Returns the count.
inline std::uint64_t for_each_parameter(const CartanType& t, const std::function<void(const SheafParameter&)>& visit) {
    const auto by_comp = series_by_component(t);
    // epsilon labels per component series
    std::vector<std::vector<std::vector<IrrLabel>>> eps(by_comp.size());
    for (std::size_t c = 0; c < by_comp.size(); ++c)
        for (const auto& s : by_comp[c]) eps[c].push_back(irr_labels(s.relative));

    std::uint64_t n = 0;
    SheafParameter cur{t, {}};
    for (const auto& idx : detail::product_series(by_comp)) {
        std::vector<std::size_t> pos(idx.size(), 0);
        bool empty = false;
        for (std::size_t c = 0; c < idx.size(); ++c) empty = empty || eps[c][idx[c]].empty();
        if (empty) continue;
        for (;;) {
            cur.parts.clear();
            for (std::size_t c = 0; c < idx.size(); ++c) {
                const Series& s = by_comp[c][idx[c]];
                cur.parts.push_back({detail::component_tag(t, c), s.J, s.levi, s.zeta, s.relative, eps[c][idx[c]][pos[c]]});
            }
            visit(cur);
            ++n;
            std::size_t c = idx.size();
            while (c-- > 0) {
                if (++pos[c] < eps[c][idx[c]].size()) break;
                pos[c] = 0;
            }
            if (c == static_cast<std::size_t>(-1)) break;
        }
    }
    return n;
}

inline std::vector<SheafParameter> enumerate_parameters(const CartanType& t) {
    std::vector<SheafParameter> out;
    for_each_parameter(t, [&](const SheafParameter& p) { out.push_back(p); });
    return out;
}

/// Sum over series of |cuspidal labels| * |Irr W^{S/J}|, without label streams.
inline std::uint64_t count_parameters(const CartanType& t) {
    std::uint64_t total = 1;
    for (const auto& comp : series_by_component(t)) {
        std::uint64_t c = 0;
        for (const auto& s : comp) c = detail::checked_add(c, s.count);
        total = detail::checked_mul(total, c);
    }
    return total;
}

/// zeta -> (S, 1, zeta). For reducible types zeta has one entry per component.
inline SheafParameter embed_cuspidal(const CartanType& t, const ZetaLabel& zeta) {
    const auto set = cuspidal_set(t);
    if (std::find(set.begin(), set.end(), zeta) == set.end())
        throw LabelNotCuspidal("'" + to_string(zeta) + "' is not a cuspidal label of " + t.name());
    SheafParameter p{t, {}};
    if (t.is_trivial()) {
        p.parts.push_back({"1", SubsetJ{}, CartanType{}, ZetaLabel{}, CartanType{}, IrrLabel{UnitLabel{}}});
        return p;
    }
    const auto off = detail::component_offsets(t);
    for (std::size_t c = 0; c < t.factors().size(); ++c) {
        const Factor f = t.factors()[c];
        const SubsetJ full(SubsetJ::full(f.rank).bits() << off[c]);
        p.parts.push_back({detail::component_tag(t, c), full, CartanType({f}), ZetaLabel{zeta[c]}, CartanType{}, IrrLabel{UnitLabel{}}});
    }
    return p;
}

struct SeriesEntry {
    SubsetJ J;
    CartanType levi;
    std::vector<ZetaLabel> zeta;  // one per component
    CartanType relative;
    std::uint64_t count = 0;

    std::string zeta_string() const {
        if (zeta.size() == 1) return to_string(zeta.front());
        std::string out = "(";
        for (std::size_t i = 0; i < zeta.size(); ++i) {
            if (i) out += ';';
            out += to_string(zeta[i]);
        }
        return out + ")";
    }
};

struct SeriesReport {
    CartanType ambient;
    std::vector<SeriesEntry> series;
    std::uint64_t total = 0;
};

/// Fibers over (J, zeta), in the parameter order.
inline SeriesReport series_report(const CartanType& t) {
    const auto by_comp = series_by_component(t);
    SeriesReport rep{t, {}, 0};
    for (const auto& idx : detail::product_series(by_comp)) {
        SeriesEntry e{SubsetJ{}, CartanType{}, {}, CartanType{}, 1};
        for (std::size_t c = 0; c < idx.size(); ++c) {
            const Series& s = by_comp[c][idx[c]];
            e.J = e.J | s.J;
            e.levi = e.levi + s.levi;
            e.zeta.push_back(s.zeta);
            e.relative = e.relative + s.relative;
            e.count = detail::checked_mul(e.count, s.count);
        }
        rep.total = detail::checked_add(rep.total, e.count);
        rep.series.push_back(std::move(e));
    }
    return rep;
}

} // namespace weylsheaf
