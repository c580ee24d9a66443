#pragma once

// Generic exact computations in a finite group given by generators.
//
// The group's elements are supplied by a representation type R (see the
// GroupRep concept): R::Element must be totally ordered, and the canonical
// element store is the sorted vector of all elements. Stores are built by a
// breadth-first closure under left multiplication by the generators.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "weylsheaf/errors.hpp"

namespace weylsheaf::group {

template <class R>
concept GroupRep = requires(const R& r, const typename R::Element& x, std::size_t i,
                            std::vector<typename R::Element> gens) {
    requires std::totally_ordered<typename R::Element>;
    { r.identity() } -> std::convertible_to<typename R::Element>;
    { r.multiply(x, x) } -> std::convertible_to<typename R::Element>;
    { r.inverse(x) } -> std::convertible_to<typename R::Element>;
    { r.generator_count() } -> std::convertible_to<std::size_t>;
    { r.generator(i) } -> std::convertible_to<typename R::Element>;
    { r.left_multiply(i, x) } -> std::convertible_to<typename R::Element>;   // g_i * x
    { r.conjugate(i, x) } -> std::convertible_to<typename R::Element>;       // g_i^-1 * x * g_i
    { r.with_generators(gens) } -> std::same_as<R>;
};

/// Size caps for brute-force work. Configuration, not constants.
struct Bounds {
    std::size_t enumeration = 3'000'000;
    std::size_t table = 20'000;
};

template <class E>
class ElementStore {
public:
    ElementStore() = default;
    explicit ElementStore(std::vector<E> sorted) : elements_(std::move(sorted)) {}

    std::size_t size() const { return elements_.size(); }
    const E& operator[](std::size_t i) const { return elements_[i]; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }
    const std::vector<E>& elements() const { return elements_; }

    std::optional<std::size_t> index_of(const E& x) const {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
        if (it == elements_.end() || !(*it == x)) return std::nullopt;
        return static_cast<std::size_t>(it - elements_.begin());
    }

    bool contains(const E& x) const { return index_of(x).has_value(); }

private:
    std::vector<E> elements_;
};

template <GroupRep R>
class FiniteGroup {
public:
    using Element = typename R::Element;

    explicit FiniteGroup(R rep, Bounds bounds = {}) : rep_(std::move(rep)), bounds_(bounds) {}

    const R& rep() const { return rep_; }
    const Bounds& bounds() const { return bounds_; }

    FiniteGroup subgroup(std::vector<Element> generators) const {
        return FiniteGroup(rep_.with_generators(std::move(generators)), bounds_);
    }

private:
    R rep_;
    Bounds bounds_;
};

/// Breadth-first closure. Throws BoundExceeded once more than `cap` elements are found.
template <GroupRep R>
ElementStore<typename R::Element> enumerate(const FiniteGroup<R>& g, std::size_t cap) {
    using E = typename R::Element;
    const R& rep = g.rep();
    std::vector<E> visited{rep.identity()};
    std::vector<E> frontier = visited;
    std::vector<E> candidates;
    std::vector<E> merged;
    const std::size_t ngens = rep.generator_count();
    while (!frontier.empty()) {
        candidates.clear();
        candidates.reserve(frontier.size() * ngens);
        for (const E& x : frontier)
            for (std::size_t i = 0; i < ngens; ++i) candidates.push_back(rep.left_multiply(i, x));
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        frontier.clear();
        std::set_difference(candidates.begin(), candidates.end(), visited.begin(), visited.end(),
                            std::back_inserter(frontier));
        if (visited.size() + frontier.size() > cap)
            throw BoundExceeded("group has more than " + std::to_string(cap) + " elements");
        merged.clear();
        merged.reserve(visited.size() + frontier.size());
        std::merge(visited.begin(), visited.end(), frontier.begin(), frontier.end(), std::back_inserter(merged));
        visited.swap(merged);
    }
    return ElementStore<E>(std::move(visited));
}

template <GroupRep R>
ElementStore<typename R::Element> enumerate(const FiniteGroup<R>& g) {
    return enumerate(g, g.bounds().enumeration);
}

template <class E>
struct ConjugacyClass {
    E rep;
    std::size_t size = 0;
};

template <class E>
struct ClassPartition {
    std::vector<ConjugacyClass<E>> classes;   // ordered by (size, rep)
    std::vector<std::uint32_t> class_of;      // indexed by store position
};

/// Orbits of the conjugation action. Each representative is the minimal
/// element of its class; classes are ordered by (size, representative).
template <GroupRep R>
ClassPartition<typename R::Element> conjugacy_classes(const FiniteGroup<R>& g, const ElementStore<typename R::Element>& store) {
    using E = typename R::Element;
    constexpr std::uint32_t unset = 0xFFFFFFFFu;
    const R& rep = g.rep();
    ClassPartition<E> out;
    out.class_of.assign(store.size(), unset);
    std::vector<std::size_t> stack;
    const std::size_t ngens = rep.generator_count();
    for (std::size_t s = 0; s < store.size(); ++s) {
        if (out.class_of[s] != unset) continue;
        const auto cls = static_cast<std::uint32_t>(out.classes.size());
        std::size_t size = 1;
        out.class_of[s] = cls;
        stack.push_back(s);
        while (!stack.empty()) {
            const E x = store[stack.back()];
            stack.pop_back();
            for (std::size_t i = 0; i < ngens; ++i) {
                auto idx = store.index_of(rep.conjugate(i, x));
                if (!idx) throw Error("element store is not closed under conjugation");
                if (out.class_of[*idx] == unset) {
                    out.class_of[*idx] = cls;
                    stack.push_back(*idx);
                    ++size;
                }
            }
        }
        out.classes.push_back({store[s], size});
    }
    // reorder by (size, rep); reps were discovered in increasing order already
    std::vector<std::uint32_t> order(out.classes.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return out.classes[a].size < out.classes[b].size;
    });
    std::vector<std::uint32_t> remap(order.size());
    std::vector<ConjugacyClass<E>> sorted;
    sorted.reserve(order.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) {
        remap[order[i]] = i;
        sorted.push_back(out.classes[order[i]]);
    }
    for (auto& c : out.class_of) c = remap[c];
    out.classes = std::move(sorted);
    return out;
}

template <GroupRep R>
ClassPartition<typename R::Element> conjugacy_classes(const FiniteGroup<R>& g) {
    return conjugacy_classes(g, enumerate(g));
}

/// Number of conjugacy classes without keeping the class map around.
template <GroupRep R>
std::size_t class_count(const FiniteGroup<R>& g, const ElementStore<typename R::Element>& store) {
    return conjugacy_classes(g, store).classes.size();
}

/// Elements of the group generated by `gens`, as a sorted store.
template <GroupRep R>
ElementStore<typename R::Element> generated_subgroup(const FiniteGroup<R>& g, std::vector<typename R::Element> gens) {
    return enumerate(g.subgroup(std::move(gens)));
}

/// Z_G(x) = { z : zx = xz }, with a generating set extracted greedily from the
/// store (each new generator is the least element outside the span so far).
template <GroupRep R>
FiniteGroup<R> centralizer(const FiniteGroup<R>& g, const ElementStore<typename R::Element>& store, const typename R::Element& x) {
    using E = typename R::Element;
    const R& rep = g.rep();
    std::vector<E> members;
    for (const E& z : store)
        if (rep.multiply(z, x) == rep.multiply(x, z)) members.push_back(z);
    std::vector<E> gens;
    ElementStore<E> span(std::vector<E>{rep.identity()});
    for (const E& z : members) {
        if (span.contains(z)) continue;
        gens.push_back(z);
        span = generated_subgroup(g, gens);
        if (span.size() == members.size()) break;
    }
    return g.subgroup(std::move(gens));
}

template <GroupRep R>
FiniteGroup<R> centralizer(const FiniteGroup<R>& g, const typename R::Element& x) {
    return centralizer(g, enumerate(g), x);
}

} // namespace weylsheaf::group
