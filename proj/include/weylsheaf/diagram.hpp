#pragma once

// Recognition of finite crystallographic Coxeter diagrams.
//
// Input is a Coxeter matrix (orders m_ij) together with a squared length for
// each node. The lengths only matter at a double bond (B versus C, and the
// orientation of F4) and at the triple bond (node order of G2). Every
// recognized component is returned with its nodes listed in Bourbaki order:
//
//   A_n  1 - 2 - ... - n
//   B_n  1 - ... - (n-1) => n      alpha_n short
//   C_n  1 - ... - (n-1) <= n      alpha_n long
//   D_n  1 - ... - (n-2) < (n-1), n
//   E_n  1 - 3 - 4 - ... - n, with 2 attached to 4
//   F4   1 - 2 => 3 - 4            alpha_1, alpha_2 long
//   G2   1 <= 2                    alpha_1 short
//
// Ties between diagram-automorphic choices are broken towards the smaller
// input index so the numbering is deterministic.

#include <algorithm>
#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "weylsheaf/cartan_type.hpp"
#include "weylsheaf/errors.hpp"

namespace weylsheaf {

using Rational = boost::rational<std::int64_t>;
using IntMatrix = std::vector<std::vector<int>>;

struct IdentifiedComponent {
    Factor factor;
    std::vector<int> nodes;  // nodes[k] = input index of Bourbaki node k+1

    bool operator==(const IdentifiedComponent&) const = default;
};

namespace detail {

inline std::vector<int> path_from(int start, const std::vector<std::vector<int>>& adj, const std::vector<char>& in_comp) {
    std::vector<int> path{start};
    int prev = -1;
    int cur = start;
    for (;;) {
        int next = -1;
        for (int v : adj[static_cast<std::size_t>(cur)])
            if (v != prev && in_comp[static_cast<std::size_t>(v)]) next = v;
        if (next < 0) break;
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    return path;
}

inline IdentifiedComponent identify_connected(const std::vector<int>& comp, const IntMatrix& m,
                                              const std::vector<Rational>& len,
                                              const std::vector<std::vector<int>>& adj) {
    const int k = static_cast<int>(comp.size());
    if (k == 1) return {{Family::A, 1}, comp};

    std::vector<char> in_comp(m.size(), 0);
    for (int v : comp) in_comp[static_cast<std::size_t>(v)] = 1;

    int edges = 0, fours = 0, sixes = 0, max_degree = 0;
    for (int v : comp) {
        int deg = 0;
        for (int u : adj[static_cast<std::size_t>(v)]) {
            ++deg;
            if (u > v) {
                ++edges;
                int order = m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
                if (order == 4) ++fours;
                if (order == 6) ++sixes;
            }
        }
        max_degree = std::max(max_degree, deg);
    }
    if (edges != k - 1) throw UnknownDiagram("Coxeter graph component is not a tree");

    auto L = [&](int v) { return len[static_cast<std::size_t>(v)]; };
    auto order_of = [&](int a, int b) { return m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

    if (sixes > 0) {
        if (k != 2) throw UnknownDiagram("bond of order 6 outside rank 2");
        int a = comp[0], b = comp[1];
        if (L(b) < L(a)) std::swap(a, b);
        return {{Family::G, 2}, {a, b}};
    }

    if (fours > 0) {
        if (fours > 1 || max_degree > 2) throw UnknownDiagram("non-finite diagram with an order-4 bond");
        int leaf = -1;
        for (int v : comp)
            if (adj[static_cast<std::size_t>(v)].size() == 1 && (leaf < 0)) leaf = v;
        std::vector<int> path = path_from(leaf, adj, in_comp);
        if (k == 2) {
            int a = path[0], b = path[1];
            if (L(a) < L(b) || (L(a) == L(b) && a > b)) std::swap(a, b);
            return {{Family::B, 2}, {a, b}};
        }
        int pos = -1;  // double bond between path[pos] and path[pos+1]
        for (int i = 0; i + 1 < k; ++i)
            if (order_of(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i + 1)]) == 4) pos = i;
        if (pos == 0) {
            std::reverse(path.begin(), path.end());
            pos = k - 2;
        }
        if (pos == k - 2) {
            int last = path[static_cast<std::size_t>(k - 1)];
            int prev = path[static_cast<std::size_t>(k - 2)];
            Family fam = L(last) > L(prev) ? Family::C : Family::B;
            return {{fam, k}, path};
        }
        if (k == 4 && pos == 1) {
            if (L(path[0]) < L(path[3])) std::reverse(path.begin(), path.end());
            return {{Family::F, 4}, path};
        }
        throw UnknownDiagram("order-4 bond in an interior position");
    }

    if (max_degree <= 2) {
        int start = -1;
        for (int v : comp)
            if (adj[static_cast<std::size_t>(v)].size() == 1) {
                start = v;
                break;
            }
        return {{Family::A, k}, path_from(start, adj, in_comp)};
    }

    int branch = -1;
    for (int v : comp) {
        if (adj[static_cast<std::size_t>(v)].size() == 3) {
            if (branch >= 0) throw UnknownDiagram("more than one branch node");
            branch = v;
        } else if (adj[static_cast<std::size_t>(v)].size() > 3) {
            throw UnknownDiagram("node of degree > 3");
        }
    }
    std::vector<std::vector<int>> arms;
    for (int first : adj[static_cast<std::size_t>(branch)]) {
        std::vector<int> arm{first};
        int prev = branch, cur = first;
        for (;;) {
            int next = -1;
            for (int v : adj[static_cast<std::size_t>(cur)])
                if (v != prev) next = v;
            if (next < 0) break;
            arm.push_back(next);
            prev = cur;
            cur = next;
        }
        arms.push_back(arm);
    }
    std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.back() < b.back();
    });
    const std::size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
    if (a0 == 1 && a1 == 1) {
        // D_n: long arm toward node 1, two short arms are n-1 and n.
        std::vector<int> nodes;
        std::vector<int> lng = arms[2];
        std::vector<int> s1 = arms[0], s2 = arms[1];
        if (a2 == 1) {
            // D4: node 1 is the smallest-index leaf.
            std::vector<std::vector<int>> ends = arms;
            std::sort(ends.begin(), ends.end());
            lng = ends[0];
            s1 = ends[1];
            s2 = ends[2];
        }
        nodes.assign(lng.rbegin(), lng.rend());
        nodes.push_back(branch);
        nodes.push_back(s1[0]);
        nodes.push_back(s2[0]);
        return {{Family::D, k}, nodes};
    }
    if (a0 == 1 && a1 == 2 && a2 >= 2 && a2 <= 4) {
        const std::vector<int>& two = arms[1];
        const std::vector<int>& rest = arms[2];
        std::vector<int> nodes{two[1], arms[0][0], two[0], branch};
        nodes.insert(nodes.end(), rest.begin(), rest.end());
        return {{Family::E, k}, nodes};
    }
    throw UnknownDiagram("branched diagram is not of type D or E");
}

} // namespace detail

/// Identify every connected component. Components come back in canonical
/// (family, rank) order, ties broken by their first Bourbaki node.
inline std::vector<IdentifiedComponent> identify_diagram(const IntMatrix& coxeter, const std::vector<Rational>& lengths) {
    const std::size_t n = coxeter.size();
    std::vector<std::vector<int>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coxeter[i].size() != n) throw UnknownDiagram("Coxeter matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            int mij = coxeter[i][j];
            if (i == j) {
                if (mij != 1) throw UnknownDiagram("Coxeter matrix diagonal must be 1");
                continue;
            }
            if (mij != coxeter[j][i]) throw UnknownDiagram("Coxeter matrix is not symmetric");
            if (mij != 2 && mij != 3 && mij != 4 && mij != 6)
                throw UnknownDiagram("bond order " + std::to_string(mij) + " is not crystallographic");
            if (mij > 2) adj[i].push_back(static_cast<int>(j));
        }
    }

    std::vector<IdentifiedComponent> out;
    std::vector<char> seen(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{static_cast<int>(s)};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : adj[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(detail::identify_connected(comp, coxeter, lengths, adj));
    }
    std::sort(out.begin(), out.end(), [](const IdentifiedComponent& a, const IdentifiedComponent& b) {
        if (a.factor != b.factor) return a.factor < b.factor;
        return a.nodes.front() < b.nodes.front();
    });
    return out;
}

inline CartanType to_cartan_type(const std::vector<IdentifiedComponent>& comps) {
    std::vector<Factor> fs;
    for (const auto& c : comps) fs.push_back(c.factor);
    return CartanType(std::move(fs));
}

} // namespace weylsheaf
