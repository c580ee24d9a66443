#pragma once

// Cartan types: finite multisets of irreducible crystallographic components.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "weylsheaf/errors.hpp"

namespace weylsheaf {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct Factor {
    Family family = Family::A;
    int rank = 1;

    auto operator<=>(const Factor&) const = default;

    std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error("integer overflow in group-theoretic count");
    return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw Error("integer overflow in group-theoretic count");
    return out;
}

// Canonical replacement for a single factor; degenerate ranks become products of A's.
inline std::vector<Factor> canonical_factors(Factor f, std::vector<std::string>& aliases) {
    auto alias = [&](const std::string& to) { aliases.push_back(f.name() + "=" + to); };
    switch (f.family) {
    case Family::A:
        if (f.rank < 1) throw InputError("rank out of range: " + f.name());
        return {f};
    case Family::B:
    case Family::C:
        if (f.rank < 1) throw InputError("rank out of range: " + f.name());
        if (f.rank == 1) {
            alias("A1");
            return {{Family::A, 1}};
        }
        if (f.family == Family::C && f.rank == 2) {
            alias("B2");
            return {{Family::B, 2}};
        }
        return {f};
    case Family::D:
        if (f.rank < 1) throw InputError("rank out of range: " + f.name());
        if (f.rank == 1) {
            alias("A1");
            return {{Family::A, 1}};
        }
        if (f.rank == 2) {
            alias("A1+A1");
            return {{Family::A, 1}, {Family::A, 1}};
        }
        if (f.rank == 3) {
            alias("A3");
            return {{Family::A, 3}};
        }
        return {f};
    case Family::E:
        if (f.rank < 6 || f.rank > 8) throw InputError("rank out of range: " + f.name());
        return {f};
    case Family::F:
        if (f.rank != 4) throw InputError("rank out of range: " + f.name());
        return {f};
    case Family::G:
        if (f.rank != 2) throw InputError("rank out of range: " + f.name());
        return {f};
    }
    throw InputError("unknown family");
}

} // namespace detail

/// A Cartan type in canonical form: components sorted by (family, rank).
/// The empty type is the trivial group {1}. Equality ignores the alias notes.
class CartanType {
public:
    CartanType() = default;

    explicit CartanType(std::vector<Factor> factors) {
        for (const Factor& f : factors) {
            auto canon = detail::canonical_factors(f, aliases_);
            factors_.insert(factors_.end(), canon.begin(), canon.end());
        }
        std::sort(factors_.begin(), factors_.end());
    }

    static CartanType single(Family family, int rank) { return CartanType({{family, rank}}); }

    const std::vector<Factor>& factors() const { return factors_; }
    const std::vector<std::string>& aliases() const { return aliases_; }

    int rank() const {
        int r = 0;
        for (const Factor& f : factors_) r += f.rank;
        return r;
    }

    bool is_trivial() const { return factors_.empty(); }
    bool is_irreducible() const { return factors_.size() == 1; }

    /// "E8", "A2+G2"; the trivial type prints as "1".
    std::string name() const {
        if (factors_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) out += '+';
            out += factors_[i].name();
        }
        return out;
    }

    bool operator==(const CartanType& other) const { return factors_ == other.factors_; }
    auto operator<=>(const CartanType& other) const { return factors_ <=> other.factors_; }

    /// Product type (component multisets are concatenated, then re-sorted).
    friend CartanType operator+(const CartanType& a, const CartanType& b) {
        CartanType out;
        out.factors_ = a.factors_;
        out.factors_.insert(out.factors_.end(), b.factors_.begin(), b.factors_.end());
        std::sort(out.factors_.begin(), out.factors_.end());
        return out;
    }

private:
    std::vector<Factor> factors_;
    std::vector<std::string> aliases_;
};

/// Parse "E8", "A1xA1", "B2+G2", "D3" (becomes A3). "1" and "A0" are the trivial type.
inline CartanType parse_cartan_type(std::string_view spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InputError("empty Cartan type");
    if (s == "1" || s == "A0") return CartanType{};

    std::vector<Factor> factors;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find_first_of("+x", pos);
        if (end == std::string::npos) end = s.size();
        std::string token = s.substr(pos, end - pos);
        if (token.size() < 2) throw InputError("malformed type token '" + token + "'");
        char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
        if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos)
            throw InputError("unknown family letter in '" + token + "'");
        std::string digits = token.substr(1);
        if (digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw InputError("malformed rank in '" + token + "'");
        int rank = std::stoi(digits);
        if (letter == 'A' && rank == 0) {
            // A0 inside a product contributes nothing
        } else {
            factors.push_back({static_cast<Family>(letter), rank});
        }
        pos = end + 1;
        if (end == s.size()) break;
        if (pos == s.size()) throw InputError("trailing separator in '" + s + "'");
    }
    return CartanType(std::move(factors));
}

/// Number of positive roots (= reflections) of one irreducible component.
inline std::uint64_t nu_closed_form(Factor f) {
    const std::uint64_t n = static_cast<std::uint64_t>(f.rank);
    switch (f.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    }
    return 0;
}

inline std::uint64_t nu_closed_form(const CartanType& t) {
    std::uint64_t total = 0;
    for (const Factor& f : t.factors()) total += nu_closed_form(f);
    return total;
}

/// Degrees of the basic invariants.
inline std::vector<int> invariant_degrees(Factor f) {
    std::vector<int> d;
    const int n = f.rank;
    switch (f.family) {
    case Family::A:
        for (int i = 2; i <= n + 1; ++i) d.push_back(i);
        break;
    case Family::B:
    case Family::C:
        for (int i = 1; i <= n; ++i) d.push_back(2 * i);
        break;
    case Family::D:
        for (int i = 1; i < n; ++i) d.push_back(2 * i);
        d.push_back(n);
        std::sort(d.begin(), d.end());
        break;
    case Family::E:
        if (n == 6) d = {2, 5, 6, 8, 9, 12};
        else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
        else d = {2, 8, 12, 14, 18, 20, 24, 30};
        break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::G: d = {2, 6}; break;
    }
    return d;
}

/// |W| as the product of the invariant degrees.
inline std::uint64_t group_order(const CartanType& t) {
    std::uint64_t order = 1;
    for (const Factor& f : t.factors())
        for (int d : invariant_degrees(f)) order = detail::checked_mul(order, static_cast<std::uint64_t>(d));
    return order;
}

} // namespace weylsheaf
