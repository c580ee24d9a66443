#pragma once

// The cuspidal label sets: roots of unity attached to each irreducible type,
// with the order-1 label doubled as 1' and 1'' in types E8 and F4.
// Reducible types take the cartesian product of their components' sets.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "weylsheaf/cartan_type.hpp"
#include "weylsheaf/errors.hpp"

namespace weylsheaf {

enum class PrimeMark : std::uint8_t { none = 0, prime = 1, double_prime = 2 };

/// exp(2 pi i exponent / order), fraction in lowest terms.
class CuspidalLabel {
public:
    CuspidalLabel() = default;

    CuspidalLabel(int order, int exponent, PrimeMark mark = PrimeMark::none) {
        if (order < 1) throw InputError("root of unity order must be positive");
        exponent %= order;
        if (exponent < 0) exponent += order;
        const int g = std::gcd(order, exponent);
        order_ = order / g;
        exponent_ = exponent / g;
        if (exponent_ == 0) order_ = 1;
        if (mark != PrimeMark::none && order_ != 1) throw InputError("prime marks apply only to the label 1");
        mark_ = mark;
    }

    static CuspidalLabel sign(bool negative) { return negative ? CuspidalLabel(2, 1) : CuspidalLabel(1, 0); }

    int order() const { return order_; }
    int exponent() const { return exponent_; }
    PrimeMark mark() const { return mark_; }

    /// "1", "-1", "1'", "1''", otherwise "zeta(order,exponent)".
    std::string to_string() const {
        if (order_ == 1) {
            switch (mark_) {
            case PrimeMark::none: return "1";
            case PrimeMark::prime: return "1'";
            case PrimeMark::double_prime: return "1''";
            }
        }
        if (order_ == 2) return "-1";
        return "zeta(" + std::to_string(order_) + "," + std::to_string(exponent_) + ")";
    }

    /// Emission order: by (order, exponent), 1' before 1''.
    auto operator<=>(const CuspidalLabel& o) const {
        if (auto c = order_ <=> o.order_; c != 0) return c;
        if (auto c = exponent_ <=> o.exponent_; c != 0) return c;
        return static_cast<int>(mark_) <=> static_cast<int>(o.mark_);
    }
    bool operator==(const CuspidalLabel&) const = default;

private:
    int order_ = 1;
    int exponent_ = 0;
    PrimeMark mark_ = PrimeMark::none;
};

/// Parse "zeta(3,1)", "zeta(1,0)'", "1", "1'", "1''", "-1", "i", "-i".
inline CuspidalLabel parse_cuspidal_label(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    PrimeMark mark = PrimeMark::none;
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "''") == 0) {
        mark = PrimeMark::double_prime;
        s.resize(s.size() - 2);
    } else if (!s.empty() && s.back() == '\'') {
        mark = PrimeMark::prime;
        s.pop_back();
    }
    if (s == "1") return {1, 0, mark};
    if (s == "-1") return {2, 1, mark};
    if (s == "i") return {4, 1, mark};
    if (s == "-i") return {4, 3, mark};
    if (s.rfind("zeta(", 0) == 0 && s.back() == ')') {
        auto body = s.substr(5, s.size() - 6);
        auto comma = body.find(',');
        if (comma != std::string::npos) {
            try {
                std::size_t used = 0;
                int order = std::stoi(body.substr(0, comma), &used);
                if (used != comma) throw InputError("");
                std::string rest = body.substr(comma + 1);
                int exponent = std::stoi(rest, &used);
                if (used != rest.size()) throw InputError("");
                return {order, exponent, mark};
            } catch (const std::exception&) {
            }
        }
    }
    throw InputError("malformed cuspidal label '" + std::string(text) + "'");
}

/// One label per irreducible component; the empty tuple is the label 1 of the trivial group.
using ZetaLabel = std::vector<CuspidalLabel>;

inline std::string to_string(const ZetaLabel& z) {
    if (z.empty()) return "1";
    if (z.size() == 1) return z.front().to_string();
    std::string out = "(";
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) out += ';';
        out += z[i].to_string();
    }
    return out + ")";
}

/// Parses a single label or a parenthesized tuple "(a;b;...)" (',' also separates).
inline ZetaLabel parse_zeta_label(std::string_view text) {
    std::string s(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        ZetaLabel out;
        std::string body = s.substr(1, s.size() - 2);
        int depth = 0;
        std::string cur;
        for (char c : body) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if ((c == ',' || c == ';') && depth == 0) {
                out.push_back(parse_cuspidal_label(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        out.push_back(parse_cuspidal_label(cur));
        return out;
    }
    return {parse_cuspidal_label(s)};
}

inline bool is_square(long long v) {
    if (v < 0) return false;
    long long r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v;
}

inline bool is_pronic(long long n) {
    for (long long k = 1; k * k + k <= n; ++k)
        if (k * k + k == n) return true;
    return false;
}

/// Cuspidal labels of one irreducible component.
inline std::vector<CuspidalLabel> cuspidal_labels(Factor f) {
    const int n = f.rank;
    auto with_double_one = [](std::vector<CuspidalLabel> rest) {
        rest.emplace_back(1, 0, PrimeMark::prime);
        rest.emplace_back(1, 0, PrimeMark::double_prime);
        std::sort(rest.begin(), rest.end());
        return rest;
    };
    switch (f.family) {
    case Family::A: return {};
    case Family::B:
    case Family::C:
        if (is_pronic(n)) return {CuspidalLabel::sign((n / 2) % 2 == 1)};
        return {};
    case Family::D:
        if (n % 4 == 0 && is_square(n / 4)) return {CuspidalLabel::sign((n / 4) % 2 == 1)};
        return {};
    case Family::E:
        if (n == 6) return {{3, 1}, {3, 2}};  // (z^3-1)/(z-1)
        if (n == 7) return {{4, 1}, {4, 3}};  // (z^4-1)/(z^2-1)
        // (z^4-1)(z^5-1)(z^6-1)/(z^2-1): -1, +-i, the four primitive 5th roots,
        // the primitive 3rd and 6th roots, and 1 twice.
        return with_double_one({{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {6, 1}, {6, 5}});
    case Family::F:
        // (z^3-1)(z^4-1): -1, +-i, primitive cube roots, and 1 twice.
        return with_double_one({{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}});
    case Family::G:
        return {{1, 0}, {2, 1}, {3, 1}, {3, 2}};  // (z+1)(z^3-1)
    }
    return {};
}

/// The full set: cartesian product over components (first component varies slowest).
inline std::vector<ZetaLabel> cuspidal_set(const CartanType& t) {
    std::vector<ZetaLabel> out{ZetaLabel{}};
    for (const Factor& f : t.factors()) {
        auto labels = cuspidal_labels(f);
        std::vector<ZetaLabel> next;
        for (const auto& prefix : out)
            for (const auto& l : labels) {
                ZetaLabel z = prefix;
                z.push_back(l);
                next.push_back(std::move(z));
            }
        out = std::move(next);
    }
    return out;
}

inline std::uint64_t cuspidal_count(Factor f) { return cuspidal_labels(f).size(); }

inline std::uint64_t cuspidal_count(const CartanType& t) {
    std::uint64_t total = 1;
    for (const Factor& f : t.factors()) total = detail::checked_mul(total, cuspidal_count(f));
    return total;
}

inline bool has_cuspidal(const CartanType& t) { return cuspidal_count(t) > 0; }

} // namespace weylsheaf
