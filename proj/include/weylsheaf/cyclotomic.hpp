#pragma once

// Exact arithmetic in Z[zeta_N], stored as integer coefficients in the
// power basis 1, z, ..., z^(phi(N)-1) reduced modulo the cyclotomic
// polynomial Phi_N, so equality is coefficient equality.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "weylsheaf/errors.hpp"

namespace weylsheaf {

using IntPoly = std::vector<std::int64_t>;  // low degree first

namespace detail {

inline IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
    // den monic
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) return {0};
    IntPoly q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        std::int64_t c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

} // namespace detail

/// Phi_n via x^n - 1 = prod_{d | n} Phi_d.
inline IntPoly cyclotomic_polynomial(int n) {
    if (n < 1) throw Error("cyclotomic polynomial index must be positive");
    std::map<int, IntPoly> phi;
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        IntPoly p(static_cast<std::size_t>(m) + 1, 0);
        p[0] = -1;
        p[static_cast<std::size_t>(m)] = 1;
        for (const auto& [d, pd] : phi)
            if (m % d == 0) p = detail::poly_divide_exact(p, pd);
        phi[m] = p;
    }
    return phi[n];
}

class CyclotomicField {
public:
    explicit CyclotomicField(int conductor) : conductor_(conductor), phi_(cyclotomic_polynomial(conductor)) {
        degree_ = static_cast<int>(phi_.size()) - 1;
        // z^k mod Phi_N for 0 <= k < 2N
        powers_.resize(static_cast<std::size_t>(2 * conductor_));
        IntPoly cur(static_cast<std::size_t>(degree_), 0);
        cur[0] = 1;
        for (int k = 0; k < 2 * conductor_; ++k) {
            powers_[static_cast<std::size_t>(k)] = cur;
            // multiply by z
            std::int64_t top = cur[static_cast<std::size_t>(degree_ - 1)];
            for (int i = degree_ - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
            cur[0] = 0;
            for (int i = 0; i < degree_; ++i) cur[static_cast<std::size_t>(i)] -= top * phi_[static_cast<std::size_t>(i)];
        }
    }

    int conductor() const { return conductor_; }
    int degree() const { return degree_; }
    const IntPoly& power(int k) const {
        k %= conductor_;
        if (k < 0) k += conductor_;
        return powers_[static_cast<std::size_t>(k)];
    }

private:
    int conductor_;
    IntPoly phi_;
    int degree_ = 0;
    std::vector<IntPoly> powers_;
};

/// Shared, immutable field objects keyed by conductor.
inline std::shared_ptr<const CyclotomicField> cyclotomic_field(int conductor) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[conductor];
    if (!slot) slot = std::make_shared<const CyclotomicField>(conductor);
    return slot;
}

class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(cyclotomic_field(1), 0) {}

    Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::int64_t integer)
        : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_->degree()), 0) {
        coeffs_[0] = integer;
    }

    /// z^k
    static Cyclotomic root_power(std::shared_ptr<const CyclotomicField> field, int k) {
        Cyclotomic c(field, 0);
        c.coeffs_ = field->power(k);
        return c;
    }

    /// sum_k multiplicities[k] * z^(k * step)
    static Cyclotomic from_root_sum(std::shared_ptr<const CyclotomicField> field, const std::vector<std::int64_t>& multiplicities, int step) {
        Cyclotomic c(field, 0);
        for (std::size_t k = 0; k < multiplicities.size(); ++k) {
            if (!multiplicities[k]) continue;
            const auto& p = field->power(static_cast<int>(k) * step);
            for (std::size_t i = 0; i < p.size(); ++i) c.coeffs_[i] += multiplicities[k] * p[i];
        }
        return c;
    }

    const CyclotomicField& field() const { return *field_; }
    const IntPoly& coefficients() const { return coeffs_; }

    bool is_integer() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i]) return false;
        return true;
    }
    std::int64_t integer_part() const { return coeffs_[0]; }

    Cyclotomic operator+(const Cyclotomic& o) const {
        check(o);
        Cyclotomic r = *this;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
        return r;
    }

    Cyclotomic operator-(const Cyclotomic& o) const {
        check(o);
        Cyclotomic r = *this;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
        return r;
    }

    Cyclotomic operator*(const Cyclotomic& o) const {
        check(o);
        Cyclotomic r(field_, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!coeffs_[i]) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
                if (!o.coeffs_[j]) continue;
                const auto& p = field_->power(static_cast<int>(i + j));
                const std::int64_t c = coeffs_[i] * o.coeffs_[j];
                for (std::size_t t = 0; t < p.size(); ++t) r.coeffs_[t] += c * p[t];
            }
        }
        return r;
    }

    Cyclotomic operator*(std::int64_t s) const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }

    /// Complex conjugate: z -> z^-1.
    Cyclotomic conj() const {
        Cyclotomic r(field_, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!coeffs_[i]) continue;
            const auto& p = field_->power(-static_cast<int>(i));
            for (std::size_t t = 0; t < p.size(); ++t) r.coeffs_[t] += coeffs_[i] * p[t];
        }
        return r;
    }

    bool operator==(const Cyclotomic& o) const { return field_->conductor() == o.field_->conductor() && coeffs_ == o.coeffs_; }

    /// "3", "-1", "z12^3 - 2*z12", ...
    std::string to_string() const {
        if (is_integer()) return std::to_string(coeffs_[0]);
        std::string out;
        const std::string z = "z" + std::to_string(field_->conductor());
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            std::int64_t c = coeffs_[i];
            if (!c) continue;
            if (out.empty()) out += c < 0 ? "-" : "";
            else out += c < 0 ? " - " : " + ";
            std::int64_t a = c < 0 ? -c : c;
            if (i == 0) {
                out += std::to_string(a);
                continue;
            }
            if (a != 1) out += std::to_string(a) + "*";
            out += z;
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void check(const Cyclotomic& o) const {
        if (field_->conductor() != o.field_->conductor()) throw Error("cyclotomic values from different fields");
    }

    std::shared_ptr<const CyclotomicField> field_;
    IntPoly coeffs_;
};

} // namespace weylsheaf
