#pragma once

// Labels for the irreducible characters of a Weyl group, by classification.
//
//   A_n       partitions of n+1
//   B_n, C_n  ordered pairs of partitions (alpha, beta), |alpha|+|beta| = n
//   D_n       unordered pairs {alpha, beta}; alpha = beta splits into + and -
//   G2        dihedral labels of I2(6)
//   F4, E6-8  opaque indices chi_1..chi_k
//
// The exceptional counts are classification constants. F4, E6 and E7 are
// re-derived by conjugacy-class enumeration in the test suite; E8 (112) is
// only re-derived by the opt-in heavy job.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weylsheaf/cartan_type.hpp"
#include "weylsheaf/partitions.hpp"

namespace weylsheaf {

struct UnitLabel {
    bool operator==(const UnitLabel&) const = default;
};

struct PartitionLabel {
    Partition parts;
    bool operator==(const PartitionLabel&) const = default;
};

struct BipartitionLabel {
    Partition alpha;
    Partition beta;
    bool operator==(const BipartitionLabel&) const = default;
};

struct DLabel {
    Partition alpha;
    Partition beta;
    int split = 0;  // +1 / -1 when alpha == beta, else 0
    bool operator==(const DLabel&) const = default;
};

struct DihedralLabel {
    enum class Kind { unit, sign, sign_prime, sign_double_prime, reflection };
    Kind kind = Kind::unit;
    int index = 0;  // j for the 2-dimensional reflection-type characters
    bool operator==(const DihedralLabel&) const = default;
};

struct ExceptionalLabel {
    Factor factor;
    int index = 1;
    bool operator==(const ExceptionalLabel&) const = default;
};

struct IrrLabel;

struct ProductLabel {
    std::vector<IrrLabel> parts;
    bool operator==(const ProductLabel&) const;
};

struct IrrLabel {
    std::variant<UnitLabel, PartitionLabel, BipartitionLabel, DLabel, DihedralLabel, ExceptionalLabel, ProductLabel> value;
    bool operator==(const IrrLabel&) const = default;
};

inline bool ProductLabel::operator==(const ProductLabel& o) const { return parts == o.parts; }

inline std::string to_string(const IrrLabel& label) {
    struct Visitor {
        std::string operator()(const UnitLabel&) const { return "1"; }
        std::string operator()(const PartitionLabel& p) const { return "[" + partition_string(p.parts) + "]"; }
        std::string operator()(const BipartitionLabel& b) const {
            return "[" + partition_string(b.alpha) + "|" + partition_string(b.beta) + "]";
        }
        std::string operator()(const DLabel& d) const {
            std::string s = "{[" + partition_string(d.alpha) + "],[" + partition_string(d.beta) + "]}";
            if (d.split > 0) s += '+';
            if (d.split < 0) s += '-';
            return s;
        }
        std::string operator()(const DihedralLabel& d) const {
            switch (d.kind) {
            case DihedralLabel::Kind::unit: return "unit";
            case DihedralLabel::Kind::sign: return "sign";
            case DihedralLabel::Kind::sign_prime: return "sign'";
            case DihedralLabel::Kind::sign_double_prime: return "sign''";
            case DihedralLabel::Kind::reflection: return "refl(" + std::to_string(d.index) + ")";
            }
            return "";
        }
        std::string operator()(const ExceptionalLabel& e) const { return "chi_" + std::to_string(e.index); }
        std::string operator()(const ProductLabel& p) const {
            std::string s = "(";
            for (std::size_t i = 0; i < p.parts.size(); ++i) {
                if (i) s += ';';
                s += to_string(p.parts[i]);
            }
            return s + ")";
        }
    };
    return std::visit(Visitor{}, label.value);
}

inline std::uint64_t dihedral_count(int m) { return m % 2 == 0 ? static_cast<std::uint64_t>(m + 6) / 2 : static_cast<std::uint64_t>(m + 3) / 2; }

/// Characters of the dihedral group of order 2m.
inline std::vector<DihedralLabel> dihedral_labels(int m) {
    using K = DihedralLabel::Kind;
    std::vector<DihedralLabel> out{{K::unit, 0}, {K::sign, 0}};
    if (m % 2 == 0) {
        out.push_back({K::sign_prime, 0});
        out.push_back({K::sign_double_prime, 0});
    }
    const int two_dim = m % 2 == 0 ? (m - 2) / 2 : (m - 1) / 2;
    for (int j = 1; j <= two_dim; ++j) out.push_back({K::reflection, j});
    return out;
}

inline std::uint64_t exceptional_irr_count(Factor f) {
    switch (f.family) {
    case Family::E: return f.rank == 6 ? 25 : f.rank == 7 ? 60 : 112;
    case Family::F: return 25;
    case Family::G: return 6;
    default: return 0;
    }
}

inline std::uint64_t irr_count(Factor f) {
    const int n = f.rank;
    switch (f.family) {
    case Family::A: return partition_count(n + 1);
    case Family::B:
    case Family::C: return bipartition_count(n);
    case Family::D: {
        std::uint64_t b = bipartition_count(n);
        if (n % 2 == 1) return b / 2;
        return (b + 3 * partition_count(n / 2)) / 2;
    }
    default: return exceptional_irr_count(f);
    }
}

/// Number of irreducible characters; product over components, 1 for the trivial group.
inline std::uint64_t irr_count(const CartanType& t) {
    std::uint64_t total = 1;
    for (const Factor& f : t.factors()) total = detail::checked_mul(total, irr_count(f));
    return total;
}

namespace detail {

// Pairs (alpha, beta) of total size n, |alpha| from n down to 0, each side in
// descending lexicographic order.
class BipartitionCursor {
public:
    explicit BipartitionCursor(int n) : n_(n), k_(n), alpha_(n), beta_(0) {}

    const Partition& alpha() const { return *alpha_; }
    const Partition& beta() const { return *beta_; }
    int alpha_size() const { return k_; }

    bool next() {
        if (beta_.next()) return true;
        if (alpha_.next()) {
            beta_ = PartitionIterator(n_ - k_);
            return true;
        }
        if (k_ == 0) return false;
        --k_;
        alpha_ = PartitionIterator(k_);
        beta_ = PartitionIterator(n_ - k_);
        return true;
    }

private:
    int n_;
    int k_;
    PartitionIterator alpha_;
    PartitionIterator beta_;
};

class ComponentLabelStream {
public:
    explicit ComponentLabelStream(Factor f) : factor_(f) {
        switch (f.family) {
        case Family::A: state_ = PartitionIterator(f.rank + 1); break;
        case Family::B:
        case Family::C:
        case Family::D: state_ = BipartitionCursor(f.rank); break;
        default: state_ = 0; break;
        }
    }

    std::optional<IrrLabel> next() {
        if (finished_) return std::nullopt;
        switch (factor_.family) {
        case Family::A: {
            auto& it = std::get<PartitionIterator>(state_);
            if (started_ && !it.next()) return finish();
            started_ = true;
            return IrrLabel{PartitionLabel{*it}};
        }
        case Family::B:
        case Family::C: {
            auto& cur = std::get<BipartitionCursor>(state_);
            if (started_ && !cur.next()) return finish();
            started_ = true;
            return IrrLabel{BipartitionLabel{cur.alpha(), cur.beta()}};
        }
        case Family::D: return next_d();
        case Family::G: {
            auto& i = std::get<int>(state_);
            static const auto labels = dihedral_labels(6);
            if (i >= static_cast<int>(labels.size())) return finish();
            return IrrLabel{labels[static_cast<std::size_t>(i++)]};
        }
        default: {
            auto& i = std::get<int>(state_);
            if (i >= static_cast<int>(exceptional_irr_count(factor_))) return finish();
            return IrrLabel{ExceptionalLabel{factor_, ++i}};
        }
        }
    }

private:
    std::optional<IrrLabel> finish() {
        finished_ = true;
        return std::nullopt;
    }

    std::optional<IrrLabel> next_d() {
        auto& cur = std::get<BipartitionCursor>(state_);
        if (pending_minus_) {
            pending_minus_ = false;
            return IrrLabel{DLabel{cur.alpha(), cur.beta(), -1}};
        }
        for (;;) {
            if (started_ && !cur.next()) return finish();
            started_ = true;
            const int a = cur.alpha_size();
            const int b = factor_.rank - a;
            if (a < b) return finish();
            if (a > b || cur.alpha() > cur.beta())
                return IrrLabel{DLabel{cur.alpha(), cur.beta(), 0}};
            if (cur.alpha() == cur.beta()) {
                pending_minus_ = true;
                return IrrLabel{DLabel{cur.alpha(), cur.beta(), +1}};
            }
        }
    }

    Factor factor_;
    std::variant<int, PartitionIterator, BipartitionCursor> state_;
    bool started_ = false;
    bool finished_ = false;
    bool pending_minus_ = false;
};

} // namespace detail

/// Lazy, restartable-by-reconstruction stream of the labels of Irr W(t).
/// Reducible types yield ProductLabels, first component varying slowest.
class IrrLabelStream {
public:
    explicit IrrLabelStream(CartanType t) : type_(std::move(t)) {}

    std::optional<IrrLabel> next() {
        const auto& fs = type_.factors();
        if (fs.empty()) {
            if (done_) return std::nullopt;
            done_ = true;
            return IrrLabel{UnitLabel{}};
        }
        if (done_) return std::nullopt;
        if (streams_.empty()) {
            for (const Factor& f : fs) {
                streams_.emplace_back(f);
                auto l = streams_.back().next();
                current_.push_back(*l);
            }
            return emit();
        }
        // odometer: advance the last component, carry leftwards
        for (std::size_t i = fs.size(); i-- > 0;) {
            if (auto l = streams_[i].next()) {
                current_[i] = *l;
                for (std::size_t j = i + 1; j < fs.size(); ++j) {
                    streams_[j] = detail::ComponentLabelStream(fs[j]);
                    current_[j] = *streams_[j].next();
                }
                return emit();
            }
        }
        done_ = true;
        return std::nullopt;
    }

private:
    IrrLabel emit() const {
        if (current_.size() == 1) return current_.front();
        return IrrLabel{ProductLabel{current_}};
    }

    CartanType type_;
    std::vector<detail::ComponentLabelStream> streams_;
    std::vector<IrrLabel> current_;
    bool done_ = false;
};

inline std::vector<IrrLabel> irr_labels(const CartanType& t) {
    std::vector<IrrLabel> out;
    IrrLabelStream s(t);
    while (auto l = s.next()) out.push_back(std::move(*l));
    return out;
}

} // namespace weylsheaf
