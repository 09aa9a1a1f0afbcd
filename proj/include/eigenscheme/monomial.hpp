#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "eigenscheme/errors.hpp"

namespace eigenscheme {

inline constexpr std::size_t kMaxVariables = 32;

/// Dense exponent vector of a fixed variable count (at most kMaxVariables).
/// Caches the total degree and a support bitmask for fast divisibility tests.
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;

    explicit Monomial(std::size_t nvars) : size_(check_size(nvars)) {}

    Monomial(std::initializer_list<int> exponents) : size_(check_size(exponents.size())) {
        std::size_t i = 0;
        for (int e : exponents) set(i++, e);
    }

    static Monomial variable(std::size_t nvars, std::size_t index, int power = 1) {
        Monomial m(nvars);
        m.set(index, power);
        return m;
    }

    std::size_t size() const noexcept { return size_; }
    int degree() const noexcept { return static_cast<int>(degree_); }
    std::uint32_t support() const noexcept { return support_; }
    int operator[](std::size_t i) const noexcept { return exps_[i]; }
    bool is_one() const noexcept { return degree_ == 0; }

    void set(std::size_t i, int e) {
        if (i >= size_) throw DimensionError("monomial variable index out of range");
        if (e < 0 || e > 0xFFFF) throw InvalidArgument("monomial exponent out of range");
        degree_ = degree_ - exps_[i] + static_cast<std::uint32_t>(e);
        exps_[i] = static_cast<Exponent>(e);
        if (e != 0)
            support_ |= (1u << i);
        else
            support_ &= ~(1u << i);
    }

    /// True iff this monomial divides `other`.
    bool divides(const Monomial& other) const noexcept {
        if (degree_ > other.degree_ || (support_ & ~other.support_) != 0) return false;
        for (std::size_t i = 0; i < size_; ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    bool coprime(const Monomial& other) const noexcept { return (support_ & other.support_) == 0; }

    Monomial operator*(const Monomial& other) const {
        check_same(other);
        if (degree_ + other.degree_ > 0xFFFF) throw InvalidArgument("monomial degree overflow");
        Monomial r(*this);
        for (std::size_t i = 0; i < size_; ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] + other.exps_[i]);
        r.degree_ = degree_ + other.degree_;
        r.support_ = support_ | other.support_;
        return r;
    }

    /// Exact quotient; `other` must divide this monomial.
    Monomial operator/(const Monomial& other) const {
        check_same(other);
        if (!other.divides(*this)) throw InvalidArgument("monomial quotient is not exact");
        Monomial r(size_);
        for (std::size_t i = 0; i < size_; ++i) r.set(i, exps_[i] - other.exps_[i]);
        return r;
    }

    Monomial lcm(const Monomial& other) const {
        check_same(other);
        Monomial r(size_);
        for (std::size_t i = 0; i < size_; ++i) r.set(i, std::max(exps_[i], other.exps_[i]));
        return r;
    }

    /// Returns a copy with `count` zero exponents inserted at position `at`.
    Monomial insert_variables(std::size_t at, std::size_t count) const {
        Monomial r(size_ + count);
        for (std::size_t i = 0; i < size_; ++i) r.set(i < at ? i : i + count, exps_[i]);
        return r;
    }

    /// Drops the variables in [at, at + count); they must have exponent zero.
    Monomial erase_variables(std::size_t at, std::size_t count) const {
        Monomial r(size_ - count);
        for (std::size_t i = 0; i < size_; ++i) {
            if (i >= at && i < at + count) {
                if (exps_[i] != 0) throw InvalidArgument("erasing a variable that occurs");
                continue;
            }
            r.set(i < at ? i : i - count, exps_[i]);
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.size_ == b.size_ && a.degree_ == b.degree_ && a.support_ == b.support_ && a.exps_ == b.exps_;
    }

    std::size_t hash() const noexcept {
        std::size_t h = size_;
        for (std::size_t i = 0; i < size_; ++i) h = h * 1000003u ^ exps_[i];
        return h;
    }

private:
    static std::uint8_t check_size(std::size_t n) {
        if (n > kMaxVariables) throw DimensionError("too many variables (max 32)");
        return static_cast<std::uint8_t>(n);
    }

    void check_same(const Monomial& other) const {
        if (size_ != other.size_) throw DimensionError("monomial length mismatch");
    }

    std::array<Exponent, kMaxVariables> exps_{};
    std::uint32_t degree_ = 0;
    std::uint32_t support_ = 0;
    std::uint8_t size_ = 0;
};

/// A monomial order: grevlex, lex, or a two-block elimination order, all
/// relative to a variable ranking (ranking[0] is the largest variable).
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    MonomialOrder() = default;

    static MonomialOrder grevlex(std::vector<std::size_t> ranking = {}) {
        return MonomialOrder(Kind::Grevlex, std::move(ranking), 0, Kind::Grevlex, Kind::Grevlex);
    }

    static MonomialOrder lex(std::vector<std::size_t> ranking = {}) {
        return MonomialOrder(Kind::Lex, std::move(ranking), 0, Kind::Lex, Kind::Lex);
    }

    /// The first `split` ranked variables are compared with `first`; ties are
    /// broken on the remaining ones with `second`. Eliminates the first block.
    static MonomialOrder block(std::size_t split, Kind first = Kind::Grevlex, Kind second = Kind::Grevlex,
                               std::vector<std::size_t> ranking = {});

    Kind kind() const noexcept { return kind_; }
    std::size_t split() const noexcept { return split_; }
    const std::vector<std::size_t>& ranking() const noexcept { return ranking_; }

    std::strong_ordering operator()(const Monomial& a, const Monomial& b) const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(Kind kind, std::vector<std::size_t> ranking, std::size_t split, Kind first, Kind second);

    std::size_t var(std::size_t rank) const noexcept { return ranking_.empty() ? rank : ranking_[rank]; }
    std::strong_ordering compare_range(Kind kind, const Monomial& a, const Monomial& b, std::size_t lo,
                                       std::size_t hi) const;

    Kind kind_ = Kind::Grevlex;
    std::vector<std::size_t> ranking_;
    std::size_t split_ = 0;
    Kind first_ = Kind::Grevlex;
    Kind second_ = Kind::Grevlex;
};

inline std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
    return order(a, b);
}

}  // namespace eigenscheme

template <>
struct std::hash<eigenscheme::Monomial> {
    std::size_t operator()(const eigenscheme::Monomial& m) const noexcept { return m.hash(); }
};
