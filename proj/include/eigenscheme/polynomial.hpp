#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eigenscheme/monomial.hpp"
#include "eigenscheme/rational.hpp"

namespace eigenscheme {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Variable names plus the active monomial order of Q[x1..xn].
class Ring {
public:
    Ring(std::vector<std::string> names, MonomialOrder order);

    /// Q[x1..xn] (or `prefix`1..`prefix`n) under `order`.
    static RingPtr make(std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex(), std::string_view prefix = "x");
    static RingPtr make(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex());

    std::size_t nvars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const MonomialOrder& order() const noexcept { return order_; }

    /// -1 when the name is not a variable of this ring.
    int variable_index(std::string_view name) const;

    RingPtr with_order(MonomialOrder order) const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    std::vector<std::string> names_;
    MonomialOrder order_;
};

struct Term {
    Rational coeff;
    Monomial monomial;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept
/// strictly descending under the ring's order with no zero coefficients, so
/// two polynomials are equal iff their term lists are.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring);
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
    /// Trusts that `terms` is already strictly descending with no zero coefficients.
    static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;
    int total_degree() const;
    bool is_homogeneous() const;

    /// Same polynomial re-sorted under another ring with identical variables.
    Polynomial in_ring(RingPtr ring) const;

    Polynomial monic() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Rational& c, const Monomial& m) const;

    /// this - c * m * g, computed with one merge pass.
    Polynomial minus_scaled_shift(const Rational& c, const Monomial& m, const Polynomial& g) const;

    Rational evaluate(std::span<const Rational> point) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

private:
    void normalize();
    void check_ring(const Polynomial& other) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Same variable names and order.
bool compatible(const Ring& a, const Ring& b);

/// Ring homomorphism x_i -> images[i]; every image must live in one common ring.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// Moves p into `target`, sending source variable k to target variable
/// `target_index[k]`.
Polynomial map_variables(const Polynomial& p, const RingPtr& target, std::span<const std::size_t> target_index);

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace eigenscheme
