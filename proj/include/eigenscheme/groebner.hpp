#pragma once

#include <cstddef>
#include <vector>

#include "eigenscheme/polynomial.hpp"

namespace eigenscheme {

/// Generator list of an ideal; zero generators are dropped on construction.
class Ideal {
public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    static Ideal unit(RingPtr ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    bool is_zero() const noexcept { return generators_.empty(); }

    /// I + J
    friend Ideal operator+(const Ideal& a, const Ideal& b);
    /// I * J
    friend Ideal operator*(const Ideal& a, const Ideal& b);

private:
    RingPtr ring_;
    std::vector<Polynomial> generators_;
};

/// Groebner basis under `ring()->order()`. A reduced basis is monic,
/// inter-reduced and sorted by ascending leading monomial, hence unique.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> elements;
    bool reduced = false;

    const MonomialOrder& order() const { return ring->order(); }
    Ideal ideal() const { return Ideal(ring, elements); }
    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);
};

struct BuchbergerOptions {
    /// Abort with GuardExceeded once this many critical pairs were queued.
    std::size_t max_pairs = 5000;
};

struct BuchbergerStats {
    std::size_t pairs_queued = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
};

/// Full normal form of f with respect to `divisors` (the ring order of f).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Reduced Groebner basis of `ideal` under its ring's order.
GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& options = {}, BuchbergerStats* stats = nullptr);

/// Reduced Groebner basis under `order` (the ideal is re-sorted first).
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const BuchbergerOptions& options = {});

/// Minimalizes, inter-reduces, normalizes and sorts a Groebner basis.
GroebnerBasis reduced_form(RingPtr ring, std::vector<Polynomial> groebner_basis);

bool member(const Polynomial& f, const Ideal& ideal);
bool member(const Polynomial& f, const GroebnerBasis& basis);

/// I is contained in J.
bool contained(const Ideal& inner, const Ideal& outer);

/// Compares reduced grevlex bases.
bool ideal_equal(const Ideal& a, const Ideal& b);

/// I cap J via elimination of t from <t I, (1 - t) J>.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);

/// I : f^inf via elimination of y from <I, 1 - y f>.
Ideal colon_sat(const Ideal& ideal, const Polynomial& f);

/// I : m^inf for the irrelevant ideal m, as the intersection of I : x_i^inf.
Ideal saturate_irrelevant(const Ideal& ideal);

}  // namespace eigenscheme
