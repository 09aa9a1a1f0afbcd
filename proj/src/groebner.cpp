#include "eigenscheme/groebner.hpp"

#include <algorithm>
#include <limits>

namespace eigenscheme {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    generators_.reserve(generators.size());
    for (auto& g : generators) {
        if (!compatible(*g.ring(), *ring_)) throw DimensionError("ideal generator from a different ring");
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }
}

Ideal operator+(const Ideal& a, const Ideal& b) {
    if (!compatible(*a.ring_, *b.ring_)) throw DimensionError("sum of ideals in different rings");
    std::vector<Polynomial> gens = a.generators_;
    gens.insert(gens.end(), b.generators_.begin(), b.generators_.end());
    return Ideal(a.ring_, std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
    if (!compatible(*a.ring_, *b.ring_)) throw DimensionError("product of ideals in different rings");
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators_)
        for (const auto& g : b.generators_) gens.push_back(f * g);
    return Ideal(a.ring_, std::move(gens));
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return compatible(*a.ring, *b.ring) && a.elements == b.elements;
}

namespace {

// Merges p[head..] with -c * m * g; both inputs descending.
std::vector<Term> merge_sub(const std::vector<Term>& p, std::size_t head, const Rational& c, const Monomial& m,
                            const std::vector<Term>& g, const MonomialOrder& order) {
    std::vector<Term> out;
    out.reserve(p.size() - head + g.size());
    std::size_t i = head;
    std::size_t j = 0;
    while (i < p.size() && j < g.size()) {
        Monomial shifted = g[j].monomial * m;
        auto cmp = order(p[i].monomial, shifted);
        if (cmp > 0) {
            out.push_back(p[i++]);
        } else if (cmp < 0) {
            out.push_back(Term{-c * g[j].coeff, std::move(shifted)});
            ++j;
        } else {
            Rational v = p[i].coeff - c * g[j].coeff;
            if (!is_zero(v)) out.push_back(Term{std::move(v), std::move(shifted)});
            ++i;
            ++j;
        }
    }
    for (; i < p.size(); ++i) out.push_back(p[i]);
    for (; j < g.size(); ++j) out.push_back(Term{-c * g[j].coeff, g[j].monomial * m});
    return out;
}

// Normal form against divisors whose leading terms are listed in `leads`.
Polynomial normal_form(const Polynomial& f, const std::vector<const Polynomial*>& divisors) {
    const auto& order = f.ring()->order();
    std::vector<Term> p = f.terms();
    std::vector<Term> rem;
    std::size_t head = 0;
    while (head < p.size()) {
        const Term& lt = p[head];
        const Polynomial* hit = nullptr;
        for (const Polynomial* d : divisors) {
            if (d->leading_monomial().divides(lt.monomial)) {
                hit = d;
                break;
            }
        }
        if (hit == nullptr) {
            rem.push_back(lt);
            ++head;
            continue;
        }
        Rational c = lt.coeff / hit->leading_coefficient();
        Monomial m = lt.monomial / hit->leading_monomial();
        p = merge_sub(p, head, c, m, hit->terms(), order);
        head = 0;
    }
    return Polynomial::from_sorted(f.ring(), std::move(rem));
}

struct CriticalPair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    int sugar;
};

class Buchberger {
public:
    Buchberger(RingPtr ring, const BuchbergerOptions& options, BuchbergerStats* stats)
        : ring_(std::move(ring)), options_(options), stats_(stats) {}

    GroebnerBasis run(const std::vector<Polynomial>& generators) {
        std::vector<Polynomial> input;
        for (const auto& g : generators)
            if (!g.is_zero()) input.push_back(g.in_ring(ring_).monic());
        // Smallest leading monomials first keeps early reductions cheap.
        std::sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
            return ring_->order()(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        for (auto& f : input) {
            Polynomial h = reduce_active(f);
            if (h.is_zero()) continue;
            add(h.monic(), f.total_degree());
        }
        while (!pairs_.empty()) {
            std::size_t best = select();
            CriticalPair pair = std::move(pairs_[best]);
            pairs_[best] = std::move(pairs_.back());
            pairs_.pop_back();
            if (stats_) ++stats_->pairs_reduced;
            Polynomial s = spoly(pair);
            Polynomial h = reduce_active(s);
            if (h.is_zero()) {
                if (stats_) ++stats_->zero_reductions;
                continue;
            }
            add(h.monic(), pair.sugar);
        }
        std::vector<Polynomial> basis;
        for (std::size_t k = 0; k < store_.size(); ++k)
            if (active_[k]) basis.push_back(store_[k]);
        return reduced_form(ring_, std::move(basis));
    }

private:
    std::size_t select() const {
        const auto& order = ring_->order();
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const auto& a = pairs_[k];
            const auto& b = pairs_[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar) best = k;
                continue;
            }
            auto c = order(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
        }
        return best;
    }

    Polynomial spoly(const CriticalPair& pair) const {
        const Polynomial& f = store_[pair.i];
        const Polynomial& g = store_[pair.j];
        Polynomial lhs = f.times_monomial(1, pair.lcm / f.leading_monomial());
        return lhs.minus_scaled_shift(1, pair.lcm / g.leading_monomial(), g);
    }

    Polynomial reduce_active(const Polynomial& f) const {
        std::vector<const Polynomial*> divisors;
        divisors.reserve(store_.size());
        for (std::size_t k = 0; k < store_.size(); ++k)
            if (active_[k]) divisors.push_back(&store_[k]);
        return normal_form(f, divisors);
    }

    // Gebauer-Moeller update: Buchberger's coprime criterion and the chain
    // criterion applied both to the new pairs and to the queued ones.
    void add(Polynomial h, int sugar) {
        const std::size_t hi = store_.size();
        const Monomial lh = h.leading_monomial();
        store_.push_back(std::move(h));
        active_.push_back(false);
        sugar_.push_back(sugar);

        std::vector<std::size_t> cand;
        std::vector<Monomial> lcms;
        for (std::size_t k = 0; k < hi; ++k) {
            if (!active_[k]) continue;
            cand.push_back(k);
            lcms.push_back(lh.lcm(store_[k].leading_monomial()));
        }
        std::vector<std::size_t> kept;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            const Monomial& la = store_[cand[a]].leading_monomial();
            bool keep = true;
            if (!lh.coprime(la)) {
                for (std::size_t b = a + 1; b < cand.size() && keep; ++b)
                    if (lcms[b].divides(lcms[a])) keep = false;
                for (std::size_t b : kept) {
                    if (!keep) break;
                    if (lcms[b].divides(lcms[a])) keep = false;
                }
            }
            if (keep) kept.push_back(a);
        }

        std::erase_if(pairs_, [&](const CriticalPair& p) {
            if (!lh.divides(p.lcm)) return false;
            const Monomial li = lh.lcm(store_[p.i].leading_monomial());
            const Monomial lj = lh.lcm(store_[p.j].leading_monomial());
            return !(li == p.lcm) && !(lj == p.lcm);
        });

        for (std::size_t a : kept) {
            const std::size_t g = cand[a];
            const Monomial& lg = store_[g].leading_monomial();
            if (lh.coprime(lg)) continue;
            const int deg = lcms[a].degree();
            const int s = std::max(sugar + deg - lh.degree(), sugar_[g] + deg - lg.degree());
            pairs_.push_back(CriticalPair{g, hi, lcms[a], s});
            if (stats_) ++stats_->pairs_queued;
            if (++queued_ > options_.max_pairs)
                throw GuardExceeded("Buchberger pair budget of " + std::to_string(options_.max_pairs) + " exceeded");
        }

        for (std::size_t k = 0; k < hi; ++k)
            if (active_[k] && lh.divides(store_[k].leading_monomial())) active_[k] = false;
        active_[hi] = true;
    }

    RingPtr ring_;
    BuchbergerOptions options_;
    BuchbergerStats* stats_;
    std::vector<Polynomial> store_;
    std::vector<bool> active_;
    std::vector<int> sugar_;
    std::vector<CriticalPair> pairs_;
    std::size_t queued_ = 0;
};

bool is_unit(const Ideal& ideal) {
    for (const auto& g : ideal.generators())
        if (g.size() == 1 && g.leading_monomial().is_one()) return true;
    return false;
}

// Ring with `count` fresh variables in front and an order eliminating them.
RingPtr elimination_ring(const Ring& base, std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < count; ++k) names.push_back("_e" + std::to_string(k));
    names.insert(names.end(), base.names().begin(), base.names().end());
    return Ring::make(std::move(names), MonomialOrder::block(count));
}

Polynomial lift(const Polynomial& p, const RingPtr& target, std::size_t count) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) terms.push_back(Term{t.coeff, t.monomial.insert_variables(0, count)});
    return Polynomial(target, std::move(terms));
}

// Elements of the basis free of the first `count` variables, moved back to `base`.
Ideal eliminate(const GroebnerBasis& gb, const RingPtr& base, std::size_t count) {
    std::vector<Polynomial> kept;
    for (const auto& g : gb.elements) {
        bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
            for (std::size_t k = 0; k < count; ++k)
                if (t.monomial[k] != 0) return false;
            return true;
        });
        if (!free) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) terms.push_back(Term{t.coeff, t.monomial.erase_variables(0, count)});
        kept.emplace_back(base, std::move(terms));
    }
    return Ideal(base, std::move(kept));
}

RingPtr grevlex_of(const RingPtr& ring) {
    if (ring->order() == MonomialOrder::grevlex()) return ring;
    return ring->with_order(MonomialOrder::grevlex());
}

}  // namespace

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    std::vector<const Polynomial*> ptrs;
    for (const auto& d : divisors) {
        if (!compatible(*d.ring(), *f.ring())) throw DimensionError("reducing by polynomials of another ring");
        if (!d.is_zero()) ptrs.push_back(&d);
    }
    return normal_form(f, ptrs);
}

GroebnerBasis reduced_form(RingPtr ring, std::vector<Polynomial> basis) {
    const auto& order = ring->order();
    std::vector<Polynomial> monic;
    for (auto& g : basis)
        if (!g.is_zero()) monic.push_back(g.in_ring(ring).monic());
    std::sort(monic.begin(), monic.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial> minimal;
    for (auto& g : monic) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& m) {
            return m.leading_monomial().divides(g.leading_monomial());
        });
        if (!redundant) minimal.push_back(std::move(g));
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<const Polynomial*> others;
        for (std::size_t m = 0; m < minimal.size(); ++m)
            if (m != k) others.push_back(&minimal[m]);
        reduced.push_back(normal_form(minimal[k], others));
    }
    return GroebnerBasis{std::move(ring), std::move(reduced), true};
}

GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& options, BuchbergerStats* stats) {
    return Buchberger(ideal.ring(), options, stats).run(ideal.generators());
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const BuchbergerOptions& options) {
    RingPtr ring = ideal.ring()->order() == order ? ideal.ring() : ideal.ring()->with_order(order);
    return Buchberger(ring, options, nullptr).run(ideal.generators());
}

bool member(const Polynomial& f, const GroebnerBasis& basis) {
    if (f.ring()->names() != basis.ring->names()) throw DimensionError("membership test across rings");
    return reduce(f.in_ring(basis.ring), basis.elements).is_zero();
}

bool member(const Polynomial& f, const Ideal& ideal) {
    if (!compatible(*f.ring(), *ideal.ring())) throw DimensionError("membership test across rings");
    if (f.is_zero()) return true;
    return member(f, buchberger(ideal));
}

bool contained(const Ideal& inner, const Ideal& outer) {
    if (inner.ring()->names() != outer.ring()->names()) throw DimensionError("containment test across rings");
    if (inner.is_zero()) return true;
    GroebnerBasis gb = buchberger(outer);
    return std::all_of(inner.generators().begin(), inner.generators().end(),
                       [&](const Polynomial& f) { return member(f, gb); });
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (a.ring()->names() != b.ring()->names()) throw DimensionError("comparing ideals of different rings");
    RingPtr ring = grevlex_of(a.ring());
    GroebnerBasis ga = buchberger(Ideal(ring, [&] {
        std::vector<Polynomial> g;
        for (const auto& p : a.generators()) g.push_back(p.in_ring(ring));
        return g;
    }()));
    GroebnerBasis gb = buchberger(Ideal(ring, [&] {
        std::vector<Polynomial> g;
        for (const auto& p : b.generators()) g.push_back(p.in_ring(ring));
        return g;
    }()));
    return ga.elements == gb.elements;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    if (!compatible(*a.ring(), *b.ring())) throw DimensionError("intersecting ideals of different rings");
    if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
    if (is_unit(a)) return b;
    if (is_unit(b)) return a;
    RingPtr ext = elimination_ring(*a.ring(), 1);
    const std::size_t n = ext->nvars();
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(lift(f, ext, 1).times_monomial(1, Monomial::variable(n, 0)));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * lift(g, ext, 1));
    return eliminate(buchberger(Ideal(ext, std::move(gens))), a.ring(), 1);
}

Ideal intersect(const std::vector<Ideal>& ideals) {
    if (ideals.empty()) throw InvalidArgument("intersection of no ideals");
    Ideal acc = ideals.front();
    for (std::size_t k = 1; k < ideals.size(); ++k) acc = intersect(acc, ideals[k]);
    return acc;
}

Ideal colon_sat(const Ideal& ideal, const Polynomial& f) {
    if (f.is_zero()) throw InvalidArgument("saturation by the zero polynomial");
    if (!compatible(*f.ring(), *ideal.ring())) throw DimensionError("saturating by a polynomial of another ring");
    if (ideal.is_zero()) return ideal;
    RingPtr ext = elimination_ring(*ideal.ring(), 1);
    const std::size_t n = ext->nvars();
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(lift(g, ext, 1));
    gens.push_back(Polynomial::constant(ext, 1) - lift(f, ext, 1).times_monomial(1, Monomial::variable(n, 0)));
    return eliminate(buchberger(Ideal(ext, std::move(gens))), ideal.ring(), 1);
}

Ideal saturate_irrelevant(const Ideal& ideal) {
    const std::size_t n = ideal.ring()->nvars();
    if (n == 0 || ideal.is_zero()) return ideal;
    std::vector<Ideal> parts;
    for (std::size_t k = 0; k < n; ++k) parts.push_back(colon_sat(ideal, Polynomial::variable(ideal.ring(), k)));
    return intersect(parts);
}

}  // namespace eigenscheme
