#include "eigenscheme/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace eigenscheme {

Ring::Ring(std::vector<std::string> names, MonomialOrder order) : names_(std::move(names)), order_(std::move(order)) {
    if (names_.size() > kMaxVariables) throw DimensionError("too many variables (max 32)");
    if (!order_.ranking().empty() && order_.ranking().size() != names_.size())
        throw DimensionError("order ranking length differs from the variable count");
}

RingPtr Ring::make(std::size_t nvars, MonomialOrder order, std::string_view prefix) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) names.push_back(std::string(prefix) + std::to_string(i + 1));
    return std::make_shared<const Ring>(std::move(names), std::move(order));
}

RingPtr Ring::make(std::vector<std::string> names, MonomialOrder order) {
    return std::make_shared<const Ring>(std::move(names), std::move(order));
}

int Ring::variable_index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr Ring::with_order(MonomialOrder order) const { return std::make_shared<const Ring>(names_, std::move(order)); }

bool compatible(const Ring& a, const Ring& b) { return &a == &b || a == b; }

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw InvalidArgument("polynomial without a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    if (!ring_) throw InvalidArgument("polynomial without a ring");
    for (const auto& t : terms_)
        if (t.monomial.size() != ring_->nvars()) throw DimensionError("term length differs from the ring");
    normalize();
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    const std::size_t n = ring->nvars();
    return Polynomial(std::move(ring), {Term{c, Monomial(n)}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    const std::size_t n = ring->nvars();
    if (index >= n) throw DimensionError("variable index out of range");
    return Polynomial(std::move(ring), {Term{1, Monomial::variable(n, index)}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
    return Polynomial(std::move(ring), {Term{c, m}});
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

void Polynomial::normalize() {
    const auto& order = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return order(a.monomial, b.monomial) > 0; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().monomial == t.monomial)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return eigenscheme::is_zero(t.coeff); });
    terms_ = std::move(merged);
}

void Polynomial::check_ring(const Polynomial& other) const {
    if (!compatible(*ring_, *other.ring_)) throw DimensionError("polynomials belong to different rings");
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading monomial");
    return terms_.front().monomial;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
    return terms_.front().coeff;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
}

Polynomial Polynomial::in_ring(RingPtr ring) const {
    if (ring->names() != ring_->names()) throw DimensionError("re-sorting into a ring with different variables");
    return Polynomial(std::move(ring), terms_);
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / leading_coefficient());
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(ring_);
    if (eigenscheme::is_zero(c)) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::times_monomial(const Rational& c, const Monomial& m) const {
    Polynomial r(ring_);
    if (eigenscheme::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the order, so no re-sort is needed.
    for (const auto& t : terms_) r.terms_.push_back(Term{t.coeff * c, t.monomial * m});
    return r;
}

Polynomial Polynomial::minus_scaled_shift(const Rational& c, const Monomial& m, const Polynomial& g) const {
    check_ring(g);
    const auto& order = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    Monomial shifted;
    bool have = false;
    while (i < terms_.size() || j < g.terms_.size()) {
        if (j < g.terms_.size() && !have) {
            shifted = g.terms_[j].monomial * m;
            have = true;
        }
        if (j >= g.terms_.size()) {
            r.terms_.push_back(terms_[i++]);
            continue;
        }
        if (i >= terms_.size()) {
            r.terms_.push_back(Term{-c * g.terms_[j].coeff, shifted});
            ++j;
            have = false;
            continue;
        }
        auto cmp = order(terms_[i].monomial, shifted);
        if (cmp > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            r.terms_.push_back(Term{-c * g.terms_[j].coeff, shifted});
            ++j;
            have = false;
        } else {
            Rational v = terms_[i].coeff - c * g.terms_[j].coeff;
            if (!eigenscheme::is_zero(v)) r.terms_.push_back(Term{std::move(v), shifted});
            ++i;
            ++j;
            have = false;
        }
    }
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != ring_->nvars()) throw DimensionError("evaluation point has the wrong length");
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t k = 0; k < point.size(); ++k)
            for (int e = 0; e < t.monomial[k]; ++e) v *= point[k];
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    return a.minus_scaled_shift(-1, Monomial(a.ring_->nvars()), b);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    return a.minus_scaled_shift(1, Monomial(a.ring_->nvars()), b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) prod.push_back(Term{s.coeff * t.coeff, s.monomial * t.monomial});
    return Polynomial(a.ring_, std::move(prod));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!compatible(*a.ring_, *b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (sgn(c) < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        std::string mono;
        for (std::size_t k = 0; k < t.monomial.size(); ++k) {
            const int e = t.monomial[k];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->names()[k];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            out += eigenscheme::to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += eigenscheme::to_string(c) + "*" + mono;
    }
    return out;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
    if (images.size() != p.ring()->nvars()) throw DimensionError("substitution needs one image per variable");
    if (images.empty()) return p;
    const RingPtr& target = images.front().ring();
    for (const auto& im : images)
        if (!compatible(*im.ring(), *target)) throw DimensionError("substitution images live in different rings");

    // powers[k][e] = images[k]^e, filled lazily.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t k, int e) -> const Polynomial& {
        auto& cache = powers[k];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[k]);
        return cache[static_cast<std::size_t>(e)];
    };

    Polynomial result(target);
    for (const auto& t : p.terms()) {
        Polynomial term = Polynomial::constant(target, t.coeff);
        for (std::size_t k = 0; k < images.size(); ++k)
            if (t.monomial[k] > 0) term = term * power(k, t.monomial[k]);
        result = result + term;
    }
    return result;
}

Polynomial map_variables(const Polynomial& p, const RingPtr& target, std::span<const std::size_t> target_index) {
    const std::size_t n = p.ring()->nvars();
    if (target_index.size() != n) throw DimensionError("variable map has the wrong length");
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m(target->nvars());
        for (std::size_t k = 0; k < n; ++k)
            if (t.monomial[k] != 0) m.set(target_index[k], m[target_index[k]] + t.monomial[k]);
        terms.push_back(Term{t.coeff, m});
    }
    return Polynomial(target, std::move(terms));
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty polynomial");
        bool first = true;
        while (true) {
            skip();
            if (pos_ >= s_.size()) break;
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw ParseError("expected '+' or '-' at position " + std::to_string(pos_));
            }
            first = false;
            Term t = parse_term();
            t.coeff *= sign;
            terms.push_back(std::move(t));
        }
        return Polynomial(ring_, std::move(terms));
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    Term parse_term() {
        Term t{1, Monomial(ring_->nvars())};
        bool need_factor = true;
        while (true) {
            skip();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.coeff *= parse_number();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                    ++pos_;
                std::string name(s_.substr(start, pos_ - start));
                int idx = ring_->variable_index(name);
                if (idx < 0) throw ParseError("unknown variable '" + name + "'");
                int e = 1;
                skip();
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    skip();
                    e = parse_int();
                }
                t.monomial.set(static_cast<std::size_t>(idx), t.monomial[static_cast<std::size_t>(idx)] + e);
            } else {
                if (need_factor) throw ParseError("expected a coefficient or variable at position " + std::to_string(pos_));
                break;
            }
            need_factor = false;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                need_factor = true;
                continue;
            }
            // Juxtaposition like `3x1` or `x1 x2` is accepted as multiplication.
            if (pos_ < s_.size() && s_[pos_] != '+' && s_[pos_] != '-') continue;
            break;
        }
        if (need_factor) throw ParseError("dangling '*'");
        return t;
    }

    int parse_int() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an exponent");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    Rational parse_number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::size_t save = pos_;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip();
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (dstart == pos_) throw ParseError("expected a denominator");
            return parse_rational(std::string(s_.substr(start, save - start)) + "/" +
                                  std::string(s_.substr(dstart, pos_ - dstart)));
        }
        pos_ = save;
        return parse_rational(s_.substr(start, save - start));
    }

    std::string_view s_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return PolyParser(text, ring).parse(); }

}  // namespace eigenscheme
