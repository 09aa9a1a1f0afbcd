#include "eigenscheme/upoly.hpp"

#include "eigenscheme/errors.hpp"

namespace eigenscheme {

UPoly::UPoly(const Rational& c) {
    if (!eigenscheme::is_zero(c)) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && eigenscheme::is_zero(c_.back())) c_.pop_back();
}

const Rational& UPoly::leading() const {
    if (c_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
    return c_.back();
}

UPoly UPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
    return UPoly(std::move(d));
}

Rational UPoly::evaluate(const Rational& at) const {
    Rational v = 0;
    for (std::size_t k = c_.size(); k-- > 0;) v = v * at + c_[k];
    return v;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator/(const UPoly& a, const Rational& b) {
    if (is_zero(b)) throw InvalidArgument("division by zero");
    UPoly r = a;
    for (auto& c : r.c_) c /= b;
    return r;
}

std::string UPoly::to_string(char variable) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (eigenscheme::is_zero(c_[k])) continue;
        Rational c = c_[k];
        if (!out.empty()) {
            out += sgn(c) < 0 ? " - " : " + ";
            c = abs(c);
        }
        std::string coef = eigenscheme::to_string(c);
        if (k == 0)
            out += coef;
        else {
            if (c == -1)
                out += "-";
            else if (c != 1)
                out += coef + "*";
            out += k == 1 ? std::string(1, variable) : std::string(1, variable) + "^" + std::to_string(k);
        }
    }
    return out;
}

UPoly exact_divide(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) {
        if (a.is_zero()) return UPoly();
        throw InvalidArgument("inexact polynomial division");
    }
    std::vector<Rational> q(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
        if (is_zero(rem[k])) continue;
        Rational c = rem[k] / b.leading();
        q[k - db] = c;
        for (int i = 0; i <= db; ++i) rem[k - db + i] -= c * b.coeffs()[i];
    }
    for (const auto& r : rem)
        if (!is_zero(r)) throw InvalidArgument("inexact polynomial division");
    return UPoly(std::move(q));
}

}  // namespace eigenscheme
