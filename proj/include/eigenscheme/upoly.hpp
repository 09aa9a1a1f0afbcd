#pragma once

#include <string>
#include <vector>

#include "eigenscheme/rational.hpp"

namespace eigenscheme {

/// Dense univariate polynomial over Q in the variable s, coefficients in
/// ascending degree with no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    UPoly(int c) : UPoly(Rational(c)) {}
    UPoly(const Rational& c);
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly s() { return UPoly(std::vector<Rational>{0, 1}); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    Rational coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : Rational(0); }
    const Rational& leading() const;

    UPoly derivative() const;
    Rational evaluate(const Rational& at) const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly operator-() const;
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend UPoly operator/(const UPoly& a, const Rational& b);
    friend bool operator==(const UPoly&, const UPoly&) = default;

    std::string to_string(char variable = 's') const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient a / b; throws InvalidArgument when b does not divide a.
UPoly exact_divide(const UPoly& a, const UPoly& b);
inline Rational exact_divide(const Rational& a, const Rational& b) { return a / b; }

inline bool is_zero(const UPoly& p) { return p.is_zero(); }

}  // namespace eigenscheme

namespace Eigen {

template <>
struct NumTraits<eigenscheme::UPoly> : GenericNumTraits<eigenscheme::UPoly> {
    using Real = eigenscheme::UPoly;
    using NonInteger = eigenscheme::UPoly;
    using Nested = eigenscheme::UPoly;
    using Literal = eigenscheme::UPoly;

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 300,
        MulCost = 1000
    };

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace eigenscheme {

using UMatrix = Eigen::Matrix<UPoly, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace eigenscheme
