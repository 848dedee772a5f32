#pragma once

#include "virg/poly.hpp"
#include "virg/rational.hpp"

#include <map>
#include <string>

namespace virg {

// Element of the rational function field Q(x_0, ..., x_{k-1}).
//
// Canonical form: gcd(num, den) = 1 and den has leading coefficient 1 under
// grlex. Two equal fractions therefore have identical representations, so
// equality and is_zero() are structural.
class Scalar {
public:
    Scalar() : den_(Rational(1)) {}
    Scalar(const Rational& value) : num_(value), den_(Rational(1)) {}  // NOLINT
    Scalar(long value) : Scalar(Rational(value)) {}                     // NOLINT
    Scalar(const Poly& value) : num_(value), den_(Rational(1)) {}       // NOLINT
    // Throws ArithmeticError when den is zero.
    Scalar(const Poly& num, const Poly& den);

    static Scalar variable(std::size_t index) { return Scalar(Poly::variable(index)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_ == Poly(Rational(1)); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    // Requires is_rational().
    Rational rational_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
    Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

    // Throws ArithmeticError on zero.
    Scalar inv() const;

    // Substitutes var -> value. Throws SpecializationError if the denominator vanishes.
    Scalar specialize(std::size_t var, const Rational& value) const;
    Scalar specialize(const std::map<std::size_t, Rational>& bindings) const;
    // Full evaluation; throws SpecializationError at a pole.
    Rational evaluate(std::span<const Rational> point) const;

    // "num" or "(num)/(den)" with polynomial rendering from Poly::to_string.
    std::string to_string(const Ring& ring) const;

    friend bool operator==(const Scalar&, const Scalar&) = default;

private:
    struct Canonical {};
    Scalar(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    static Scalar normalized(Poly num, Poly den);

    Poly num_;
    Poly den_;
};

inline Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
inline Scalar neg(const Scalar& a) { return -a; }
inline Scalar inv(const Scalar& a) { return a.inv(); }
inline bool is_zero(const Scalar& a) { return a.is_zero(); }

} // namespace virg
