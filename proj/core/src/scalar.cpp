#include "virg/scalar.hpp"

#include "virg/error.hpp"

namespace virg {

Scalar::Scalar(const Poly& num, const Poly& den) {
    *this = normalized(num, den);
}

Scalar Scalar::normalized(Poly num, Poly den) {
    if (den.is_zero()) {
        throw ArithmeticError("division by zero");
    }
    if (num.is_zero()) {
        return Scalar();
    }
    if (den.is_constant()) {
        const Rational c = den.leading_coeff();
        if (c != 1) {
            num = num.scaled(1 / c);
        }
        return Scalar(std::move(num), Poly(Rational(1)), Canonical{});
    }
    Poly g = gcd(num, den);
    if (!g.is_constant()) {
        num = num.exact_div(g);
        den = den.exact_div(g);
    }
    const Rational lead = den.leading_coeff();
    if (lead != 1) {
        const Rational inv = 1 / lead;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return Scalar(std::move(num), std::move(den), Canonical{});
}

Rational Scalar::rational_value() const {
    if (!is_rational()) {
        throw DomainError("scalar is not a rational constant");
    }
    return num_.constant_term() / den_.constant_term();
}

Scalar Scalar::operator-() const {
    return Scalar(-num_, den_, Canonical{});
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    if (is_zero()) {
        return rhs;
    }
    if (rhs.is_zero()) {
        return *this;
    }
    if (den_.is_constant() && rhs.den_.is_constant()) {
        return Scalar(num_ + rhs.num_, den_, Canonical{});
    }
    if (den_ == rhs.den_) {
        return normalized(num_ + rhs.num_, den_);
    }
    return normalized(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    return *this + (-rhs);
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    if (is_zero() || rhs.is_zero()) {
        return Scalar();
    }
    if (den_.is_constant() && rhs.den_.is_constant()) {
        return Scalar(num_ * rhs.num_, den_, Canonical{});
    }
    // Cross-cancel before multiplying to keep the operands small.
    Poly g1 = gcd(num_, rhs.den_);
    Poly g2 = gcd(rhs.num_, den_);
    Poly n1 = g1.is_constant() ? num_ : num_.exact_div(g1);
    Poly d2 = g1.is_constant() ? rhs.den_ : rhs.den_.exact_div(g1);
    Poly n2 = g2.is_constant() ? rhs.num_ : rhs.num_.exact_div(g2);
    Poly d1 = g2.is_constant() ? den_ : den_.exact_div(g2);
    Poly den = d1 * d2;
    Poly num = n1 * n2;
    const Rational lead = den.leading_coeff();
    if (lead != 1) {
        num = num.scaled(1 / lead);
        den = den.scaled(1 / lead);
    }
    return Scalar(std::move(num), std::move(den), Canonical{});
}

Scalar Scalar::inv() const {
    if (is_zero()) {
        throw ArithmeticError("inverse of zero");
    }
    const Rational lead = num_.leading_coeff();
    return Scalar(den_.scaled(1 / lead), num_.scaled(1 / lead), Canonical{});
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    return *this * rhs.inv();
}

Scalar Scalar::specialize(std::size_t var, const Rational& value) const {
    Poly den = den_.substitute(var, value);
    if (den.is_zero()) {
        throw SpecializationError("specialization makes the denominator vanish");
    }
    return normalized(num_.substitute(var, value), std::move(den));
}

Scalar Scalar::specialize(const std::map<std::size_t, Rational>& bindings) const {
    Poly num = num_;
    Poly den = den_;
    for (const auto& [var, value] : bindings) {
        num = num.substitute(var, value);
        den = den.substitute(var, value);
    }
    if (den.is_zero()) {
        throw SpecializationError("specialization makes the denominator vanish");
    }
    return normalized(std::move(num), std::move(den));
}

Rational Scalar::evaluate(std::span<const Rational> point) const {
    const Rational d = den_.evaluate(point);
    if (sgn(d) == 0) {
        throw SpecializationError("evaluation point is a pole");
    }
    return num_.evaluate(point) / d;
}

std::string Scalar::to_string(const Ring& ring) const {
    if (den_.is_constant()) {
        return num_.to_string(ring);
    }
    return "(" + num_.to_string(ring) + ")/(" + den_.to_string(ring) + ")";
}

} // namespace virg
