#pragma once

#include "virg/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace virg {

inline constexpr std::size_t kMaxVariables = 16;

// Exponent vector over the fixed variable slots of a Ring.
struct Monomial {
    std::array<std::uint16_t, kMaxVariables> exp{};

    unsigned degree() const;
    bool is_one() const;
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // Requires divides(other): returns other / *this.
    Monomial quotient_of(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order; variable 0 is the largest.
int grlex_compare(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    Rational coeff;

    friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
};

// Ordered registry of indeterminate names. Poly itself only knows slot indices;
// the ring is needed to parse and render.
class Ring {
public:
    Ring() = default;
    explicit Ring(std::vector<std::string> names);

    // Generators followed by alpha, beta, c, h.
    static Ring standard(const std::vector<std::string>& generator_names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t index) const { return names_.at(index); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    // Returns the index of name, appending it when absent.
    std::size_t intern(std::string_view name);

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    std::vector<std::string> names_;
};

// Sparse multivariate polynomial over Q. Terms are stored in strictly decreasing
// grlex order with nonzero coefficients.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant);  // NOLINT: implicit lift of constants
    Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT

    static Poly variable(std::size_t index);
    static Poly monomial(const Monomial& mono, const Rational& coeff);
    // Builds from arbitrary (unsorted, possibly duplicated) terms.
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // Constant term value; zero when absent.
    Rational constant_term() const;
    const Term& leading_term() const { return terms_.front(); }
    const Rational& leading_coeff() const { return terms_.front().coeff; }
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    // Largest variable slot that occurs, or nullopt for constants.
    std::optional<std::size_t> max_variable() const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
    Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
    Poly scaled(const Rational& factor) const;
    Poly pow(unsigned exponent) const;

    // Exact quotient; throws ArithmeticError when divisor does not divide.
    Poly exact_div(const Poly& divisor) const;
    // Quotient if divisor divides *this exactly.
    std::optional<Poly> try_div(const Poly& divisor) const;
    // Divides all coefficients by the leading coefficient.
    Poly monic() const;

    Poly substitute(std::size_t var, const Rational& value) const;
    Rational evaluate(std::span<const Rational> point) const;

    // Renders with terms in ascending grlex order, e.g. "alpha+g2+g1*beta".
    std::string to_string(const Ring& ring) const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    explicit Poly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
    std::vector<Term> terms_;
};

inline Poly operator*(const Rational& lhs, const Poly& rhs) { return rhs.scaled(lhs); }

// Monic greatest common divisor (leading coefficient 1 under grlex); gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Coefficients of p viewed as a univariate polynomial in var; index = degree.
std::vector<Poly> coefficients_in(const Poly& p, std::size_t var);
Poly from_coefficients(const std::vector<Poly>& coeffs, std::size_t var);

std::size_t hash_value(const Poly& p);

} // namespace virg
