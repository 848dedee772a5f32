#pragma once

#include "virg/group.hpp"
#include "virg/scalar.hpp"

#include <optional>
#include <string>

namespace virg {

// A parameter is a free symbol, a rational constant, or (for alpha) the
// embedded value iota(x0) of a group element.
class Binding {
public:
    enum class Kind { free, rational, group_element };

    static Binding free() { return Binding(Kind::free, Rational(0), {}); }
    static Binding rational(const Rational& value) { return Binding(Kind::rational, value, {}); }
    static Binding element(const GroupElement& x) { return Binding(Kind::group_element, Rational(0), x); }

    Kind kind() const { return kind_; }
    bool is_free() const { return kind_ == Kind::free; }
    const Rational& value() const { return value_; }
    const GroupElement& element() const { return element_; }

    // Rational equal to q (group elements never compare equal to a rational
    // unless they are zero).
    bool equals_rational(const Rational& q) const;

    friend bool operator==(const Binding&, const Binding&) = default;

private:
    Binding(Kind kind, Rational value, GroupElement element)
        : kind_(kind), value_(std::move(value)), element_(std::move(element)) {}

    Kind kind_;
    Rational value_;
    GroupElement element_;
};

// Fixed group together with the bindings of alpha, beta, c, h.
class Session {
public:
    explicit Session(Group group, Binding alpha = Binding::free(), Binding beta = Binding::free(),
                     Binding c = Binding::free(), Binding h = Binding::free());

    const Group& group() const { return group_; }
    const Ring& ring() const { return ring_; }
    const Binding& alpha() const { return alpha_; }
    const Binding& beta() const { return beta_; }
    const Binding& c() const { return c_; }
    const Binding& h() const { return h_; }

    Scalar alpha_value() const { return value_of(alpha_, "alpha"); }
    Scalar beta_value() const { return value_of(beta_, "beta"); }
    Scalar c_value() const { return value_of(c_, "c"); }
    Scalar h_value() const { return value_of(h_, "h"); }

    // Structural membership alpha in iota(G): alpha = iota(x0), or alpha = 0.
    // Returns x0 when it holds.
    std::optional<GroupElement> alpha_in_group() const;

    std::size_t slot(const std::string& name) const;

private:
    Scalar value_of(const Binding& b, const std::string& name) const;

    Group group_;
    Ring ring_;
    Binding alpha_;
    Binding beta_;
    Binding c_;
    Binding h_;
};

// Human-readable form: symbol name, rational, or "iota[1,0]".
std::string describe(const Binding& b, const std::string& symbol);

} // namespace virg
