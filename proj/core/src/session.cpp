#include "virg/session.hpp"

#include "virg/error.hpp"

namespace virg {

bool Binding::equals_rational(const Rational& q) const {
    switch (kind_) {
    case Kind::free:
        return false;
    case Kind::rational:
        return value_ == q;
    case Kind::group_element:
        return sgn(q) == 0 && element_.is_zero();
    }
    return false;
}

Session::Session(Group group, Binding alpha, Binding beta, Binding c, Binding h)
    : group_(std::move(group)),
      ring_(group_.ring()),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      c_(std::move(c)),
      h_(std::move(h)) {
    if (alpha_.kind() == Binding::Kind::group_element) {
        group_.check(alpha_.element());
    }
    for (const Binding* b : {&beta_, &c_, &h_}) {
        if (b->kind() == Binding::Kind::group_element) {
            throw DomainError("only alpha may be bound to a group element");
        }
    }
}

std::size_t Session::slot(const std::string& name) const {
    auto idx = ring_.index_of(name);
    if (!idx) {
        throw DomainError("unknown symbol '" + name + "'");
    }
    return *idx;
}

Scalar Session::value_of(const Binding& b, const std::string& name) const {
    switch (b.kind()) {
    case Binding::Kind::free:
        return Scalar::variable(slot(name));
    case Binding::Kind::rational:
        return Scalar(b.value());
    case Binding::Kind::group_element:
        return group_.embed(b.element());
    }
    return Scalar();
}

std::optional<GroupElement> Session::alpha_in_group() const {
    switch (alpha_.kind()) {
    case Binding::Kind::free:
        return std::nullopt;
    case Binding::Kind::rational:
        // Generators are formal, so the only rational in iota(G) is 0.
        if (sgn(alpha_.value()) == 0) {
            return GroupElement::zero(group_.rank());
        }
        return std::nullopt;
    case Binding::Kind::group_element:
        return alpha_.element();
    }
    return std::nullopt;
}

std::string describe(const Binding& b, const std::string& symbol) {
    switch (b.kind()) {
    case Binding::Kind::free:
        return symbol;
    case Binding::Kind::rational:
        return b.value().get_str();
    case Binding::Kind::group_element:
        return "iota" + b.element().to_string();
    }
    return symbol;
}

} // namespace virg
