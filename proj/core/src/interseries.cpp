#include "virg/interseries.hpp"

#include "virg/error.hpp"

namespace virg {

std::string to_string(SubquotientKind kind) {
    switch (kind) {
    case SubquotientKind::whole:
        return "whole";
    case SubquotientKind::quotient_by_trivial:
        return "quotient_by_trivial";
    case SubquotientKind::submodule_off_zero:
        return "submodule_off_zero";
    }
    return "?";
}

std::string to_string(SupportKind kind) {
    return kind == SupportKind::alpha_plus_group ? "alpha+G" : "G\\{0}";
}

bool is_reducible(const Session& session) {
    return IntermediateSeriesModule(session).is_reducible();
}

IntermediateSeriesModule::IntermediateSeriesModule(Session session)
    : IntermediateSeriesModule(session, [&] {
          std::vector<GroupElement> std_basis;
          for (std::size_t i = 0; i < session.group().rank(); ++i) {
              std_basis.push_back(GroupElement::unit(session.group().rank(), i));
          }
          return std_basis;
      }()) {}

IntermediateSeriesModule::IntermediateSeriesModule(Session session, std::vector<GroupElement> basis)
    : session_(std::move(session)), basis_(std::move(basis)) {
    for (const auto& e : basis_) {
        session_.group().check(e);
        basis_iota_.push_back(session_.group().embed(e));
    }
    alpha_ = session_.alpha_value();
    beta_ = session_.beta_value();

    const auto x0 = alpha_in_lattice();
    if (x0 && session_.beta().equals_rational(Rational(0))) {
        descriptor_ = {SubquotientKind::quotient_by_trivial, SupportKind::group_minus_zero, -*x0};
    } else if (x0 && session_.beta().equals_rational(Rational(1))) {
        descriptor_ = {SubquotientKind::submodule_off_zero, SupportKind::group_minus_zero, -*x0};
    } else {
        descriptor_ = {SubquotientKind::whole, SupportKind::alpha_plus_group, std::nullopt};
    }
}

GroupElement IntermediateSeriesModule::embed(const GroupElement& lattice_coords) const {
    if (lattice_coords.rank() != basis_.size()) {
        throw GroupError("lattice coordinates have rank " + std::to_string(lattice_coords.rank()) +
                         ", expected " + std::to_string(basis_.size()));
    }
    GroupElement out = GroupElement::zero(session_.group().rank());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        out = out + basis_[j] * lattice_coords.coords[j];
    }
    return out;
}

Scalar IntermediateSeriesModule::iota(const GroupElement& lattice_coords) const {
    Scalar out;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        if (lattice_coords.coords.at(j) != 0) {
            out += basis_iota_[j] * Scalar(static_cast<long>(lattice_coords.coords[j]));
        }
    }
    return out;
}

ActionResult IntermediateSeriesModule::act(const GroupElement& x, const GroupElement& y) const {
    embed(x);
    embed(y);
    return {alpha_ + iota(y) + iota(x) * beta_, x + y};
}

std::optional<GroupElement> IntermediateSeriesModule::alpha_in_lattice() const {
    const auto x0 = session_.alpha_in_group();
    if (!x0) {
        return std::nullopt;
    }
    if (auto c = coordinates_in_span(basis_, *x0)) {
        return GroupElement(std::move(*c));
    }
    return std::nullopt;
}

bool IntermediateSeriesModule::is_reducible() const {
    return descriptor_.kind != SubquotientKind::whole;
}

SubquotientDescriptor IntermediateSeriesModule::irreducible_subquotient() const {
    return descriptor_;
}

ActionResult IntermediateSeriesModule::act_on_subquotient(const GroupElement& x, const GroupElement& y) const {
    if (!descriptor_.contains(y)) {
        throw DomainError("v" + y.to_string() + " is not a basis vector of the irreducible sub-quotient");
    }
    ActionResult r = act(x, y);
    if (!descriptor_.contains(r.target)) {
        r.coefficient = Scalar();
    }
    return r;
}

int IntermediateSeriesModule::subquotient_dim(const GroupElement& y) const {
    return descriptor_.contains(y) ? 1 : 0;
}

} // namespace virg
