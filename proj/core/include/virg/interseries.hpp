#pragma once

#include "virg/group.hpp"
#include "virg/scalar.hpp"
#include "virg/session.hpp"

#include <optional>
#include <string>
#include <vector>

namespace virg {

struct ActionResult {
    Scalar coefficient;
    GroupElement target;
};

enum class SubquotientKind { whole, quotient_by_trivial, submodule_off_zero };
enum class SupportKind { alpha_plus_group, group_minus_zero };

std::string to_string(SubquotientKind kind);
std::string to_string(SupportKind kind);

// Which basis vectors v_y of V(alpha, beta) survive in V'. For the reducible
// cases the single index y = -x0 (alpha = iota(x0)) is dropped: by quotient when
// beta = 0, by restriction when beta = 1.
struct SubquotientDescriptor {
    SubquotientKind kind = SubquotientKind::whole;
    SupportKind support = SupportKind::alpha_plus_group;
    std::optional<GroupElement> excluded;  // lattice coordinates

    bool contains(const GroupElement& y) const { return !excluded || *excluded != y; }
};

// Structural criterion: alpha in iota(G) and beta in {0, 1}.
bool is_reducible(const Session& session);

// V(alpha, beta, L) on a lattice L inside G. Indices are coordinates with
// respect to `basis` (by default the generator basis of G, so L = G).
class IntermediateSeriesModule {
public:
    explicit IntermediateSeriesModule(Session session);
    IntermediateSeriesModule(Session session, std::vector<GroupElement> basis);

    const Session& session() const { return session_; }
    const std::vector<GroupElement>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }

    // Element of G with the given lattice coordinates.
    GroupElement embed(const GroupElement& lattice_coords) const;
    Scalar iota(const GroupElement& lattice_coords) const;

    // d_x v_y = (alpha + y + x beta) v_{x+y}; C acts as 0.
    ActionResult act(const GroupElement& x, const GroupElement& y) const;
    // alpha = iota(x0) with x0 in the lattice; returns x0 in lattice coordinates.
    std::optional<GroupElement> alpha_in_lattice() const;
    bool is_reducible() const;
    SubquotientDescriptor irreducible_subquotient() const;
    // Action on V': zero when the target is the dropped index.
    ActionResult act_on_subquotient(const GroupElement& x, const GroupElement& y) const;
    // dim V'_{alpha + y} for y in lattice coordinates: 1 or 0.
    int subquotient_dim(const GroupElement& y) const;

private:
    Session session_;
    std::vector<GroupElement> basis_;
    Scalar alpha_;
    Scalar beta_;
    std::vector<Scalar> basis_iota_;
    SubquotientDescriptor descriptor_;
};

} // namespace virg
