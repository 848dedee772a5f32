#pragma once

#include "virg/group.hpp"
#include "virg/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace virg {

// Element of Vir[G]: sum_x a_x d_x + c C.
class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement d(const GroupElement& x, const Scalar& coeff = Scalar(1L));
    static AlgebraElement central(const Scalar& coeff = Scalar(1L));

    const std::map<GroupElement, Scalar>& d_terms() const { return d_terms_; }
    const Scalar& c_coeff() const { return c_coeff_; }
    bool is_zero() const { return d_terms_.empty() && c_coeff_.is_zero(); }

    AlgebraElement operator+(const AlgebraElement& rhs) const;
    AlgebraElement operator-(const AlgebraElement& rhs) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(const Scalar& s) const;
    AlgebraElement& operator+=(const AlgebraElement& rhs) { return *this = *this + rhs; }

    // "(g2-g1)*d[1,1]+C"; terms by coordinates, C last.
    std::string to_string(const Ring& ring) const;

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    void add_d(const GroupElement& x, const Scalar& coeff);
    std::map<GroupElement, Scalar> d_terms_;
    Scalar c_coeff_;
};

inline AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) { return a.scaled(s); }

// Structure constants of Vir[G] with respect to a fixed embedding of G.
class VirasoroAlgebra {
public:
    explicit VirasoroAlgebra(Group group) : group_(std::move(group)) {}

    const Group& group() const { return group_; }

    // [d_x, d_y] = (y - x) d_{x+y} + delta_{x,-y} (x^3 - x)/12 C, [C, .] = 0.
    AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement bracket_basis(const GroupElement& x, const GroupElement& y) const;

    // (iota(x)^3 - iota(x)) / 12
    Scalar central_term(const GroupElement& x) const;

private:
    Group group_;
};

struct MixedWeight {
    friend bool operator==(const MixedWeight&, const MixedWeight&) = default;
};
using Weight = std::variant<GroupElement, MixedWeight>;

// Eigenvalue index under ad d_0: x for multiples of d_x, 0 for C, "mixed" otherwise.
// The zero element has weight 0.
Weight weight_of(const AlgebraElement& a, std::size_t rank);

// ---------------------------------------------------------------------------
// Enveloping algebra

// Basis symbol of a word: d_x or C.
struct BasisSymbol {
    bool is_central = false;
    GroupElement index;

    static BasisSymbol d(GroupElement x) { return BasisSymbol{false, std::move(x)}; }
    static BasisSymbol c() { return BasisSymbol{true, {}}; }
    friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
};

// PBW monomial d_{x_1} ... d_{x_r} C^p with x_1 <= ... <= x_r in the chosen total order.
struct EnvelopingMonomial {
    std::vector<GroupElement> factors;
    unsigned c_power = 0;

    std::string to_string() const;
    friend auto operator<=>(const EnvelopingMonomial&, const EnvelopingMonomial&) = default;
    friend bool operator==(const EnvelopingMonomial&, const EnvelopingMonomial&) = default;
};

using EnvelopingElement = std::map<EnvelopingMonomial, Scalar>;

enum class RewriteStrategy { leftmost_inversion, rightmost_inversion };

// Rewrites a word into the PBW basis by commutator swaps; C is collected into
// the central power.
EnvelopingElement pbw_normalize(const VirasoroAlgebra& algebra, const std::vector<BasisSymbol>& word,
                                const TotalOrder& order,
                                RewriteStrategy strategy = RewriteStrategy::leftmost_inversion);

std::string to_string(const EnvelopingElement& e, const Ring& ring);

// ---------------------------------------------------------------------------
// Triangular parts

enum class PartSelector { plus, minus, plus_level, strict_plus_level };

// Vir[G]^+ / Vir[G]^- from a total order, or Vir[G]_+ / Vir[G]_++ from a splitting.
class TriangularPart {
public:
    static TriangularPart plus(TotalOrder order);
    static TriangularPart minus(TotalOrder order);
    static TriangularPart plus_level(Splitting splitting);
    static TriangularPart strict_plus_level(Splitting splitting);

    PartSelector selector() const { return selector_; }
    bool contains(const GroupElement& x) const;
    // C belongs to Vir[G]_+ only.
    bool contains_central() const { return selector_ == PartSelector::plus_level; }

private:
    PartSelector selector_ = PartSelector::plus;
    std::optional<TotalOrder> order_;
    std::optional<Splitting> splitting_;
};

bool part_membership(const GroupElement& x, const TriangularPart& part);

// Accepts "d[1,0]", "C", "3*d[1,-1]", "(g2-g1)*d[1,1]+1/12*C".
AlgebraElement parse_algebra_element(std::string_view text, const Group& group, const Ring& ring);

} // namespace virg
