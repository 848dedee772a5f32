#pragma once

#include "virg/scalar.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace virg {

// Element of a free abelian group Z^n, stored as coordinates in the generator basis.
struct GroupElement {
    std::vector<std::int64_t> coords;

    GroupElement() = default;
    explicit GroupElement(std::vector<std::int64_t> c) : coords(std::move(c)) {}
    static GroupElement zero(std::size_t rank) { return GroupElement(std::vector<std::int64_t>(rank, 0)); }
    static GroupElement unit(std::size_t rank, std::size_t index);

    std::size_t rank() const { return coords.size(); }
    bool is_zero() const;
    // gcd of coordinates is 1.
    bool is_primitive() const;

    GroupElement operator+(const GroupElement& rhs) const;
    GroupElement operator-(const GroupElement& rhs) const;
    GroupElement operator-() const;
    GroupElement operator*(std::int64_t k) const;

    // Lexicographic on coordinates; this is the default total order on G.
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;

    // "[2,-3]"
    std::string to_string() const;
};

std::int64_t dot(const GroupElement& a, const GroupElement& b);

// Finitely generated free subgroup G of C with formal, hence Q-independent,
// generators g_1..g_n. The generators occupy ring slots 0..n-1.
class Group {
public:
    Group() = default;
    explicit Group(std::vector<std::string> generator_names);
    static Group with_rank(std::size_t rank);  // generators g1..gn

    std::size_t rank() const { return names_.size(); }
    const std::vector<std::string>& generator_names() const { return names_; }
    // Ring with the generators followed by alpha, beta, c, h.
    Ring ring() const { return Ring::standard(names_); }

    // Linear form sum_i coords_i * g_i.
    Scalar embed(const GroupElement& x) const;
    void check(const GroupElement& x) const;

    friend bool operator==(const Group&, const Group&) = default;

private:
    std::vector<std::string> names_;
};

inline std::size_t rank(const Group& g) { return g.rank(); }

// Compatible total order on Z^n: compare by the successive integer linear
// functionals in `rows`. The default (identity rows) is lexicographic.
class TotalOrder {
public:
    TotalOrder() = default;
    // rows must form a nonsingular integer matrix.
    explicit TotalOrder(std::vector<GroupElement> rows);
    static TotalOrder lexicographic(std::size_t rank);

    // <0, 0, >0
    int compare(const GroupElement& a, const GroupElement& b) const;
    bool is_positive(const GroupElement& x) const { return compare(x, GroupElement::zero(x.rank())) > 0; }
    bool is_negative(const GroupElement& x) const { return compare(x, GroupElement::zero(x.rank())) < 0; }

private:
    std::vector<GroupElement> rows_;  // empty = plain lexicographic
};

// Decomposition G = G0 (+) Z b with a unimodular basis {g0_basis, b}.
struct Splitting {
    GroupElement b;
    std::vector<GroupElement> g0_basis;

    struct Coordinates {
        std::vector<std::int64_t> g0;  // coordinates in g0_basis
        std::int64_t k = 0;             // coefficient of b
    };

    // Unique (u, k) with x = sum_j u_j g0_basis_j + k b.
    Coordinates decompose(const GroupElement& x) const;
    GroupElement compose(const std::vector<std::int64_t>& g0, std::int64_t k) const;
    // Determinant of the matrix with rows g0_basis..., b.
    std::int64_t determinant() const;
};

// Completes a primitive b to a unimodular basis. Throws GroupError when b is
// zero or not primitive (Z b is then not a direct summand).
Splitting split(const Group& group, const GroupElement& b);

// Splitting from user-supplied data; validates unimodularity.
Splitting make_splitting(const Group& group, const GroupElement& b, std::vector<GroupElement> g0_basis);

// Integer coordinates of x in the span of basis (linearly independent), if any.
std::optional<std::vector<std::int64_t>> coordinates_in_span(const std::vector<GroupElement>& basis,
                                                              const GroupElement& x);

// Exact integer determinant (Bareiss).
std::int64_t integer_determinant(const std::vector<std::vector<std::int64_t>>& rows);

} // namespace virg
