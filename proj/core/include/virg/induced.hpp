#pragma once

#include "virg/algebra.hpp"
#include "virg/group.hpp"
#include "virg/interseries.hpp"
#include "virg/session.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace virg {

// Generalized Verma module M(b, G0, V'(alpha, beta, G0)) and its irreducible
// quotient V(alpha, beta, b, G0), truncated to a finite window.
//
// Coordinates: weights of M are alpha + x - i b with x in G0 and level i >= 0.
// Every G0 element is written in coordinates with respect to split.g0_basis.

struct InductionData {
    Session session;
    Splitting split;
    IntermediateSeriesModule top;  // V(alpha, beta, G0) on the G0 lattice

    // Throws DomainError when V'(alpha, beta, G0) is zero (only possible for G0 = 0).
    InductionData(Session session, Splitting split);
    static InductionData with_direction(Session session, const GroupElement& b);

    std::size_t g0_rank() const { return split.g0_basis.size(); }
};

struct Window {
    int level_cap = 1;    // L
    int box_radius = 1;   // N: bound on G0 coordinates of lowering factors and raising probes
    int top_radius = 2;   // rows reported for |x_j| <= top_radius

    void validate() const;
};

// d_{x - k b} with k >= 1 and x in G0 coordinates.
struct LoweringFactor {
    std::int64_t k = 1;
    GroupElement x;

    friend auto operator<=>(const LoweringFactor&, const LoweringFactor&) = default;
    friend bool operator==(const LoweringFactor&, const LoweringFactor&) = default;
};

// d_{x_1 - k_1 b} ... d_{x_r - k_r b} (x) v_mu with factors sorted by (k, x).
struct InducedMonomial {
    std::vector<LoweringFactor> factors;
    GroupElement top;

    std::int64_t level() const;
    GroupElement weight() const;  // mu + sum x_j, in G0 coordinates
    std::string to_string() const;

    friend auto operator<=>(const InducedMonomial&, const InducedMonomial&) = default;
    friend bool operator==(const InducedMonomial&, const InducedMonomial&) = default;
};

using InducedVector = std::map<InducedMonomial, Scalar>;

struct LevelBasis {
    // (level, G0 weight) -> windowed PBW monomials
    std::map<std::pair<int, GroupElement>, std::vector<InducedMonomial>> blocks;

    const std::vector<InducedMonomial>& at(int level, const GroupElement& x) const;
    std::size_t total_size() const;
};

// Windowed monomials for all levels 0..L and weights |x_j| <= top_radius.
LevelBasis build_level_basis(const InductionData& data, const Window& window);

// Monomials of exact level and weight with factor coordinates bounded by box_radius.
std::vector<InducedMonomial> windowed_monomials(const InductionData& data, int level, const GroupElement& x,
                                                int box_radius);

struct InducedAction {
    InducedVector value;
    bool window_escape = false;  // some factor of the result leaves the box
};

// a . m computed exactly in M; C acts by 0.
InducedAction act_on_induced(const AlgebraElement& a, const InducedMonomial& m, const InductionData& data,
                             const Window& window);
InducedAction act_on_induced(const AlgebraElement& a, const InducedVector& v, const InductionData& data,
                             const Window& window);

enum class RankMode { generic_point, exact };
std::string to_string(RankMode mode);

struct QuotientOptions {
    RankMode mode = RankMode::generic_point;
    std::uint64_t seed = 1;
    int points = 2;            // evaluation points in generic_point mode
    bool check_stability = true;
};

struct DimEntry {
    int level = 0;
    GroupElement x;  // G0 coordinates
    int dim = 0;
    bool stable = true;
};

struct QuotientDims {
    Window window;
    RankMode mode = RankMode::generic_point;
    std::vector<DimEntry> entries;  // sorted by (level, x)

    const DimEntry* find(int level, const GroupElement& x) const;
};

// Dimensions of V(alpha, beta, b, G0) over the window: the rank of the pairing
// between windowed monomials and level-0 coefficients of raising words built
// from probes d_{y + k b}, |y_j| <= N. Stability compares N with N + 1.
QuotientDims maximal_quotient_dims(const InductionData& data, const Window& window,
                                   const QuotientOptions& options = {});

// Vectors in the kernel of every raising probe at one (level, weight) block:
// a basis of the windowed J in exact arithmetic, as coefficient vectors over
// windowed_monomials(level, x, N).
std::vector<InducedVector> windowed_kernel(const InductionData& data, int level, const GroupElement& x,
                                           int box_radius);

// (2i + 1)!!
std::int64_t double_factorial_bound(int level);

enum class SupportVerdict { pattern_A, pattern_B, violation };
std::string to_string(SupportVerdict v);

struct SupportReport {
    SupportVerdict verdict = SupportVerdict::pattern_A;
    std::optional<DimEntry> offending;
};

SupportReport support_check(const QuotientDims& q, const InductionData& data);

enum class StringVerdict { bounded, truncated_above, truncated_below, mixed, inconclusive };
std::string to_string(StringVerdict v);

// Support shape of the strings alpha + x - i b + Z g through the table.
StringVerdict string_boundedness(const QuotientDims& q, const InductionData& data, const GroupElement& g);

} // namespace virg
