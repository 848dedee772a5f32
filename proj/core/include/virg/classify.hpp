#pragma once

#include "virg/classical.hpp"
#include "virg/group.hpp"
#include "virg/induced.hpp"
#include "virg/interseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace virg {

enum class Provenance { interseries, induced, verma, external };
std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& text);

struct DescriptorFlags {
    bool is_Z = false;
    bool rank1_not_Z = false;
    bool infinitely_generated_rank1 = false;
};

// Weight offset + iota(coords) with the given dimension. The offset is a
// symbol name ("alpha", "h"), "0", or "iota[..]" for an embedded group element.
struct DescriptorRow {
    std::string offset = "0";
    GroupElement coords;
    std::int64_t dim = 0;
    std::optional<bool> stable;
};

struct ModuleDescriptor {
    Group group;
    DescriptorFlags flags;
    std::vector<DescriptorRow> rows;
    Provenance provenance = Provenance::external;

    // Throws DomainError on negative dims, rank mismatches or duplicate weights.
    void validate() const;
};

// Builders. Each adds zero rows just outside the support where the module is
// known to vanish, so that truncation is visible in the data.
ModuleDescriptor describe_interseries(const IntermediateSeriesModule& module, int radius);
ModuleDescriptor describe_induced(const InductionData& data, const QuotientDims& q);
ModuleDescriptor describe_verma(const Session& session, const std::vector<std::int64_t>& dims, bool lowest = false);

enum class BoundedVerdict { yes, yes_window_certified, no, inconclusive };
std::string to_string(BoundedVerdict v);

BoundedVerdict is_uniformly_bounded(const ModuleDescriptor& d);

enum class StringProfile { positively_truncated, negatively_truncated, bounded, mixed };
std::string to_string(StringProfile p);

// Support pattern of base + Z g inside the window. Throws DomainError when the
// string meets the window in fewer than three points.
StringProfile string_profile(const ModuleDescriptor& d, const GroupElement& g, const DescriptorRow& base);

enum class ModuleCase { trivial, intermediate_series, highest_weight, lowest_weight, induced_type, inconclusive };
std::string to_string(ModuleCase c);

struct ClassificationReport {
    ModuleCase module_case = ModuleCase::inconclusive;
    std::optional<GroupElement> detected_b;
    std::vector<GroupElement> detected_g0_basis;
    std::vector<std::string> certificates;
};

struct ClassifyOptions {
    int direction_bound = 2;  // coordinate bound for the direction search
};

ClassificationReport classify(const ModuleDescriptor& d, const ClassifyOptions& options = {});

} // namespace virg
