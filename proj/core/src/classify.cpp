#include "virg/classify.hpp"

#include "virg/error.hpp"
#include "virg/linalg.hpp"
#include "virg/parse.hpp"
#include "virg/rational.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace virg {

std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::interseries:
        return "interseries";
    case Provenance::induced:
        return "induced";
    case Provenance::verma:
        return "verma";
    case Provenance::external:
        return "external";
    }
    return "?";
}

Provenance parse_provenance(const std::string& text) {
    for (auto p : {Provenance::interseries, Provenance::induced, Provenance::verma, Provenance::external}) {
        if (to_string(p) == text) {
            return p;
        }
    }
    throw ParseError("unknown provenance '" + text + "'");
}

std::string to_string(BoundedVerdict v) {
    switch (v) {
    case BoundedVerdict::yes:
        return "yes";
    case BoundedVerdict::yes_window_certified:
        return "yes_window_certified";
    case BoundedVerdict::no:
        return "no";
    case BoundedVerdict::inconclusive:
        return "inconclusive";
    }
    return "?";
}

std::string to_string(StringProfile p) {
    switch (p) {
    case StringProfile::positively_truncated:
        return "positively_truncated";
    case StringProfile::negatively_truncated:
        return "negatively_truncated";
    case StringProfile::bounded:
        return "bounded";
    case StringProfile::mixed:
        return "mixed";
    }
    return "?";
}

std::string to_string(ModuleCase c) {
    switch (c) {
    case ModuleCase::trivial:
        return "trivial";
    case ModuleCase::intermediate_series:
        return "intermediate_series";
    case ModuleCase::highest_weight:
        return "highest_weight";
    case ModuleCase::lowest_weight:
        return "lowest_weight";
    case ModuleCase::induced_type:
        return "induced_type";
    case ModuleCase::inconclusive:
        return "inconclusive";
    }
    return "?";
}

namespace {

// Folds "iota[..]" offsets into the coordinates.
DescriptorRow normalized(const DescriptorRow& row) {
    DescriptorRow out = row;
    if (row.offset.rfind("iota", 0) == 0) {
        const std::string tuple = row.offset.substr(4);
        TokenCursor cursor(tuple, tokenize(tuple));
        const GroupElement shift(parse_integer_tuple(cursor));
        if (!cursor.at_end()) {
            throw ParseError("trailing input in offset " + row.offset);
        }
        if (shift.rank() != row.coords.rank()) {
            throw DomainError("offset " + row.offset + " has the wrong rank");
        }
        out.coords = row.coords + shift;
        out.offset = "0";
    }
    return out;
}

bool offset_is_zero(const std::string& offset) {
    try {
        return sgn(parse_rational(offset)) == 0;
    } catch (const Error&) {
        return false;
    }
}

bool is_zero_weight(const DescriptorRow& r) {
    return offset_is_zero(r.offset) && r.coords.is_zero();
}

std::vector<DescriptorRow> usable_rows(const ModuleDescriptor& d) {
    std::vector<DescriptorRow> out;
    for (const auto& r : d.rows) {
        if (r.stable.value_or(true)) {
            out.push_back(normalized(r));
        }
    }
    return out;
}

using WeightKey = std::pair<std::string, GroupElement>;

// Primitive vectors with |coords| <= bound ordered by L1 norm, then number of
// nonzero coordinates, then lexicographically descending.
std::vector<GroupElement> primitive_candidates(std::size_t rank, int bound) {
    std::vector<GroupElement> out;
    std::vector<std::int64_t> c(rank, -bound);
    while (true) {
        GroupElement g(c);
        if (!g.is_zero() && g.is_primitive()) {
            out.push_back(g);
        }
        std::size_t i = rank;
        bool done = true;
        while (i > 0) {
            --i;
            if (c[i] < bound) {
                ++c[i];
                std::fill(c.begin() + static_cast<std::ptrdiff_t>(i) + 1, c.end(), -bound);
                done = false;
                break;
            }
        }
        if (done) {
            break;
        }
    }
    auto key = [](const GroupElement& g) {
        std::int64_t l1 = 0;
        int nz = 0;
        for (auto v : g.coords) {
            l1 += v < 0 ? -v : v;
            nz += v != 0;
        }
        return std::make_pair(l1, nz);
    };
    std::stable_sort(out.begin(), out.end(), [&](const GroupElement& a, const GroupElement& b) {
        const auto ka = key(a);
        const auto kb = key(b);
        if (ka != kb) {
            return ka < kb;
        }
        return a > b;
    });
    return out;
}

// For a primitive functional phi: a basis of ker phi and some x with phi(x) = 1.
std::pair<std::vector<GroupElement>, GroupElement> dual_splitting(const Group& group, const GroupElement& phi) {
    const Splitting s = split(group, phi);  // rows g0_basis..., phi form a unimodular matrix
    const std::size_t n = group.rank();
    Matrix<Rational> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const GroupElement& row = i + 1 < n ? s.g0_basis[i] : s.b;
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = Rational(static_cast<long>(row.coords[j]));
        }
        aug(i, n + i) = Rational(1);
    }
    const auto ech = reduced_row_echelon(std::move(aug));
    // Column j of the inverse is the vector annihilated by every row except row j.
    auto column = [&](std::size_t j) {
        std::vector<std::int64_t> c(n);
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = static_cast<std::int64_t>(mpz_get_si(ech.reduced(i, n + j).get_num_mpz_t()));
        }
        return GroupElement(std::move(c));
    };
    std::vector<GroupElement> kernel;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        kernel.push_back(column(j));
    }
    return {kernel, column(n - 1)};
}

StringProfile profile_of(const std::map<std::int64_t, std::int64_t>& points, bool ignore_origin_hole) {
    std::optional<std::int64_t> lo;
    std::optional<std::int64_t> hi;
    for (const auto& [t, dim] : points) {
        if (dim > 0) {
            lo = lo ? std::min(*lo, t) : t;
            hi = hi ? std::max(*hi, t) : t;
        }
    }
    if (!lo) {
        return StringProfile::bounded;
    }
    const bool above = points.rbegin()->first > *hi;
    const bool below = points.begin()->first < *lo;
    if (above && below) {
        return StringProfile::bounded;
    }
    if (above) {
        return StringProfile::positively_truncated;
    }
    if (below) {
        return StringProfile::negatively_truncated;
    }
    std::set<std::int64_t> values;
    for (const auto& [t, dim] : points) {
        if (!(ignore_origin_hole && dim == 0)) {
            values.insert(dim);
        }
    }
    return values.size() <= 1 ? StringProfile::bounded : StringProfile::mixed;
}

} // namespace

void ModuleDescriptor::validate() const {
    std::set<WeightKey> seen;
    for (const auto& r : rows) {
        if (r.dim < 0) {
            throw DomainError("negative dimension in descriptor");
        }
        if (r.coords.rank() != group.rank()) {
            throw DomainError("row coordinates " + r.coords.to_string() + " do not match the group rank");
        }
        const DescriptorRow n = normalized(r);
        if (!seen.insert({n.offset, n.coords}).second) {
            throw DomainError("duplicate weight " + n.offset + "+" + n.coords.to_string());
        }
    }
}

ModuleDescriptor describe_interseries(const IntermediateSeriesModule& module, int radius) {
    const Session& s = module.session();
    if (module.rank() != s.group().rank()) {
        throw DomainError("interseries descriptors are built over the whole group");
    }
    ModuleDescriptor d;
    d.group = s.group();
    d.flags.is_Z = s.group().rank() == 1;
    d.provenance = Provenance::interseries;
    const std::string offset = describe(s.alpha(), "alpha");
    const std::size_t n = s.group().rank();
    std::vector<std::int64_t> c(n, -radius);
    while (true) {
        const GroupElement y(c);
        d.rows.push_back(DescriptorRow{offset, module.embed(y), module.subquotient_dim(y), std::nullopt});
        std::size_t i = n;
        bool done = true;
        while (i > 0) {
            --i;
            if (c[i] < radius) {
                ++c[i];
                std::fill(c.begin() + static_cast<std::ptrdiff_t>(i) + 1, c.end(), -radius);
                done = false;
                break;
            }
        }
        if (done || n == 0) {
            break;
        }
    }
    return d;
}

ModuleDescriptor describe_induced(const InductionData& data, const QuotientDims& q) {
    ModuleDescriptor d;
    d.group = data.session.group();
    d.flags.is_Z = d.group.rank() == 1;
    d.provenance = Provenance::induced;
    const std::string offset = describe(data.session.alpha(), "alpha");
    std::set<GroupElement> frame;
    for (const auto& e : q.entries) {
        d.rows.push_back(DescriptorRow{offset, data.split.compose(e.x.coords, -e.level), e.dim, e.stable});
        frame.insert(e.x);
    }
    // Nothing lives above level 0.
    for (const auto& x : frame) {
        d.rows.push_back(DescriptorRow{offset, data.split.compose(x.coords, 1), 0, true});
    }
    return d;
}

ModuleDescriptor describe_verma(const Session& session, const std::vector<std::int64_t>& dims, bool lowest) {
    if (session.group().rank() != 1) {
        throw DomainError("Verma descriptors need a rank-1 group");
    }
    ModuleDescriptor d;
    d.group = session.group();
    d.flags.is_Z = true;
    d.provenance = Provenance::verma;
    const std::string offset = describe(session.h(), "h");
    const std::int64_t sign = lowest ? 1 : -1;
    for (std::size_t n = 0; n < dims.size(); ++n) {
        d.rows.push_back(DescriptorRow{offset, GroupElement({sign * static_cast<std::int64_t>(n)}), dims[n], true});
    }
    for (std::int64_t n = 1; n <= 2; ++n) {
        d.rows.push_back(DescriptorRow{offset, GroupElement({-sign * n}), 0, true});
    }
    return d;
}

BoundedVerdict is_uniformly_bounded(const ModuleDescriptor& d) {
    d.validate();
    std::set<std::int64_t> dims;
    for (const auto& r : usable_rows(d)) {
        if (!is_zero_weight(r)) {
            dims.insert(r.dim);
        }
    }
    if (dims.empty()) {
        return BoundedVerdict::inconclusive;
    }
    if (dims.size() > 1) {
        return BoundedVerdict::no;
    }
    if (d.provenance == Provenance::interseries) {
        if (*dims.begin() >= 2) {
            throw DomainError("malformed intermediate-series descriptor: weight spaces of dimension " +
                              std::to_string(*dims.begin()));
        }
        return BoundedVerdict::yes;
    }
    return BoundedVerdict::yes_window_certified;
}

StringProfile string_profile(const ModuleDescriptor& d, const GroupElement& g, const DescriptorRow& base) {
    d.validate();
    if (g.rank() != d.group.rank() || g.is_zero()) {
        throw DomainError("string direction must be a nonzero element of the group");
    }
    const DescriptorRow b = normalized(base);
    std::map<std::int64_t, std::int64_t> points;
    for (const auto& r : usable_rows(d)) {
        if (r.offset != b.offset) {
            continue;
        }
        // r = base + t g for an integer t?
        const GroupElement diff = r.coords - b.coords;
        std::optional<std::int64_t> t;
        bool on_string = true;
        for (std::size_t i = 0; i < g.rank() && on_string; ++i) {
            if (g.coords[i] == 0) {
                on_string = diff.coords[i] == 0;
                continue;
            }
            if (diff.coords[i] % g.coords[i] != 0) {
                on_string = false;
                continue;
            }
            const std::int64_t ti = diff.coords[i] / g.coords[i];
            if (t && *t != ti) {
                on_string = false;
            }
            t = ti;
        }
        if (on_string && t) {
            points[*t] = r.dim;
        }
    }
    if (points.size() < 3) {
        throw DomainError("string through " + b.coords.to_string() + " meets the window in " +
                          std::to_string(points.size()) + " points; need at least 3");
    }
    return profile_of(points, true);
}

ClassificationReport classify(const ModuleDescriptor& d, const ClassifyOptions& options) {
    d.validate();
    ClassificationReport report;
    const std::size_t rank = d.group.rank();
    if (d.flags.is_Z && (rank != 1 || d.flags.rank1_not_Z || d.flags.infinitely_generated_rank1)) {
        throw DomainError("contradictory flags: is_Z requires a rank-1 group and excludes the other flags");
    }
    if (d.flags.infinitely_generated_rank1 || d.flags.rank1_not_Z) {
        report.module_case = ModuleCase::intermediate_series;
        report.certificates.push_back("rank-1 group other than Z: intermediate series by flag");
        return report;
    }

    const auto rows = usable_rows(d);
    if (rows.empty()) {
        report.certificates.push_back("no stable rows");
        return report;
    }
    std::vector<DescriptorRow> support;
    for (const auto& r : rows) {
        if (r.dim > 0 && !is_zero_weight(r)) {
            support.push_back(r);
        }
    }
    if (support.empty()) {
        report.module_case = ModuleCase::trivial;
        report.certificates.push_back("support contained in {0}");
        return report;
    }
    std::set<std::string> offsets;
    std::int64_t max_dim = 0;
    for (const auto& r : support) {
        offsets.insert(r.offset);
        max_dim = std::max(max_dim, r.dim);
    }

    const BoundedVerdict bounded = is_uniformly_bounded(d);
    report.certificates.push_back("uniformly bounded: " + to_string(bounded));
    const bool interseries_like =
        (bounded == BoundedVerdict::yes || bounded == BoundedVerdict::yes_window_certified) && max_dim <= 1;
    if (interseries_like) {
        report.module_case = ModuleCase::intermediate_series;
        report.certificates.push_back("nonzero weight spaces have dimension <= 1");
        return report;
    }
    if (offsets.size() != 1) {
        report.certificates.push_back("support spans several weight cosets");
        return report;
    }

    if (rank == 1) {
        const GroupElement g({1});
        const StringProfile p = string_profile(d, g, support.front());
        report.certificates.push_back("string along " + g.to_string() + ": " + to_string(p));
        if (p == StringProfile::positively_truncated) {
            report.module_case = ModuleCase::highest_weight;
        } else if (p == StringProfile::negatively_truncated) {
            report.module_case = ModuleCase::lowest_weight;
        }
        return report;
    }

    // Look for phi with support in {phi <= top}, zeros observed at phi = top + 1,
    // and G0 = ker phi strings within the level bound.
    const auto candidates = primitive_candidates(rank, options.direction_bound);
    for (const auto& phi : candidates) {
        std::int64_t top = dot(phi, support.front().coords);
        for (const auto& r : support) {
            top = std::max(top, dot(phi, r.coords));
        }
        bool zeros_above = false;
        for (const auto& r : rows) {
            if (r.offset == support.front().offset && dot(phi, r.coords) == top + 1) {
                zeros_above = true;
                break;
            }
        }
        if (!zeros_above) {
            continue;
        }
        bool within_bound = true;
        for (const auto& r : support) {
            const auto level = top - dot(phi, r.coords);
            if (level > 12 || r.dim > double_factorial_bound(static_cast<int>(level))) {
                within_bound = false;
                break;
            }
        }
        if (!within_bound) {
            continue;
        }
        auto [g0, preimage] = dual_splitting(d.group, phi);
        GroupElement b = preimage;
        for (const auto& v : candidates) {
            if (dot(phi, v) == 1) {
                b = v;
                break;
            }
        }
        Splitting s;
        try {
            s = make_splitting(d.group, b, g0);
        } catch (const GroupError&) {
            continue;
        }
        // b-strings through top-level weights: some must show the truncation,
        // none may be truncated the other way.
        int truncated = 0;
        bool contradicted = false;
        for (const auto& r : support) {
            if (dot(phi, r.coords) != top) {
                continue;
            }
            try {
                const StringProfile p = string_profile(d, b, r);
                truncated += p == StringProfile::positively_truncated;
                contradicted = contradicted || p == StringProfile::negatively_truncated;
            } catch (const DomainError&) {
            }
        }
        if (truncated == 0 || contradicted) {
            continue;
        }
        report.module_case = ModuleCase::induced_type;
        report.detected_b = b;
        report.detected_g0_basis = s.g0_basis;
        report.certificates.push_back("support below level 0 along " + b.to_string() + ", zeros above");
        report.certificates.push_back("G0 strings within the (2i+1)!! level bound");
        report.certificates.push_back(std::to_string(truncated) + " b-strings positively truncated");
        report.certificates.push_back("unimodular splitting, det " + std::to_string(s.determinant()));
        return report;
    }
    report.certificates.push_back("no direction with coordinates <= " + std::to_string(options.direction_bound) +
                                  " certifies an induced module");
    return report;
}

} // namespace virg
