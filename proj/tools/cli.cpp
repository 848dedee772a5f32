#include "cli.hpp"

#include "virg/algebra.hpp"
#include "virg/classical.hpp"
#include "virg/error.hpp"
#include "virg/induced.hpp"
#include "virg/interseries.hpp"
#include "virg/parse.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace virg::cli {

namespace {

const std::set<std::string> kCommands{"bracket", "interseries", "induce", "verma", "classify"};
const std::vector<std::string> kParameters{"alpha", "beta", "c", "h"};
const std::set<std::string> kReserved{"alpha", "beta", "c", "h", "C", "d", "iota", "v"};

std::vector<std::int64_t> tuple_of(const json& j, const std::string& what) {
    if (j.is_string()) {
        const std::string text = j.get<std::string>();
        TokenCursor cursor(text, tokenize(text));
        auto t = parse_integer_tuple(cursor);
        if (!cursor.at_end()) {
            throw ParseError(what + ": trailing input in '" + text + "'");
        }
        return t;
    }
    if (!j.is_array()) {
        throw ParseError(what + " must be an integer tuple");
    }
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw ParseError(what + " must contain integers only");
        }
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

GroupElement element_of(const json& j, const std::string& what, std::size_t rank) {
    GroupElement g(tuple_of(j, what));
    if (g.rank() != rank) {
        throw ParseError(what + " has " + std::to_string(g.rank()) + " coordinates, expected " + std::to_string(rank));
    }
    return g;
}

Group group_of(const json& config) {
    if (!config.contains("group") || !config["group"].is_object()) {
        return Group::with_rank(1);
    }
    const json& g = config["group"];
    if (g.contains("generators")) {
        std::vector<std::string> names;
        for (const auto& n : g["generators"]) {
            if (!n.is_string()) {
                throw ParseError("generator names must be strings");
            }
            names.push_back(n.get<std::string>());
        }
        return Group(std::move(names));
    }
    if (!g.contains("rank") || !g["rank"].is_number_integer() || g["rank"].get<std::int64_t>() < 1) {
        throw ParseError("group.rank must be a positive integer");
    }
    return Group::with_rank(static_cast<std::size_t>(g["rank"].get<std::int64_t>()));
}

Binding binding_of(const json& v, const std::string& name, const Group& group) {
    if (v.is_null() || (v.is_string() && (v.get<std::string>() == "free" || v.get<std::string>() == name))) {
        return Binding::free();
    }
    if (v.is_number_integer()) {
        return Binding::rational(make_rational(v.get<std::int64_t>()));
    }
    if (v.is_object() && v.contains("element")) {
        if (name != "alpha") {
            throw ParseError(name + " cannot be bound to a group element");
        }
        return Binding::element(element_of(v["element"], "alpha.element", group.rank()));
    }
    if (!v.is_string()) {
        throw ParseError("binding of " + name + " must be \"free\", a rational, or {\"element\": [..]}");
    }
    const std::string text = v.get<std::string>();
    try {
        return Binding::rational(parse_rational(text));
    } catch (const ParseError&) {
    }
    if (name == "alpha") {
        const auto& names = group.generator_names();
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == text) {
                return Binding::element(GroupElement::unit(group.rank(), i));
            }
        }
        if (text.rfind("iota", 0) == 0) {
            return Binding::element(element_of(text.substr(4), "alpha", group.rank()));
        }
    }
    throw ParseError("unbound symbol '" + text + "' in the binding of " + name);
}

int int_field(const json& obj, const char* key, int fallback) {
    if (!obj.is_object() || !obj.contains(key)) {
        return fallback;
    }
    if (!obj[key].is_number_integer()) {
        throw ParseError(std::string(key) + " must be an integer");
    }
    return obj[key].get<int>();
}

const json& section(const json& config, const char* name) {
    static const json empty = json::object();
    return config.contains(name) && config[name].is_object() ? config[name] : empty;
}

RankMode rank_mode_of(const json& config) {
    const std::string mode = config.value("rank_mode", std::string("generic_point"));
    if (mode == "generic_point") {
        return RankMode::generic_point;
    }
    if (mode == "exact") {
        return RankMode::exact;
    }
    throw ParseError("rank_mode must be generic_point or exact");
}

template <class F>
void check(std::vector<std::string>& diagnostics, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        diagnostics.emplace_back(e.what());
    }
}

json to_json(const GroupElement& g) {
    return json(g.coords);
}

json g0_basis_json(const std::vector<GroupElement>& basis) {
    json out = json::array();
    for (const auto& g : basis) {
        out.push_back(to_json(g));
    }
    return out;
}

std::vector<std::string> csv_row(std::initializer_list<std::string> head, const GroupElement& x,
                                 std::initializer_list<std::string> tail) {
    std::vector<std::string> row(head);
    for (auto c : x.coords) {
        row.push_back(std::to_string(c));
    }
    row.insert(row.end(), tail);
    return row;
}

std::vector<std::string> coordinate_header(std::initializer_list<std::string> head, const std::string& prefix,
                                           std::size_t n, std::initializer_list<std::string> tail) {
    std::vector<std::string> row(head);
    for (std::size_t i = 1; i <= n; ++i) {
        row.push_back(prefix + std::to_string(i));
    }
    row.insert(row.end(), tail);
    return row;
}

RunResult run_bracket(const json& config) {
    const Session session = make_session(config);
    const Group& group = session.group();
    const json& args = section(config, "bracket");
    VirasoroAlgebra algebra(group);
    AlgebraElement a;
    AlgebraElement b;
    if (args.contains("a")) {
        a = parse_algebra_element(args["a"].get<std::string>(), group, session.ring());
        b = parse_algebra_element(args["b"].get<std::string>(), group, session.ring());
    } else {
        a = AlgebraElement::d(element_of(args["x"], "bracket.x", group.rank()));
        b = AlgebraElement::d(element_of(args["y"], "bracket.y", group.rank()));
    }
    RunResult r;
    r.result = {{"a", a.to_string(session.ring())},
                {"b", b.to_string(session.ring())},
                {"value", algebra.bracket(a, b).to_string(session.ring())}};
    r.stability = {{"windowed", false}};
    return r;
}

RunResult run_interseries(const json& config) {
    const Session session = make_session(config);
    const json& args = section(config, "interseries");
    const int radius = int_field(args, "radius", make_window(config).top_radius);
    const IntermediateSeriesModule module(session);
    const auto sub = module.irreducible_subquotient();
    RunResult r;
    json descriptor = {{"kind", to_string(sub.kind)}, {"support", to_string(sub.support)}};
    descriptor["excluded"] = sub.excluded ? to_json(*sub.excluded) : json(nullptr);
    const ModuleDescriptor table = describe_interseries(module, radius);
    r.result = {{"reducible", module.is_reducible()},
                {"subquotient", descriptor},
                {"uniformly_bounded", to_string(is_uniformly_bounded(table))},
                {"descriptor", descriptor_to_json(table)}};
    json actions = json::array();
    if (args.contains("actions")) {
        for (const auto& a : args["actions"]) {
            const auto x = element_of(a["x"], "action.x", session.group().rank());
            const auto y = element_of(a["y"], "action.y", session.group().rank());
            const ActionResult on_v = module.act(x, y);
            json entry = {{"x", to_json(x)},
                          {"y", to_json(y)},
                          {"coefficient", on_v.coefficient.to_string(session.ring())},
                          {"target", to_json(on_v.target)}};
            if (module.subquotient_dim(y) == 1) {
                entry["subquotient_coefficient"] =
                    module.act_on_subquotient(x, y).coefficient.to_string(session.ring());
            }
            actions.push_back(entry);
        }
    }
    r.result["actions"] = actions;
    r.stability = {{"windowed", false}};
    r.table.push_back(coordinate_header({}, "y", session.group().rank(), {"dim", "stable"}));
    for (const auto& row : table.rows) {
        r.table.push_back(csv_row({}, row.coords, {std::to_string(row.dim), "true"}));
    }
    return r;
}

RunResult run_induce(const json& config) {
    const Session session = make_session(config);
    const Window window = make_window(config);
    const auto data = InductionData::with_direction(session, element_of(config["b"], "b", session.group().rank()));
    QuotientOptions options;
    options.mode = rank_mode_of(config);
    options.seed = config.value("seed", std::uint64_t{1});
    options.points = config.value("points", 2);
    const QuotientDims q = maximal_quotient_dims(data, window, options);

    RunResult r;
    json entries = json::array();
    int unstable = 0;
    bool bound_ok = true;
    for (const auto& e : q.entries) {
        unstable += !e.stable;
        bound_ok = bound_ok && (!e.stable || e.dim <= double_factorial_bound(e.level));
        entries.push_back({{"level", e.level},
                           {"x", to_json(e.x)},
                           {"weight", to_json(data.split.compose(e.x.coords, -e.level))},
                           {"dim", e.dim},
                           {"stable", e.stable}});
    }
    const SupportReport support = support_check(q, data);
    json strings = json::object();
    for (std::size_t j = 0; j < data.split.g0_basis.size(); ++j) {
        strings["g0_" + std::to_string(j + 1)] = to_string(string_boundedness(q, data, data.split.g0_basis[j]));
    }
    strings["b"] = to_string(string_boundedness(q, data, data.split.b));
    r.result = {{"b", to_json(data.split.b)},
                {"g0_basis", g0_basis_json(data.split.g0_basis)},
                {"mode", to_string(q.mode)},
                {"entries", entries},
                {"support", to_string(support.verdict)},
                {"strings", strings},
                {"level_bound_holds", bound_ok},
                {"descriptor", descriptor_to_json(describe_induced(data, q))}};
    r.stability = {{"windowed", true},
                   {"compared", "N=" + std::to_string(window.box_radius) + " vs N=" +
                                    std::to_string(window.box_radius + 1)},
                   {"entries", q.entries.size()},
                   {"unstable", unstable}};
    if (unstable > 0) {
        r.stability["hint"] = "unstable entries depend on the box; increase N (--window-N)";
    }
    r.table.push_back(coordinate_header({"level"}, "x", data.g0_rank(), {"dim", "stable"}));
    for (const auto& e : q.entries) {
        r.table.push_back(
            csv_row({std::to_string(e.level)}, e.x, {std::to_string(e.dim), e.stable ? "true" : "false"}));
    }
    return r;
}

RunResult run_verma(const json& config) {
    const Session session = make_session(config);
    const int L = make_window(config).level_cap;
    const json& args = section(config, "verma");
    const Rational scale = parse_rational(args.value("index_scale", std::string("1")));
    const int singular_levels = std::min(L, int_field(args, "singular_levels", 2));
    const auto dims = TruncatedVermaModule(session, L, scale).dims();
    RunResult r;
    r.result = {{"dims", dims}, {"partition_counts", partition_counts(L)}};
    json singular = json::array();
    for (int n = 1; n <= singular_levels; ++n) {
        const auto report = find_singular(session, n, scale);
        json s = {{"level", n}, {"kernel_dim", report.kernel.size()}};
        s["raising_condition"] =
            report.raising_condition ? json(report.raising_condition->to_string(session.ring())) : json(nullptr);
        s["gram_condition"] =
            report.gram_condition ? json(report.gram_condition->to_string(session.ring())) : json(nullptr);
        singular.push_back(s);
    }
    r.result["singular"] = singular;
    std::vector<std::int64_t> reported = dims;
    const bool numeric = session.c().kind() == Binding::Kind::rational && session.h().kind() == Binding::Kind::rational;
    std::vector<std::int64_t> irreducible;
    if (numeric) {
        irreducible = irreducible_dims(session, L, scale);
        r.result["irreducible_dims"] = irreducible;
        r.result["quotient_dims_after_singular"] = quotient_dims_after_singular(session, L, scale);
        reported = irreducible;
    }
    r.result["descriptor"] = descriptor_to_json(describe_verma(session, reported, args.value("lowest", false)));
    r.stability = {{"windowed", false}};
    r.table.push_back(numeric ? std::vector<std::string>{"level", "dim", "irreducible_dim", "stable"}
                              : std::vector<std::string>{"level", "dim", "stable"});
    for (std::size_t n = 0; n < dims.size(); ++n) {
        std::vector<std::string> row{std::to_string(n), std::to_string(dims[n])};
        if (numeric) {
            row.push_back(std::to_string(irreducible[n]));
        }
        row.push_back("true");
        r.table.push_back(row);
    }
    return r;
}

ModuleDescriptor built_descriptor(const json& config, const std::string& kind) {
    if (kind == "interseries") {
        return descriptor_from_json(run_interseries(config).result["descriptor"]);
    }
    if (kind == "induced") {
        return descriptor_from_json(run_induce(config).result["descriptor"]);
    }
    if (kind == "verma") {
        return descriptor_from_json(run_verma(config).result["descriptor"]);
    }
    throw ParseError("classify.build must be interseries, induced or verma");
}

RunResult run_classify(const json& config) {
    const json& args = section(config, "classify");
    const ModuleDescriptor d = args.contains("descriptor")
                                   ? descriptor_from_json(args["descriptor"])
                                   : built_descriptor(config, args.value("build", std::string()));
    ClassifyOptions options;
    options.direction_bound = int_field(args, "direction_bound", options.direction_bound);
    const ClassificationReport report = classify(d, options);
    RunResult r;
    r.result = {{"case", to_string(report.module_case)},
                {"detected_b", report.detected_b ? to_json(*report.detected_b) : json(nullptr)},
                {"detected_g0_basis", g0_basis_json(report.detected_g0_basis)},
                {"certificates", report.certificates},
                {"rows", d.rows.size()}};
    r.stability = {{"windowed", true}, {"note", "verdicts are certified on the descriptor window only"}};
    return r;
}

std::string render_csv(const std::vector<std::vector<std::string>>& table) {
    std::ostringstream os;
    for (const auto& row : table) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << row[i];
        }
        os << "\n";
    }
    return os.str();
}

} // namespace

Session make_session(const json& config) {
    Group group = group_of(config);
    const json& bindings = section(config, "bindings");
    std::vector<Binding> values;
    for (const auto& name : kParameters) {
        values.push_back(bindings.contains(name) ? binding_of(bindings[name], name, group) : Binding::free());
    }
    return Session(std::move(group), values[0], values[1], values[2], values[3]);
}

Window make_window(const json& config) {
    const json& w = section(config, "window");
    Window window;
    window.level_cap = int_field(w, "L", window.level_cap);
    window.box_radius = int_field(w, "N", window.box_radius);
    window.top_radius = int_field(w, "top_radius", window.top_radius);
    window.validate();
    return window;
}

std::vector<std::string> validate(const json& config, const std::string& command) {
    std::vector<std::string> d;
    if (!config.is_object()) {
        return {"config must be a JSON object"};
    }
    if (!command.empty() && !kCommands.contains(command)) {
        d.push_back("unknown command '" + command + "'");
    }
    std::optional<Group> group;
    if (config.contains("group")) {
        const json& g = config["group"];
        if (!g.is_object()) {
            d.push_back("group must be an object");
        } else {
            if (g.contains("rank") && (!g["rank"].is_number_integer() || g["rank"].get<std::int64_t>() < 1)) {
                d.push_back("group.rank must be a positive integer");
            }
            if (g.contains("generators")) {
                const json& names = g["generators"];
                const auto rank = g.value("rank", static_cast<std::int64_t>(names.size()));
                if (!names.is_array()) {
                    d.push_back("group.generators must be a list of names");
                } else {
                    std::set<std::string> seen;
                    for (std::size_t i = 0; i < names.size(); ++i) {
                        const std::string n = names[i].is_string() ? names[i].get<std::string>() : "";
                        if (n.empty()) {
                            d.push_back("missing generator name at position " + std::to_string(i + 1));
                        } else if (kReserved.contains(n)) {
                            d.push_back("generator name '" + n + "' is reserved");
                        } else if (!seen.insert(n).second) {
                            d.push_back("duplicate generator name '" + n + "'");
                        }
                    }
                    if (static_cast<std::int64_t>(names.size()) < rank) {
                        d.push_back("missing generator name: rank " + std::to_string(rank) + " but " +
                                    std::to_string(names.size()) + " names");
                    } else if (static_cast<std::int64_t>(names.size()) > rank) {
                        d.push_back("more generator names than the rank");
                    }
                }
            }
        }
    }
    if (d.empty()) {
        check(d, [&] { group = group_of(config); });
    } else if (config["group"].is_object()) {
        // Keep checking the rest against default generator names.
        const json& g = config["group"];
        std::int64_t rank = g.contains("generators") && g["generators"].is_array()
                                ? static_cast<std::int64_t>(g["generators"].size())
                                : 0;
        if (g.contains("rank") && g["rank"].is_number_integer()) {
            rank = g["rank"].get<std::int64_t>();
        }
        if (rank >= 1) {
            group = Group::with_rank(static_cast<std::size_t>(rank));
        }
    }
    if (config.contains("bindings")) {
        if (!config["bindings"].is_object()) {
            d.push_back("bindings must be an object");
        } else {
            for (const auto& [name, value] : config["bindings"].items()) {
                if (std::find(kParameters.begin(), kParameters.end(), name) == kParameters.end()) {
                    d.push_back("unknown parameter '" + name + "' in bindings");
                } else if (group) {
                    check(d, [&] { binding_of(value, name, *group); });
                }
            }
        }
    }
    check(d, [&] { make_window(config); });
    check(d, [&] { rank_mode_of(config); });

    if (command == "induce") {
        if (section(config, "window").value("L", 1) == 0) {
            d.push_back("L=0 with induce: the window must reach level 1");
        }
        if (!config.contains("b")) {
            d.push_back("induce needs the splitting vector b");
        } else if (group) {
            try {
                const GroupElement b = element_of(config["b"], "b", group->rank());
                if (b.is_zero() || !b.is_primitive()) {
                    d.push_back("b not primitive: " + b.to_string());
                }
            } catch (const Error& e) {
                d.push_back(e.what());
            }
        }
    }
    if (command == "verma" && group && group->rank() != 1) {
        d.push_back("verma needs a rank-1 group");
    }
    if (command == "bracket" && group) {
        const json& args = section(config, "bracket");
        if (args.contains("a") || args.contains("b")) {
            check(d, [&] {
                const Session s = make_session(config);
                parse_algebra_element(args.at("a").get<std::string>(), s.group(), s.ring());
                parse_algebra_element(args.at("b").get<std::string>(), s.group(), s.ring());
            });
        } else if (!args.contains("x") || !args.contains("y")) {
            d.push_back("bracket needs x and y (or a and b)");
        } else {
            check(d, [&] {
                element_of(args["x"], "bracket.x", group->rank());
                element_of(args["y"], "bracket.y", group->rank());
            });
        }
    }
    if (command == "classify") {
        const json& args = section(config, "classify");
        if (args.contains("descriptor")) {
            check(d, [&] { descriptor_from_json(args["descriptor"]); });
        } else {
            const std::string build = args.value("build", std::string());
            if (build == "induced") {
                auto inner = validate(config, "induce");
                d.insert(d.end(), inner.begin(), inner.end());
            } else if (build == "verma") {
                auto inner = validate(config, "verma");
                d.insert(d.end(), inner.begin(), inner.end());
            } else if (build != "interseries") {
                d.push_back("classify needs a descriptor or build: interseries|induced|verma");
            }
        }
    }
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

json effective_config(json config, const Overrides& overrides) {
    if (!config.is_object()) {
        return config;
    }
    if (overrides.level_cap) {
        config["window"]["L"] = *overrides.level_cap;
    }
    if (overrides.box_radius) {
        config["window"]["N"] = *overrides.box_radius;
    }
    if (overrides.seed) {
        config["seed"] = *overrides.seed;
    }
    return config;
}

json descriptor_to_json(const ModuleDescriptor& d) {
    json rows = json::array();
    for (const auto& r : d.rows) {
        json row = {{"offset", r.offset}, {"coords", to_json(r.coords)}, {"dim", r.dim}};
        if (r.stable) {
            row["stable"] = *r.stable;
        }
        rows.push_back(row);
    }
    return {{"group", {{"rank", d.group.rank()}, {"generators", d.group.generator_names()}}},
            {"flags",
             {{"is_Z", d.flags.is_Z},
              {"rank1_not_Z", d.flags.rank1_not_Z},
              {"infinitely_generated_rank1", d.flags.infinitely_generated_rank1}}},
            {"provenance", to_string(d.provenance)},
            {"rows", rows}};
}

ModuleDescriptor descriptor_from_json(const json& j) {
    if (!j.is_object()) {
        throw ParseError("descriptor must be an object");
    }
    ModuleDescriptor d;
    d.group = group_of(j);
    const json& flags = section(j, "flags");
    d.flags.is_Z = flags.value("is_Z", false);
    d.flags.rank1_not_Z = flags.value("rank1_not_Z", false);
    d.flags.infinitely_generated_rank1 = flags.value("infinitely_generated_rank1", false);
    d.provenance = parse_provenance(j.value("provenance", std::string("external")));
    if (!j.contains("rows") || !j["rows"].is_array()) {
        throw ParseError("descriptor needs a rows list");
    }
    for (const auto& row : j["rows"]) {
        DescriptorRow r;
        if (row.is_array()) {
            if (row.size() < 3) {
                throw ParseError("descriptor rows are [offset, coords, dim]");
            }
            r.offset = row[0].get<std::string>();
            r.coords = element_of(row[1], "row coords", d.group.rank());
            r.dim = row[2].get<std::int64_t>();
            if (row.size() > 3) {
                r.stable = row[3].get<bool>();
            }
        } else {
            r.offset = row.value("offset", std::string("0"));
            r.coords = element_of(row.at("coords"), "row coords", d.group.rank());
            r.dim = row.at("dim").get<std::int64_t>();
            if (row.contains("stable")) {
                r.stable = row["stable"].get<bool>();
            }
        }
        d.rows.push_back(std::move(r));
    }
    if (d.rows.empty()) {
        throw DomainError("descriptor window is empty");
    }
    d.validate();
    return d;
}

RunResult run(const std::string& command, const json& config) {
    if (command == "bracket") {
        return run_bracket(config);
    }
    if (command == "interseries") {
        return run_interseries(config);
    }
    if (command == "induce") {
        return run_induce(config);
    }
    if (command == "verma") {
        return run_verma(config);
    }
    if (command == "classify") {
        return run_classify(config);
    }
    throw ParseError("unknown command '" + command + "'");
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations with generalized Virasoro algebras and their modules", "virg"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string format = "json";
    std::optional<int> level_cap;
    std::optional<int> box_radius;
    std::optional<std::uint64_t> seed;
    std::string bracket_x;
    std::string bracket_y;
    std::string validate_for;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--out", out_dir, "output directory (default: $VIRG_OUT_DIR, else stdout)");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--window-L", level_cap, "level cap L");
        sub->add_option("--window-N", box_radius, "box radius N");
        sub->add_option("--seed", seed, "seed for generic evaluation points");
    };
    for (const auto& name : kCommands) {
        static const std::map<std::string, std::string> summaries{
            {"bracket", "bracket two basis elements or two algebra elements"},
            {"classify", "classify a module descriptor or a freshly built module"},
            {"induce", "weight-space dims of an induced module quotient"},
            {"interseries", "reducibility and actions of an intermediate-series module"},
            {"verma", "Verma dims, singular vectors and quotient dims"}};
        auto* sub = app.add_subcommand(name, summaries.at(name));
        add_common(sub);
        if (name == "bracket") {
            sub->add_option("--x", bracket_x, "first index, e.g. [1,0]");
            sub->add_option("--y", bracket_y, "second index, e.g. [0,1]");
        }
    }
    auto* validate_cmd = app.add_subcommand("validate", "check a config and list every problem");
    add_common(validate_cmd);
    validate_cmd->add_option("--for", validate_for, "command the config is meant for");

    std::ostringstream cli_out;
    std::ostringstream cli_err;
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, cli_out, cli_err);
        out << cli_out.str();
        err << cli_err.str();
        return code == 0 ? ExitCode::ok : ExitCode::usage;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    json config = json::object();
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            err << "error: cannot read config " << config_path << "\n";
            return ExitCode::validation;
        }
        try {
            config = json::parse(in);
        } catch (const json::parse_error& e) {
            err << "error: config is not valid JSON: " << e.what() << "\n";
            return ExitCode::validation;
        }
    }
    config = effective_config(std::move(config), Overrides{level_cap, box_radius, seed});
    if (!bracket_x.empty() || !bracket_y.empty()) {
        config["bracket"]["x"] = bracket_x;
        config["bracket"]["y"] = bracket_y;
    }

    if (command == "validate") {
        const std::string target = validate_for.empty() ? config.value("command", std::string()) : validate_for;
        const auto diagnostics = validate(config, target);
        json report = {{"schema_version", kSchemaVersion},
                       {"command", "validate"},
                       {"target", target},
                       {"valid", diagnostics.empty()},
                       {"diagnostics", diagnostics}};
        out << report.dump(2) << "\n";
        return diagnostics.empty() ? ExitCode::ok : ExitCode::validation;
    }

    const auto diagnostics = validate(config, command);
    if (!diagnostics.empty()) {
        for (const auto& d : diagnostics) {
            err << "invalid config: " << d << "\n";
        }
        return ExitCode::validation;
    }
    if (format == "csv" && (command == "bracket" || command == "classify")) {
        err << "error: csv output is only available for dimension tables (interseries, induce, verma)\n";
        return ExitCode::usage;
    }

    RunResult result;
    const auto start = std::chrono::steady_clock::now();
    try {
        result = run(command, config);
    } catch (const WindowEscape& e) {
        err << "error: " << e.what() << "\nhint: increase N (--window-N)\n";
        return ExitCode::computation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::computation;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::string payload;
    if (format == "csv") {
        payload = render_csv(result.table);
    } else {
        json report = {{"schema_version", kSchemaVersion},
                       {"command", command},
                       {"config", config},
                       {"result", result.result},
                       {"stability", result.stability},
                       {"timing_ms", static_cast<std::int64_t>(ms)}};
        payload = report.dump(2) + "\n";
    }

    if (out_dir.empty()) {
        if (const char* env = std::getenv("VIRG_OUT_DIR")) {
            out_dir = env;
        }
    }
    if (out_dir.empty()) {
        out << payload;
        return ExitCode::ok;
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    const auto path = std::filesystem::path(out_dir) / (command + (format == "csv" ? ".csv" : ".json"));
    std::ofstream file(path);
    if (!file) {
        err << "error: cannot write " << path.string() << "\n";
        return ExitCode::computation;
    }
    file << payload;
    out << "wrote " << path.string() << "\n";
    return ExitCode::ok;
}

} // namespace virg::cli
