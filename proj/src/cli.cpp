#include "nhlc/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nhlc/builders.hpp"
#include "nhlc/delta.hpp"
#include "nhlc/errors.hpp"
#include "nhlc/io.hpp"
#include "nhlc/oracle.hpp"
#include "nhlc/spaces.hpp"
#include "nhlc/triple.hpp"

namespace nhlc {

namespace {

/// What a subcommand produced; rendered as a report in either output mode.
struct Outcome {
    std::string algebra;
    Json parameters = Json::object();
    Json results = Json::object();
    ValidationReport report;
};

Json subspace_to_json(const Subspace& s)
{
    Json basis = Json::array();
    for (const auto& v : s.basis())
        basis.push_back(vector_to_json(v));
    return {{"dim", s.dim()}, {"basis", std::move(basis)}};
}

std::string scalar_text(const Json& j)
{
    return j.is_string() ? j.get<std::string>() : j.dump();
}

bool is_scalar_array(const Json& j)
{
    if (!j.is_array())
        return false;
    for (const auto& e : j)
        if (e.is_structured())
            return false;
    return true;
}

bool is_matrix(const Json& j)
{
    if (!j.is_array() || j.empty())
        return false;
    for (const auto& row : j)
        if (!is_scalar_array(row) || row.empty())
            return false;
    return true;
}

bool is_flat_object(const Json& j)
{
    if (!j.is_object())
        return false;
    for (const auto& [key, value] : j.items())
        if (value.is_structured() && !is_scalar_array(value))
            return false;
    return true;
}

std::string inline_text(const Json& j)
{
    if (!j.is_array())
        return scalar_text(j);
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i)
        s += (i ? "," : "") + scalar_text(j[i]);
    return s + ")";
}

/// Column-aligned table for an array of flat objects sharing the first row's keys.
void render_table(const Json& rows, std::ostream& out, const std::string& pad)
{
    std::vector<std::string> keys;
    for (const auto& [key, value] : rows[0].items())
        keys.push_back(key);
    std::vector<std::size_t> width(keys.size());
    for (std::size_t c = 0; c < keys.size(); ++c) {
        width[c] = keys[c].size();
        for (const auto& row : rows)
            if (row.contains(keys[c]))
                width[c] = std::max(width[c], inline_text(row[keys[c]]).size());
    }
    auto line = [&](const std::function<std::string(std::size_t)>& cell) {
        out << pad;
        for (std::size_t c = 0; c < keys.size(); ++c)
            out << std::left << std::setw(static_cast<int>(width[c]) + 2) << cell(c);
        out << '\n';
    };
    line([&](std::size_t c) { return keys[c]; });
    for (const auto& row : rows)
        line([&](std::size_t c) { return row.contains(keys[c]) ? inline_text(row[keys[c]]) : std::string("-"); });
}

void render_matrix(const Json& rows, std::ostream& out, const std::string& pad)
{
    for (const auto& row : rows) {
        out << pad << "[";
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? " " : "") << std::right << std::setw(4) << scalar_text(row[i]);
        out << " ]\n";
    }
}

void render(const Json& j, std::ostream& out, const std::string& pad)
{
    for (const auto& [key, value] : j.items()) {
        if (!value.is_structured() || is_scalar_array(value)) {
            if (value.is_array() && value.empty())
                out << pad << key << (key == "degree" ? ": ()\n" : ": none\n");
            else if (value.is_array() && value[0].is_string() && key == "notices")
                for (const auto& n : value)
                    out << pad << "notice: " << n.get<std::string>() << '\n';
            else
                out << pad << key << ": " << inline_text(value) << '\n';
        } else if (is_matrix(value)) {
            out << pad << key << ":\n";
            render_matrix(value, out, pad + "  ");
        } else if (value.is_array() && !value.empty() && is_flat_object(value[0])) {
            out << pad << key << ":\n";
            render_table(value, out, pad + "  ");
        } else if (value.is_array()) {
            out << pad << key << ":\n";
            for (std::size_t i = 0; i < value.size(); ++i) {
                out << pad << "  #" << i + 1 << '\n';
                if (value[i].is_object())
                    render(value[i], out, pad + "    ");
                else if (is_matrix(value[i]))
                    render_matrix(value[i], out, pad + "    ");
                else
                    out << pad << "    " << value[i].dump() << '\n';
            }
        } else {
            out << pad << key << ":\n";
            render(value, out, pad + "  ");
        }
    }
}

void render_human(const std::string& command, const Outcome& o, std::ostream& out)
{
    out << "nhlc " << command;
    if (!o.algebra.empty())
        out << ": " << o.algebra;
    out << '\n';
    if (!o.parameters.empty()) {
        out << "parameters:";
        for (const auto& [key, value] : o.parameters.items())
            out << ' ' << key << '=' << inline_text(value);
        out << '\n';
    }
    render(o.results, out, "");
    if (o.report.ok()) {
        out << "violations: none\n";
    } else {
        out << "violations: " << o.report.violations.size() << '\n';
        for (const auto& v : o.report.violations)
            out << "  " << v.check << " at " << v.witness << ": expected " << v.expected << ", got " << v.actual
                << '\n';
    }
}

Vector parse_vector(const std::string& text, std::size_t dim)
{
    Vector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        v.push_back(parse_scalar(item));
    if (v.size() != dim)
        throw InputError("vector \"" + text + "\" needs " + std::to_string(dim) + " entries");
    return v;
}

SpaceKind space_kind(const std::string& name)
{
    if (name == "der")
        return SpaceKind::der;
    if (name == "dder")
        return SpaceKind::dder;
    if (name == "inner")
        return SpaceKind::inner;
    throw InputError("unknown space kind " + name);
}

// ---------------------------------------------------------------------------

Outcome cmd_validate(const std::string& path)
{
    const ColorAlgebra a = parse_algebra_json(read_json(path));
    Outcome o;
    o.algebra = a.name();
    o.parameters["file"] = path;
    o.report = validate_algebra(a);
    o.results = {{"dim", a.dim()}, {"arity", a.arity()}, {"valid", o.report.ok()}};
    return o;
}

Outcome cmd_spaces(const std::string& path, const std::string& kind_name, int k)
{
    const ColorAlgebra a = load_algebra(path);
    const SpaceKind kind = space_kind(kind_name);
    Outcome o;
    o.algebra = a.name();
    o.parameters = {{"file", path}, {"kind", kind_name}, {"k", k}};
    const auto space = collect_spaces(kind, a, k, k);
    Json table = Json::array();
    for (const auto& block : space.blocks)
        table.push_back({{"k", block.k}, {"degree", degree_to_json(block.degree)}, {"dim", block.basis.size()}});
    o.results["dim"] = space.dim();
    o.results["dimensions"] = std::move(table);
    o.results["space"] = space_to_json(space);
    return o;
}

Outcome cmd_center(const std::string& path)
{
    const ColorAlgebra a = load_algebra(path);
    Outcome o;
    o.algebra = a.name();
    o.parameters["file"] = path;
    const Subspace derived = derived_subalgebra(a);
    o.results["perfect"] = derived.dim() == a.dim();
    o.results["derived_dim"] = derived.dim();
    o.results["center"] = subspace_to_json(center(a));
    return o;
}

Outcome cmd_centralizer(const std::string& path, const std::vector<std::string>& vectors, bool inn_in_dder,
                        int k_max)
{
    const ColorAlgebra a = load_algebra(path);
    Outcome o;
    o.algebra = a.name();
    o.parameters["file"] = path;
    if (inn_in_dder) {
        o.parameters["k_max"] = k_max;
        const auto space = centralizer_inn_in_dder(a, k_max);
        o.results["dim"] = space.dim();
        o.results["space"] = space_to_json(space);
        return o;
    }
    if (vectors.empty())
        throw InputError("centralizer needs --vector or --inn-in-dder");
    std::vector<Vector> spanning;
    Json vs = Json::array();
    for (const auto& text : vectors) {
        spanning.push_back(parse_vector(text, a.dim()));
        vs.push_back(vector_to_json(spanning.back()));
    }
    o.parameters["vectors"] = std::move(vs);
    o.results["centralizer"] = subspace_to_json(centralizer(a, spanning));
    return o;
}

Outcome cmd_check(const std::string& path, const std::string& map_path, int k, const std::string& type,
                  bool ordered)
{
    const ColorAlgebra a = load_algebra(path);
    const HomMap d = map_from_json(read_json(map_path), a);
    Outcome o;
    o.algebra = a.name();
    o.parameters = {{"file", path}, {"map", map_path}, {"k", k}, {"type", type}};
    const TupleOrder order = ordered ? TupleOrder::ordered : TupleOrder::nondecreasing;
    OracleVerdict verdict;
    if (type == "der")
        verdict = is_derivation(a, d, k, order);
    else if (type == "dder")
        verdict = is_double_derivation(a, d, k, order);
    else if (type == "tder")
        verdict = is_triple_derivation(a, d, k);
    else
        throw InputError("unknown map type " + type);
    o.results["passes"] = verdict.ok;
    if (!verdict)
        o.report.add("oracle." + type, verdict.witness, "identity holds", "identity fails");
    return o;
}

Outcome cmd_delta(const std::string& path, const std::string& map_path, int k)
{
    const ColorAlgebra a = load_algebra(path);
    const HomMap d = map_from_json(read_json(map_path), a);
    Outcome o;
    o.algebra = a.name();
    o.parameters = {{"file", path}, {"map", map_path}, {"k", k}};
    const DeltaEngine engine(a);
    const HomMap delta = engine.delta(d, k);
    o.results["delta"] = map_to_json(delta);
    o.results["is_derivation"] = static_cast<bool>(is_derivation(a, delta, k));
    o.results["equals_input"] = delta.matrix == d.matrix;
    o.report = verify_well_defined(engine, d, k);
    return o;
}

Json tder_rows(const TderComparison& cmp)
{
    Json rows = Json::array();
    for (const auto& r : cmp.rows)
        rows.push_back({{"k", r.k},
                        {"der", r.der_dim},
                        {"tder", r.tder_dim},
                        {"der_contained", r.der_contained},
                        {"equal", r.equal}});
    return rows;
}

/// TDer = Der is expected for map algebras of a centerless perfect algebra.
bool centerless_perfect(const ColorAlgebra& a)
{
    return is_perfect(a) && center(a).dim() == 0;
}

TderComparison compare_tder(const ColorAlgebra& a, const std::string& source, int k_max)
{
    if (source == "self")
        return verify_tder_equals_der(a, k_max, false);
    const SpaceKind kind = space_kind(source);
    const auto space = collect_spaces(kind, a, 0, k_max);
    if (space.dim() == 0)
        throw HypothesisError(source + " space of " + a.name() + " is zero");
    const MapAlgebra a2 = maps_as_color_algebra(space, a, (kind == SpaceKind::inner ? "INN_" : "DER_") + a.name());
    return verify_tder_equals_der(a2.algebra, k_max, centerless_perfect(a));
}

Outcome cmd_tder(const std::string& path, const std::string& source, int k_max)
{
    const ColorAlgebra a = load_algebra(path);
    Outcome o;
    o.algebra = a.name();
    o.parameters = {{"file", path}, {"source", source}, {"k_max", k_max}};
    if (source != "self" && source != "inner" && source != "der")
        throw InputError("unknown tder source " + source);
    const auto cmp = compare_tder(a, source, k_max);
    o.results["in_hypothesis"] = cmp.in_hypothesis;
    o.results["dimensions"] = tder_rows(cmp);
    o.results["notices"] = cmp.notices;
    o.report = cmp.report;
    return o;
}

struct VerifyGroups {
    bool closure = false;
    bool ideal = false;
    bool delta = false;
    bool centralizer = false;
    bool triple = false;
};

/// One named verifier run; hypothesis failures become skips with a notice.
class VerifyRun {
public:
    explicit VerifyRun(Outcome& o) : o_(o) { o_.results["checks"] = Json::array(); }

    void skip(const std::string& name, const std::string& reason)
    {
        row(name, "skipped", 0);
        notices_.push_back(name + " skipped: " + reason);
    }

    void run(const std::string& name, const std::function<ValidationReport()>& body)
    {
        try {
            const ValidationReport r = body();
            row(name, r.ok() ? "passed" : "failed", r.violations.size());
            o_.report.merge(r);
        } catch (const HypothesisError& e) {
            skip(name, e.what());
        } catch (const ArityError& e) {
            skip(name, e.what());
        } catch (const TruncationError& e) {
            skip(name, e.what());
        } catch (const ValidationError& e) {
            skip(name, std::string(e.what()) + " (" + std::to_string(e.report().violations.size()) + " violations)");
        }
    }

    void add_notice(std::string n) { notices_.push_back(std::move(n)); }
    void finish() { o_.results["notices"] = notices_; }

private:
    void row(const std::string& name, const std::string& status, std::size_t violations)
    {
        o_.results["checks"].push_back({{"check", name}, {"status", status}, {"violations", violations}});
    }

    Outcome& o_;
    std::vector<std::string> notices_;
};

Outcome cmd_verify(const std::string& path, VerifyGroups groups, int k_max)
{
    const ColorAlgebra a = parse_algebra_json(read_json(path));
    Outcome o;
    o.algebra = a.name();
    o.parameters = {{"file", path},
                    {"k_max", k_max},
                    {"closure", groups.closure},
                    {"ideal", groups.ideal},
                    {"delta", groups.delta},
                    {"centralizer", groups.centralizer},
                    {"triple", groups.triple}};
    VerifyRun run(o);
    const ValidationReport axioms = validate_algebra(a);
    run.run("axioms", [&] { return axioms; });
    if (!axioms.ok()) {
        run.add_notice("remaining checks skipped: the algebra fails its axioms");
        run.finish();
        return o;
    }
    if (groups.closure)
        run.run("dder_closure", [&] { return verify_closure_theorem(a, k_max); });
    if (groups.ideal)
        run.run("inn_ideal", [&] {
            if (a.arity() < 3)
                throw ArityError("double derivations need arity at least 3");
            return verify_inn_ideal(a, k_max);
        });
    if (groups.delta) {
        run.run("delta_well_defined", [&] { return verify_well_defined_all(a, k_max); });
        run.run("delta_correction", [&] { return verify_delta_correction(a, k_max); });
        run.run("delta_derivations", [&] { return verify_delta_on_derivations(a, k_max); });
        run.run("delta_homomorphism", [&] { return verify_delta_homomorphism(a, k_max); });
    }
    if (groups.centralizer)
        run.run("inn_centralizer", [&] {
            if (a.arity() < 3)
                throw ArityError("double derivations need arity at least 3");
            ValidationReport r;
            for (const auto& block : centralizer_inn_in_dder(a, k_max).blocks)
                if (!block.basis.empty())
                    r.add("inn_centralizer.zero", "k=" + std::to_string(block.k) + " degree " + format_degree(block.degree),
                          "0", "dim " + std::to_string(block.basis.size()));
            return r;
        });
    if (groups.triple) {
        auto tder_check = [&](const std::string& name, const std::string& source) {
            run.run(name, [&] {
                const auto cmp = compare_tder(a, source, k_max);
                for (const auto& n : cmp.notices)
                    run.add_notice(n);
                o.results[name + "_dimensions"] = tder_rows(cmp);
                return cmp.report;
            });
        };
        if (a.arity() == 2) {
            tder_check("tder_self", "self");
        } else {
            run.run("tder_invariance", [&] { return verify_tder_invariance(a, k_max); });
            tder_check("tder_inner", "inner");
            tder_check("tder_der", "der");
        }
    }
    run.finish();
    return o;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Derivation spaces of n-ary Hom-Lie color algebras over Q", "nhlc"};
    app.require_subcommand(1);
    bool json = false;
    std::string file;
    int k = 0;
    int k_max = 2;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "algebra file, - for standard input")->required();
        sub->add_flag("--json", json, "machine-readable report");
    };

    auto* validate = app.add_subcommand("validate", "check the algebra axioms");
    add_common(validate);

    auto* example = app.add_subcommand("example", "emit a builtin algebra file");
    std::string example_name;
    example->add_option("name", example_name, "builtin name")
        ->required()
        ->check(CLI::IsMember(builtin_names()));

    auto* spaces = app.add_subcommand("spaces", "derivation space dimensions and bases");
    add_common(spaces);
    std::string kind = "der";
    spaces->add_option("--kind", kind, "der, dder or inner")->check(CLI::IsMember({"der", "dder", "inner"}));
    spaces->add_option("--k", k, "alpha power");

    auto* center_cmd = app.add_subcommand("center", "center and derived subalgebra");
    add_common(center_cmd);

    auto* centralizer_cmd = app.add_subcommand("centralizer", "centralizer of vectors, or of Inn in DDer");
    add_common(centralizer_cmd);
    std::vector<std::string> vectors;
    bool inn_in_dder = false;
    centralizer_cmd->add_option("--vector", vectors, "comma-separated coordinates; repeatable");
    centralizer_cmd->add_flag("--inn-in-dder", inn_in_dder, "centralizer of the inner derivations");
    centralizer_cmd->add_option("--k-max", k_max, "largest alpha power");

    auto* check = app.add_subcommand("check", "run a pointwise oracle on a map file");
    add_common(check);
    std::string map_path;
    std::string type = "der";
    bool ordered = false;
    check->add_option("--map", map_path, "map file")->required();
    check->add_option("--k", k, "alpha power");
    check->add_option("--type", type, "der, dder or tder")->check(CLI::IsMember({"der", "dder", "tder"}));
    check->add_flag("--ordered", ordered, "test every ordered tuple");

    auto* delta = app.add_subcommand("delta", "the derivation attached to a double derivation");
    add_common(delta);
    delta->add_option("--map", map_path, "map file")->required();
    delta->add_option("--k", k, "alpha power");

    auto* tder = app.add_subcommand("tder", "triple derivations against derivations");
    add_common(tder);
    std::string source = "der";
    tder->add_option("--source", source, "inner, der, or self for an arity-2 file")
        ->check(CLI::IsMember({"inner", "der", "self"}));
    tder->add_option("--k-max", k_max, "largest alpha power");

    auto* verify = app.add_subcommand("verify", "run the structural verifiers");
    add_common(verify);
    bool all = false;
    VerifyGroups groups;
    verify->add_flag("--all", all, "every verifier except the triple group");
    verify->add_flag("--closure", groups.closure, "closure of double derivations");
    verify->add_flag("--ideal", groups.ideal, "inner derivations form an ideal");
    verify->add_flag("--delta", groups.delta, "delta map checks");
    verify->add_flag("--centralizer", groups.centralizer, "centralizer of Inn is zero");
    verify->add_flag("--triple", groups.triple, "triple derivation checks");
    verify->add_option("--k-max", k_max, "largest alpha power");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (k < 0 || k_max < 0) {
        err << "nhlc: --k and --k-max must be non-negative\n";
        return 2;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    Outcome o;
    try {
        if (command == "example") {
            out << save_algebra(builtin_example(example_name));
            return 0;
        }
        if (command == "validate")
            o = cmd_validate(file);
        else if (command == "spaces")
            o = cmd_spaces(file, kind, k);
        else if (command == "center")
            o = cmd_center(file);
        else if (command == "centralizer")
            o = cmd_centralizer(file, vectors, inn_in_dder, k_max);
        else if (command == "check")
            o = cmd_check(file, map_path, k, type, ordered);
        else if (command == "delta")
            o = cmd_delta(file, map_path, k);
        else if (command == "tder")
            o = cmd_tder(file, source, k_max);
        else {
            if (all)
                groups.closure = groups.ideal = groups.delta = groups.centralizer = true;
            o = cmd_verify(file, groups, k_max);
        }
    } catch (const Error& e) {
        ValidationReport report;
        if (const auto* v = dynamic_cast<const ValidationError*>(&e))
            report = v->report();
        if (json) {
            out << make_report(command, "", Json::object(), {{"error", e.what()}}, report).dump(2) << '\n';
        } else {
            err << "nhlc " << command << ": " << e.what() << '\n';
            for (const auto& v : report.violations)
                err << "  " << v.check << " at " << v.witness << ": expected " << v.expected << ", got " << v.actual
                    << '\n';
        }
        return 1;
    }
    if (json)
        out << make_report(command, o.algebra, o.parameters, o.results, o.report).dump(2) << '\n';
    else
        render_human(command, o, out);
    return o.report.ok() ? 0 : 1;
}

}  // namespace nhlc
