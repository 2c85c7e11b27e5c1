#include "nhlc/io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "nhlc/errors.hpp"

namespace nhlc {

namespace {

Json scalar_json(const Scalar& s) { return format_scalar(s); }

Scalar scalar_from(const Json& j, const std::string& where)
{
    if (!j.is_string())
        throw ParseError(where + ": rational must be a \"p/q\" string");
    return parse_scalar(j.get<std::string>());
}

const Json& field(const Json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(where + ": missing key \"" + key + "\"");
    return obj.at(key);
}

long long integer_from(const Json& j, const std::string& where)
{
    if (!j.is_number_integer())
        throw ParseError(where + ": integer expected");
    return j.get<long long>();
}

std::size_t index_from(const Json& j, std::size_t bound, const std::string& where)
{
    const long long v = integer_from(j, where);
    if (v < 0 || static_cast<std::size_t>(v) >= bound)
        throw ParseError(where + ": index " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
}

std::vector<std::vector<Scalar>> square_from(const Json& j, std::size_t n, const std::string& where)
{
    if (!j.is_array() || j.size() != n)
        throw ParseError(where + ": expected " + std::to_string(n) + " rows");
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < n; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || row.size() != n)
            throw ParseError(where + ": row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
        std::vector<Scalar> values;
        for (const auto& entry : row)
            values.push_back(scalar_from(entry, where));
        rows.push_back(std::move(values));
    }
    return rows;
}

}  // namespace

Json matrix_to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(vector_to_json(m.row(r)));
    return rows;
}

Json vector_to_json(const Vector& v)
{
    Json out = Json::array();
    for (const auto& s : v)
        out.push_back(scalar_json(s));
    return out;
}

Json degree_to_json(const GroupElement& g)
{
    return Json(g.exponents());
}

Json algebra_to_json(const ColorAlgebra& a)
{
    Json doc;
    doc["name"] = a.name();
    doc["arity"] = a.arity();
    doc["group"] = {{"free_rank", a.group().free_rank()}, {"torsion", a.group().torsion()}};
    Json table = Json::array();
    for (const auto& row : a.bicharacter().table()) {
        Json r = Json::array();
        for (const auto& s : row)
            r.push_back(scalar_json(s));
        table.push_back(std::move(r));
    }
    doc["bicharacter"] = std::move(table);
    Json basis = Json::array();
    for (const auto& b : a.basis())
        basis.push_back({{"name", b.name}, {"degree", degree_to_json(b.degree)}});
    doc["basis"] = std::move(basis);
    doc["alpha"] = matrix_to_json(a.alpha());
    Json brackets = Json::array();
    for (const auto& [tuple, value] : a.constants()) {
        Json v = Json::object();
        for (std::size_t i = 0; i < value.size(); ++i)
            if (value[i] != 0)
                v[std::to_string(i)] = scalar_json(value[i]);
        brackets.push_back({{"args", tuple}, {"value", std::move(v)}});
    }
    doc["brackets"] = std::move(brackets);
    return doc;
}

ColorAlgebra parse_algebra_json(const Json& doc)
{
    if (!doc.is_object())
        throw ParseError("algebra file: top level must be an object");
    const Json& name = field(doc, "name", "algebra file");
    if (!name.is_string())
        throw ParseError("name: string expected");
    const long long arity = integer_from(field(doc, "arity", "algebra file"), "arity");
    if (arity < 2)
        throw ArityError("arity must be at least 2");

    const Json& group_doc = field(doc, "group", "algebra file");
    const long long free_rank = integer_from(field(group_doc, "free_rank", "group"), "group.free_rank");
    const Json& torsion_doc = field(group_doc, "torsion", "group");
    if (free_rank < 0 || !torsion_doc.is_array())
        throw ParseError("group: free_rank must be >= 0 and torsion an array");
    std::vector<long long> torsion;
    for (const auto& t : torsion_doc) {
        const long long m = integer_from(t, "group.torsion");
        if (m < 2)
            throw ParseError("group.torsion: orders must be at least 2");
        torsion.push_back(m);
    }
    const GradingGroup group(static_cast<int>(free_rank), torsion);
    const std::size_t gens = group.generator_count();
    const Bicharacter eps(group, square_from(field(doc, "bicharacter", "algebra file"), gens, "bicharacter"));

    const Json& basis_doc = field(doc, "basis", "algebra file");
    if (!basis_doc.is_array() || basis_doc.empty())
        throw ParseError("basis: non-empty array expected");
    std::vector<BasisElement> basis;
    std::set<std::string> names;
    for (const auto& b : basis_doc) {
        const Json& bn = field(b, "name", "basis");
        if (!bn.is_string())
            throw ParseError("basis.name: string expected");
        const std::string element_name = bn.get<std::string>();
        if (!names.insert(element_name).second)
            throw ParseError("basis: duplicate name \"" + element_name + "\"");
        const Json& deg = field(b, "degree", "basis");
        if (!deg.is_array() || deg.size() != gens)
            throw ParseError("basis." + element_name + ": degree must have " + std::to_string(gens) + " entries");
        std::vector<long long> coords;
        for (const auto& c : deg)
            coords.push_back(integer_from(c, "basis.degree"));
        basis.push_back({element_name, group.element(coords)});
    }
    const std::size_t m = basis.size();
    const auto alpha_rows = square_from(field(doc, "alpha", "algebra file"), m, "alpha");
    const Matrix alpha = Matrix::from_rows(alpha_rows, m);

    const Json& brackets_doc = field(doc, "brackets", "algebra file");
    if (!brackets_doc.is_array())
        throw ParseError("brackets: array expected");
    std::map<Tuple, Vector> constants;
    for (const auto& entry : brackets_doc) {
        const Json& args = field(entry, "args", "brackets");
        if (!args.is_array() || args.size() != static_cast<std::size_t>(arity))
            throw ParseError("brackets.args: expected " + std::to_string(arity) + " indices");
        Tuple t;
        for (const auto& i : args)
            t.push_back(index_from(i, m, "brackets.args"));
        for (std::size_t i = 1; i < t.size(); ++i)
            if (t[i] < t[i - 1])
                throw ParseError("brackets.args " + args.dump() + ": tuple not non-decreasing");
        if (constants.contains(t))
            throw ParseError("brackets.args " + args.dump() + ": duplicate entry");
        const Json& value = field(entry, "value", "brackets");
        if (!value.is_object())
            throw ParseError("brackets.value: object expected");
        Vector v = zero_vector(m);
        for (const auto& [key, coeff] : value.items()) {
            std::size_t pos = 0;
            long long idx = -1;
            try {
                idx = std::stoll(key, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != key.size() || idx < 0 || static_cast<std::size_t>(idx) >= m)
                throw ParseError("brackets.value: bad basis index \"" + key + "\"");
            v[static_cast<std::size_t>(idx)] = scalar_from(coeff, "brackets.value");
        }
        constants.emplace(std::move(t), std::move(v));
    }

    return ColorAlgebra(name.get<std::string>(), static_cast<std::size_t>(arity), eps, std::move(basis), alpha,
                        std::move(constants));
}

ColorAlgebra algebra_from_json(const Json& doc)
{
    ColorAlgebra a = parse_algebra_json(doc);
    auto report = validate_algebra(a);
    if (!report.ok())
        throw ValidationError("algebra " + a.name() + " fails validation", std::move(report));
    return a;
}

std::string save_algebra(const ColorAlgebra& a)
{
    return algebra_to_json(a).dump(2) + "\n";
}

void save_algebra(const ColorAlgebra& a, std::ostream& out)
{
    out << save_algebra(a);
}

Json read_json(std::istream& in)
{
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json(const std::string& path)
{
    if (path == "-")
        return read_json(std::cin);
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return read_json(in);
}

ColorAlgebra load_algebra(std::istream& in)
{
    return algebra_from_json(read_json(in));
}

ColorAlgebra load_algebra(const std::string& path)
{
    return algebra_from_json(read_json(path));
}

Json map_to_json(const HomMap& d)
{
    return {{"degree", degree_to_json(d.degree)}, {"matrix", matrix_to_json(d.matrix)}};
}

HomMap map_from_json(const Json& doc, const ColorAlgebra& a)
{
    const Json& deg = field(doc, "degree", "map file");
    if (!deg.is_array() || deg.size() != a.group().generator_count())
        throw ParseError("map file: degree must have " + std::to_string(a.group().generator_count()) + " entries");
    std::vector<long long> coords;
    for (const auto& c : deg)
        coords.push_back(integer_from(c, "map.degree"));
    const auto rows = square_from(field(doc, "matrix", "map file"), a.dim(), "map.matrix");
    return {a.group().element(coords), Matrix::from_rows(rows, a.dim())};
}

Json violations_to_json(const ValidationReport& report)
{
    Json out = Json::array();
    for (const auto& v : report.violations)
        out.push_back({{"check", v.check}, {"witness", v.witness}, {"expected", v.expected}, {"actual", v.actual}});
    return out;
}

Json space_to_json(const GradedMapSpace& space)
{
    Json blocks = Json::array();
    for (const auto& block : space.blocks) {
        Json basis = Json::array();
        for (const auto& map : block.basis)
            basis.push_back(matrix_to_json(map.matrix));
        blocks.push_back({{"k", block.k},
                          {"degree", degree_to_json(block.degree)},
                          {"dim", block.basis.size()},
                          {"basis", std::move(basis)}});
    }
    return {{"kind", to_string(space.kind)}, {"dim", space.dim()}, {"blocks", std::move(blocks)}};
}

Json make_report(const std::string& command, const std::string& algebra, Json parameters, Json results,
                 const ValidationReport& report)
{
    Json out;
    out["command"] = command;
    out["algebra"] = algebra;
    out["parameters"] = std::move(parameters);
    out["results"] = std::move(results);
    out["violations"] = violations_to_json(report);
    return out;
}

}  // namespace nhlc
