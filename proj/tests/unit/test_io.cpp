#include <doctest.h>

#include <sstream>

#include "nhlc/builders.hpp"
#include "nhlc/errors.hpp"
#include "nhlc/io.hpp"

using namespace nhlc;

namespace {

Json a4_doc()
{
    return algebra_to_json(build_simple_nlie(3));
}

}  // namespace

TEST_CASE("builtin algebras round-trip through the file format")
{
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const ColorAlgebra a = builtin_example(name);
        const std::string text = save_algebra(a);
        std::istringstream in(text);
        const ColorAlgebra back = load_algebra(in);
        CHECK(back == a);
        CHECK(save_algebra(back) == text);
    }
}

TEST_CASE("file layout")
{
    const Json doc = a4_doc();
    std::vector<std::string> keys;
    for (const auto& [key, value] : doc.items())
        keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"name", "arity", "group", "bicharacter", "basis", "alpha", "brackets"});
    CHECK(doc["brackets"][0]["args"] == Json::array({0, 1, 2}));
    CHECK(doc["brackets"][0]["value"] == Json{{"3", "1"}});
    const Json heis = algebra_to_json(build_super_heis());
    CHECK(heis["bicharacter"] == Json::array({Json::array({"-1"})}));
    CHECK(heis["basis"][0]["degree"] == Json::array({1}));
}

TEST_CASE("rationals are read exactly")
{
    Json doc = a4_doc();
    doc["brackets"][0]["value"]["3"] = "4/2";
    const ColorAlgebra a = algebra_from_json(doc);
    CHECK(a.bracket_basis({0, 1, 2})[3] == 2);
    doc["brackets"][0]["value"]["3"] = 0.5;
    CHECK_THROWS_AS(algebra_from_json(doc), ParseError);
}

TEST_CASE("malformed files are rejected")
{
    Json doc = a4_doc();
    doc["brackets"][0]["args"] = Json::array({2, 1, 3});
    CHECK_THROWS_WITH_AS(algebra_from_json(doc), doctest::Contains("not non-decreasing"), ParseError);

    doc = a4_doc();
    doc["basis"][1]["name"] = "e1";
    CHECK_THROWS_WITH_AS(algebra_from_json(doc), doctest::Contains("duplicate name"), ParseError);

    doc = a4_doc();
    doc["brackets"].push_back(doc["brackets"][0]);
    CHECK_THROWS_AS(algebra_from_json(doc), ParseError);

    doc = a4_doc();
    doc["brackets"][0]["value"] = Json{{"9", "1"}};
    CHECK_THROWS_AS(algebra_from_json(doc), ParseError);

    doc = a4_doc();
    doc.erase("alpha");
    CHECK_THROWS_AS(algebra_from_json(doc), ParseError);

    std::istringstream garbage("{ not json");
    CHECK_THROWS_AS(load_algebra(garbage), ParseError);
    CHECK_THROWS_AS(load_algebra(std::string("/nonexistent/file.json")), InputError);
}

TEST_CASE("torsion-incompatible bicharacter fails validation")
{
    Json doc = algebra_to_json(build_super_heis());
    doc["bicharacter"] = Json::array({Json::array({"2"})});
    try {
        algebra_from_json(doc);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        bool torsion = false;
        for (const auto& v : e.report().violations)
            torsion = torsion || v.check == "bicharacter.torsion_compatibility";
        CHECK(torsion);
    }
}

TEST_CASE("axiom failures carry the report")
{
    Json doc = a4_doc();
    doc["brackets"][0]["value"] = Json{{"3", "1"}, {"0", "1"}};
    CHECK_THROWS_AS(algebra_from_json(doc), ValidationError);
    CHECK_NOTHROW(parse_algebra_json(doc));
}

TEST_CASE("map files")
{
    const ColorAlgebra h = build_super_heis();
    HomMap d{h.group().element({1}), Matrix(3, 3)};
    d.matrix(0, 2) = Scalar(1, 3);
    const HomMap back = map_from_json(map_to_json(d), h);
    CHECK(back.degree == d.degree);
    CHECK(back.matrix == d.matrix);
    CHECK(map_to_json(d)["matrix"][0][2] == "1/3");
}

TEST_CASE("report schema")
{
    ValidationReport r;
    r.add("c", "w", "e", "a");
    const Json rep = make_report("verify", "A4", Json{{"k_max", 1}}, Json{{"x", 1}}, r);
    std::vector<std::string> keys;
    for (const auto& [key, value] : rep.items())
        keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"command", "algebra", "parameters", "results", "violations"});
    CHECK(rep["violations"][0] == Json{{"check", "c"}, {"witness", "w"}, {"expected", "e"}, {"actual", "a"}});
}
