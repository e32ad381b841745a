#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "pellfrac/cli.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = pellfrac::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.find(needle) != std::string::npos) ++n;
    return n;
}

// --- minimal JSON Schema checker -------------------------------------------
// Supports the subset the shipped schema uses: $ref into definitions, oneOf,
// const, enum, type (single name), pattern, properties / required /
// additionalProperties:false, and items. Reports the failing path.

const json& resolve_ref(const json& root, const std::string& ref) {
    REQUIRE(ref.rfind("#/", 0) == 0);
    const json* node = &root;
    std::string rest = ref.substr(2);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        std::size_t slash = rest.find('/', pos);
        std::string key = rest.substr(pos, slash == std::string::npos ? slash : slash - pos);
        node = &node->at(key);
        if (slash == std::string::npos) break;
        pos = slash + 1;
    }
    return *node;
}

bool validate(const json& root, const json& schema, const json& node,
              const std::string& path, std::string& why);

bool type_matches(const std::string& type, const json& node) {
    if (type == "object") return node.is_object();
    if (type == "array") return node.is_array();
    if (type == "string") return node.is_string();
    if (type == "boolean") return node.is_boolean();
    if (type == "integer") return node.is_number_integer();
    if (type == "number") return node.is_number();
    if (type == "null") return node.is_null();
    return false;
}

bool validate(const json& root, const json& schema, const json& node,
              const std::string& path, std::string& why) {
    if (schema.contains("$ref"))
        return validate(root, resolve_ref(root, schema["$ref"].get<std::string>()),
                        node, path, why);

    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const json& branch : schema["oneOf"]) {
            std::string ignored;
            if (validate(root, branch, node, path, ignored)) ++hits;
        }
        if (hits != 1) {
            why = path + ": matched " + std::to_string(hits) + " oneOf branches";
            return false;
        }
        return true;
    }

    if (schema.contains("const") && node != schema["const"]) {
        why = path + ": const mismatch";
        return false;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const json& v : schema["enum"]) found = found || node == v;
        if (!found) {
            why = path + ": not in enum";
            return false;
        }
    }
    if (schema.contains("type") &&
        !type_matches(schema["type"].get<std::string>(), node)) {
        why = path + ": expected type " + schema["type"].get<std::string>();
        return false;
    }
    if (schema.contains("pattern") && node.is_string() &&
        !std::regex_match(node.get<std::string>(),
                          std::regex(schema["pattern"].get<std::string>()))) {
        why = path + ": pattern mismatch on '" + node.get<std::string>() + "'";
        return false;
    }

    if (node.is_object()) {
        const json props = schema.value("properties", json::object());
        if (schema.contains("required"))
            for (const json& key : schema["required"])
                if (!node.contains(key.get<std::string>())) {
                    why = path + ": missing required '" + key.get<std::string>() + "'";
                    return false;
                }
        bool closed = schema.contains("additionalProperties") &&
                      schema["additionalProperties"].is_boolean() &&
                      !schema["additionalProperties"].get<bool>();
        for (const auto& [key, value] : node.items()) {
            if (props.contains(key)) {
                if (!validate(root, props.at(key), value, path + "." + key, why))
                    return false;
            } else if (closed) {
                why = path + ": unexpected property '" + key + "'";
                return false;
            }
        }
    }
    if (node.is_array() && schema.contains("items")) {
        std::size_t i = 0;
        for (const json& item : node) {
            if (!validate(root, schema["items"], item,
                          path + "[" + std::to_string(i) + "]", why))
                return false;
            ++i;
        }
    }
    return true;
}

const json& schema_root() {
    static json schema = [] {
        std::ifstream in(PELLFRAC_SCHEMA_PATH);
        REQUIRE(in.good());
        return json::parse(in);
    }();
    return schema;
}

json parse_and_validate(const RunResult& r) {
    REQUIRE(r.code == 0);
    json payload = json::parse(r.out);
    std::string why;
    bool ok = validate(schema_root(), schema_root(), payload, "$", why);
    CAPTURE(why);
    REQUIRE(ok);
    return payload;
}

} // namespace

TEST_CASE("text mode golden lines") {
    RunResult expand = run_cli({"expand", "57"});
    CHECK(expand.code == 0);
    CHECK(expand.out == "[7; 1,1,4,1,1,14]\n");

    RunResult pell = run_cli({"pell", "22"});
    CHECK(pell.code == 0);
    CHECK(pell.out == "c=197 h=42\n");

    RunResult unit = run_cli({"unit", "282234512826670"});
    CHECK(unit.code == 0);
    CHECK(unit.out == "705593141 + 42*sqrt(D), norm +1\n");

    RunResult half = run_cli({"unit", "5"});
    CHECK(half.out == "(1 + 1*sqrt(D))/2, norm -1\n");
}

TEST_CASE("family verify prints one verdict per t and exits 0") {
    RunResult r = run_cli({"family", "verify", "F1", "22", "--t-max", "5"});
    CHECK(r.code == 0);
    CHECK(count_lines_with(r.out, "PASS") == 6);
    CHECK(count_lines_with(r.out, "FAIL") == 0);
    CHECK(r.out.find("6 pass, 0 fail") != std::string::npos);

    RunResult quiet = run_cli({"--quiet", "family", "verify", "F1", "22", "--t-max", "5"});
    CHECK(quiet.code == 0);
    CHECK(quiet.out == "checked 6 values of t: 6 pass, 0 fail\n");
}

TEST_CASE("error mapping to exit code 1") {
    RunResult square = run_cli({"expand", "16"});
    CHECK(square.code == 1);
    CHECK(square.out.empty());
    CHECK(square.err.find("perfect square") != std::string::npos);

    CHECK(run_cli({"unit", "7866"}).code == 1);
    CHECK(run_cli({"pell", "3", "--negative"}).code == 1);
    CHECK(run_cli({"unit", "from-family", "F1", "22", "1"}).code == 1);  // odd t
    CHECK(run_cli({"expand", "notanumber"}).code == 1);

    // usage errors
    CHECK(run_cli({"frobnicate", "5"}).code == 1);
    CHECK(run_cli({"expand"}).code == 1);
    CHECK(run_cli({"scan", "--poly", "1,2"}).code == 1);  // missing --range
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("json payloads validate against the shipped schema") {
    json expand = parse_and_validate(run_cli({"--json", "expand", "57"}));
    CHECK(expand["command"] == "expand");
    CHECK(expand["a0"] == "7");
    CHECK(expand["period"] == json::parse(R"(["1","1","4","1","1","14"])"));
    CHECK(expand["period_length"] == 6);
    CHECK(expand["f"].is_string());  // integers travel as decimal strings

    json pell = parse_and_validate(run_cli({"--json", "pell", "22"}));
    CHECK(pell["X"] == "197");
    CHECK(pell["Y"] == "42");
    CHECK(pell["sign"] == 1);

    json neg = parse_and_validate(run_cli({"pell", "2", "--negative", "--json"}));
    CHECK(neg["sign"] == -1);
    CHECK(neg["X"] == "1");

    json show = parse_and_validate(run_cli({"--json", "family", "show", "F1", "22"}));
    CHECK(show["covered"] == true);
    CHECK(show["f_poly"]["coeffs"] == json::parse(R"(["22","394","1764"])"));
    CHECK(show["pattern"]["periodic"].size() == 6);

    json uncovered = parse_and_validate(run_cli({"--json", "family", "show", "F2", "57"}));
    CHECK(uncovered["covered"] == false);
    CHECK_FALSE(uncovered.contains("pattern"));

    json verify = parse_and_validate(
        run_cli({"--json", "family", "verify", "F1", "22", "--t-max", "3"}));
    CHECK(verify["results"].size() == 4);
    CHECK(verify["pass_count"] == "4");
    CHECK(verify["results"][1]["f_t"] == "2180");

    json unit = parse_and_validate(run_cli({"--json", "unit", "5"}));
    CHECK(unit["denom"] == 2);
    CHECK(unit["norm"] == -1);

    json uff = parse_and_validate(
        run_cli({"--json", "unit", "from-family", "F4", "2", "1"}));
    CHECK(uff["D"] == "82");
    CHECK(uff["agrees"] == false);
    CHECK(uff["consistent"] == true);
    CHECK(uff["cf_unit"]["a"] == "9");

    json scan = parse_and_validate(
        run_cli({"--json", "scan", "--poly", "22,788,7056", "--range", "0:10"}));
    CHECK(scan["total"] == "11");
    CHECK(scan["squarefree_count"] == "8");
    CHECK(scan["largest_squarefree_t"] == "8");
    CHECK(scan["first_failures"][0]["t"] == "1");

    // a scan where nothing is squarefree exercises the null branch
    json barren = parse_and_validate(
        run_cli({"--json", "scan", "--poly", "4,4", "--range", "0:3"}));
    CHECK(barren["largest_squarefree_t"].is_null());
    CHECK(barren["squarefree_count"] == "0");

    json lemmas = parse_and_validate(run_cli({"--json", "lemmas", "57"}));
    CHECK(lemmas["all_pass"] == true);
    CHECK(lemmas["lines"].size() >= 10);
}

TEST_CASE("json and text report the same numbers") {
    RunResult text = run_cli({"pell", "57"});
    json payload = parse_and_validate(run_cli({"--json", "pell", "57"}));
    std::string expected = "c=" + payload["X"].get<std::string>() + " h=" +
                           payload["Y"].get<std::string>() + "\n";
    CHECK(text.out == expected);

    RunResult scan_text = run_cli({"--quiet", "scan", "--poly", "3,2,1", "--range", "0:50"});
    json scan_payload = parse_and_validate(
        run_cli({"--json", "scan", "--poly", "3,2,1", "--range", "0:50"}));
    std::string expected_scan = "squarefree: " +
                                scan_payload["squarefree_count"].get<std::string>() +
                                " / " + scan_payload["total"].get<std::string>() + "\n";
    CHECK(scan_text.out == expected_scan);
}

TEST_CASE("scan flags round-trip into the report") {
    json filtered = parse_and_validate(run_cli({"--json", "scan", "--poly", "3,2,1",
                                                "--range", "0:100", "--filter", "even",
                                                "--sieve-bound", "50", "--seed", "9"}));
    CHECK(filtered["filter"] == "even");
    CHECK(filtered["sieve_bound"] == "50");
    CHECK(filtered["seed"] == "9");
    CHECK(filtered["total"] == "51");

    CHECK(run_cli({"scan", "--poly", "3,2,1", "--range", "5:1"}).code == 1);
    CHECK(run_cli({"scan", "--poly", "", "--range", "0:5"}).code == 1);
    CHECK(run_cli({"scan", "--poly", "3,2,1", "--range", "0:5", "--filter", "prime"}).code == 1);
}
