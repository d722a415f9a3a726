#include "uniratio/json_io.hpp"

#include <fstream>
#include <sstream>

namespace uniratio {

namespace {

std::vector<long long> int_array(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw SpecError(std::string("missing integer array field '") + field + "'");
    std::vector<long long> out;
    for (const auto& v : j[field]) {
        if (!v.is_number_integer()) throw SpecError(std::string("non-integer entry in '") + field + "'");
        out.push_back(v.get<long long>());
    }
    return out;
}

long long int_field(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw SpecError(std::string("missing integer field '") + field + "'");
    return j[field].get<long long>();
}

}  // namespace

FamilySpec spec_from_json(const nlohmann::json& j) {
    return validate_spec(static_cast<int>(int_field(j, "k")), static_cast<int>(int_field(j, "l")),
                         int_array(j, "a"), int_array(j, "b"));
}

FamilyParams family_from_json(const nlohmann::json& j) {
    if (!j.contains("family") || !j["family"].is_string())
        throw SpecError("missing string field 'family'");
    FamilyParams params;
    params.name = j["family"].get<std::string>();
    if (params.name != "P" && params.name != "Q" && params.name != "R" && params.name != "S" &&
        params.name != "H" && params.name != "T")
        throw SpecError("unknown family '" + params.name + "'");
    if (j.contains("a")) params.a = static_cast<int>(int_field(j, "a"));
    if (j.contains("b")) params.b = static_cast<int>(int_field(j, "b"));
    if (j.contains("epsilon")) params.epsilon = static_cast<int>(int_field(j, "epsilon"));
    if (j.contains("m")) params.m = static_cast<int>(int_field(j, "m"));
    if ((params.name == "H" || params.name == "T") && params.m < 1)
        throw SpecError("family " + params.name + " requires field 'm'");
    if (params.name != "H" && params.name != "T" && (params.a < 1 || params.b < 1))
        throw SpecError("family " + params.name + " requires fields 'a' and 'b'");
    return params;
}

nlohmann::json result_to_json(const LimitRatioResult& result, std::optional<double> mahler) {
    nlohmann::json j;
    j["lc"] = result.lc;
    j["intervals"] = nlohmann::json::array();
    for (const auto& [a, b] : result.above.intervals) j["intervals"].push_back({a, b});
    j["crossings"] = result.crossings;
    j["method"] = result.method == RatioMethod::exact ? "exact" : "riemann";
    if (mahler) {
        j["mahler"] = *mahler;
    } else {
        j["mahler"] = nullptr;
    }
    return j;
}

nlohmann::json census_to_json(const RootCensus& census) {
    nlohmann::json j;
    j["degree"] = census.degree;
    j["inside"] = census.inside;
    j["on_circle"] = census.on_circle;
    j["outside"] = census.outside;
    j["method"] = census.method == CensusMethod::modulus ? "modulus" : "signchange";
    j["tolerance"] = census.tolerance;
    return j;
}

nlohmann::json load_json_argument(const std::string& text) {
    std::string body = text;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw SpecError("empty JSON argument");
    if (text[first] != '{') {
        std::ifstream in(text);
        if (!in) throw SpecError("cannot open input file '" + text + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }
    try {
        return nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError(std::string("JSON parse error: ") + e.what());
    }
}

}  // namespace uniratio
