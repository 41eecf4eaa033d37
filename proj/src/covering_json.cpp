#include "puncture/covering_json.hpp"

namespace puncture {

namespace {

nlohmann::json rationals_to_json(const std::vector<Rational>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : v) arr.push_back(r.str());
    return arr;
}

std::vector<Rational> rationals_from_json(const nlohmann::json& arr, const char* field) {
    if (!arr.is_array()) throw ParseError(std::string("covering JSON: '") + field + "' must be an array");
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_string())
            throw ParseError(std::string("covering JSON: entries of '") + field + "' must be strings");
        out.push_back(Rational::from_string(item.get<std::string>()));
    }
    return out;
}

} // namespace

nlohmann::json covering_to_json(const CoveringData& cov) {
    nlohmann::json j;
    j["level_N"] = cov.level_N;
    j["scale_k"] = cov.scale_k.str();
    j["c"] = rationals_to_json(cov.c);
    j["b"] = rationals_to_json(cov.b);
    j["l"] = rationals_to_json(cov.l);
    j["order"] = cov.order;
    return j;
}

CoveringData covering_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("covering JSON: top level must be an object");
    for (const char* field : {"level_N", "scale_k", "c", "b", "l", "order"})
        if (!j.contains(field))
            throw ParseError(std::string("covering JSON: missing field '") + field + "'");
    if (!j["level_N"].is_number_integer() || !j["order"].is_number_integer())
        throw ParseError("covering JSON: 'level_N' and 'order' must be integers");
    if (!j["scale_k"].is_string()) throw ParseError("covering JSON: 'scale_k' must be a string");

    CoveringData cov;
    cov.level_N = j["level_N"].get<int>();
    cov.scale_k = Rational::from_string(j["scale_k"].get<std::string>());
    cov.c = rationals_from_json(j["c"], "c");
    cov.b = rationals_from_json(j["b"], "b");
    cov.l = rationals_from_json(j["l"], "l");
    cov.order = j["order"].get<int>();
    cov.validate();
    return cov;
}

std::string covering_to_json_string(const CoveringData& cov) {
    return covering_to_json(cov).dump(2);
}

CoveringData covering_from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("covering JSON: malformed document");
    return covering_from_json(j);
}

} // namespace puncture
