#include "weylkit/report.hpp"

namespace weylkit {

namespace {

std::string scalar_json_text(const nlohmann::json& v) {
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

} // namespace

std::string Report::to_text() const {
    std::string out = "verb: " + verb + "\n";
    out += "outcome: " + outcome + "\n";
    if (bound)
        out += "bound: " + std::to_string(*bound) + "\n";
    for (const auto& [key, value] : payload.items())
        out += key + ": " + scalar_json_text(value) + "\n";
    return out;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["verb"] = verb;
    j["outcome"] = outcome;
    j["payload"] = payload;
    if (bound)
        j["bound"] = *bound;
    else
        j["bound"] = nullptr;
    j["millis"] = millis;
    return j;
}

} // namespace weylkit
