#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace weylkit {

// Machine-readable outcome of one command. Exit codes: 0 definite,
// 1 error, 2 inconclusive (a bounded search exhausted its budget).
// Every inconclusive outcome carries its bound; no result is ever
// reported as a refutation.
struct Report {
    std::string verb;
    std::string outcome;
    nlohmann::json payload = nlohmann::json::object();
    std::optional<int> bound;
    long long millis = 0;
    int exit_code = 0;

    // Deterministic rendering (no timing): verb, outcome, bound, then the
    // payload entries in key order.
    std::string to_text() const;

    // {verb, outcome, payload, bound, millis} with bound null when absent.
    nlohmann::json to_json() const;
};

} // namespace weylkit
