#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weylkit/exp_pair.hpp"
#include "weylkit/scalar.hpp"

namespace weylkit::detail {

inline std::string monomial_text(const ExpPair& e, const std::string& var_x,
                                 const std::string& var_y) {
    std::string out;
    if (e.x > 0) {
        out += var_x;
        if (e.x > 1)
            out += "^" + std::to_string(e.x);
    }
    if (e.y > 0) {
        if (!out.empty())
            out += "*";
        out += var_y;
        if (e.y > 1)
            out += "^" + std::to_string(e.y);
    }
    return out;
}

// Canonical rendering of a term list already sorted for display
// (graded-lex descending). Mixed scalars keep their internal sign and get
// parenthesized next to a monomial; pure scalars contribute the joining sign.
inline std::string format_terms(const std::vector<std::pair<ExpPair, Scalar>>& terms,
                                const std::string& var_x, const std::string& var_y) {
    if (terms.empty())
        return "0";

    const bool alone = terms.size() == 1;
    std::string out;
    for (const auto& [exp, coeff] : terms) {
        int sign = coeff.is_mixed() ? 1 : coeff.leading_sign();
        Scalar mag = sign < 0 ? -coeff : coeff;
        std::string mon = monomial_text(exp, var_x, var_y);

        std::string body;
        if (mon.empty()) {
            body = (mag.is_mixed() && !alone) ? "(" + mag.to_string() + ")" : mag.to_string();
        } else if (mag.is_one()) {
            body = mon;
        } else if (mag.is_mixed()) {
            body = "(" + mag.to_string() + ")*" + mon;
        } else {
            body = mag.to_string() + "*" + mon;
        }

        if (out.empty())
            out = (sign < 0 ? "-" : "") + body;
        else
            out += (sign < 0 ? " - " : " + ") + body;
    }
    return out;
}

} // namespace weylkit::detail
