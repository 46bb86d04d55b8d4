#pragma once

// Independent normal-ordering oracle: repeatedly rewrite one YX into XY + 1
// on words over {X,Y}. Never calls WeylPoly multiplication or the closed
// reorder formula, so it can referee both.

#include <map>
#include <string>

#include "weylkit/weyl_poly.hpp"

namespace weylkit::testing {

inline WeylPoly oracle_normal_order_word(const std::string& word, const Scalar& coeff) {
    std::map<std::string, Scalar> pending{{word, coeff}};
    WeylPoly result;

    while (!pending.empty()) {
        auto it = pending.begin();
        std::string w = it->first;
        Scalar c = it->second;
        pending.erase(it);
        if (c.is_zero())
            continue;

        std::size_t pos = w.find("YX");
        if (pos == std::string::npos) {
            int xs = 0, ys = 0;
            for (char ch : w)
                (ch == 'X' ? xs : ys)++;
            result += WeylPoly::monomial(xs, ys, c);
            continue;
        }

        std::string swapped = w;
        swapped[pos] = 'X';
        swapped[pos + 1] = 'Y';
        std::string dropped = w.substr(0, pos) + w.substr(pos + 2);

        pending[swapped] += c;
        pending[dropped] += c;
    }
    return result;
}

inline WeylPoly oracle_reorder(int m, int n) {
    return oracle_normal_order_word(std::string(static_cast<std::size_t>(m), 'Y') +
                                        std::string(static_cast<std::size_t>(n), 'X'),
                                    Scalar(1));
}

inline WeylPoly oracle_mul(const WeylPoly& u, const WeylPoly& v) {
    WeylPoly out;
    for (const auto& [eu, cu] : u.terms()) {
        for (const auto& [ev, cv] : v.terms()) {
            std::string word = std::string(static_cast<std::size_t>(eu.x), 'X') +
                               std::string(static_cast<std::size_t>(eu.y), 'Y') +
                               std::string(static_cast<std::size_t>(ev.x), 'X') +
                               std::string(static_cast<std::size_t>(ev.y), 'Y');
            out += oracle_normal_order_word(word, cu * cv);
        }
    }
    return out;
}

} // namespace weylkit::testing
