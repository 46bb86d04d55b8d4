#pragma once

namespace weylkit {

// Exponent pair of a monomial X^x Y^y (or x^x y^y in the commutative ring).
struct ExpPair {
    int x = 0;
    int y = 0;

    int total() const { return x + y; }

    bool operator==(const ExpPair& o) const { return x == o.x && y == o.y; }
    bool operator!=(const ExpPair& o) const { return !(*this == o); }
};

// Graded-lexicographic order: total degree first, then X-exponent.
// Term maps iterate ascending; canonical printing walks them in reverse.
struct GrlexLess {
    bool operator()(const ExpPair& a, const ExpPair& b) const {
        if (a.total() != b.total())
            return a.total() < b.total();
        return a.x < b.x;
    }
};

} // namespace weylkit
