#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "weylkit/algebra_map.hpp"
#include "weylkit/poly1.hpp"

namespace weylkit {

// X -> aX + bY, Y -> cX + dY with ad - bc = 1.
struct LinearLetter {
    Scalar a, b, c, d;
};

// X -> X + p(Y), Y -> Y.
struct TriangularLetter {
    Poly1 p;
};

// The exchange involution alpha as a word letter.
struct FlipLetter {};

struct Letter {
    std::variant<LinearLetter, TriangularLetter, FlipLetter> payload;
    bool inverted = false;
};

// Element of the group generated by automorphisms and anti-automorphisms,
// written as a sequence of generators with formal inverses.
struct GeneratorWord {
    std::vector<Letter> letters;
};

Letter linear_letter(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                     bool inverted = false);
Letter triangular_letter(Poly1 p, bool inverted = false);
Letter flip_letter();
Letter phi_letter(bool inverted = false);

Letter letter_invert(Letter l);
AlgebraMap letter_to_map(const Letter& l);

// Composition letters[0] o letters[1] o ... ; the empty word is the identity.
AlgebraMap word_to_map(const GeneratorWord& w);

// Reverses the sequence and inverts each letter.
GeneratorWord word_invert(const GeneratorWord& w);

// word_to_map(invert(w)) o inv o word_to_map(w), revalidated.
Involution conjugate_involution(const Involution& inv, const GeneratorWord& w);

std::string letter_to_string(const Letter& l);
std::string word_to_string(const GeneratorWord& w);

// Finite letter alphabet for bounded word searches. Triangular entries are
// monomials c*t^d over the coefficient pool; every letter except flip is
// enumerated in both plain and inverted form.
struct SearchPool {
    std::vector<LinearLetter> linears;
    std::vector<Poly1> triangular_polys;
    bool include_flip = true;

    static std::vector<Scalar> default_coefficients();
    static SearchPool default_pool(int pool_degree = 3,
                                   std::vector<Scalar> coefficients = default_coefficients());

    // Canonical enumeration order: linears, then triangulars, then flip;
    // each letter plain before inverted.
    std::vector<Letter> letters() const;
};

// Enumerates words by length, then lexicographically over the pool's letter
// order; stops when visit returns true. Returns whether a visit stopped it.
bool for_each_word(const SearchPool& pool, int max_length,
                   const std::function<bool(const GeneratorWord&)>& visit);

} // namespace weylkit
