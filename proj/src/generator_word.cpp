#include "weylkit/generator_word.hpp"

#include <algorithm>

namespace weylkit {

Letter linear_letter(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                     bool inverted) {
    if (a * d - b * c != Scalar(1))
        throw ConstraintViolated("linear letter needs ad - bc = 1");
    return Letter{LinearLetter{a, b, c, d}, inverted};
}

Letter triangular_letter(Poly1 p, bool inverted) {
    return Letter{TriangularLetter{std::move(p)}, inverted};
}

Letter flip_letter() { return Letter{FlipLetter{}, false}; }

Letter phi_letter(bool inverted) {
    return linear_letter(Scalar::rational(1, 2), Scalar::rational(1, 2), Scalar(-1), Scalar(1),
                         inverted);
}

Letter letter_invert(Letter l) {
    if (std::holds_alternative<FlipLetter>(l.payload))
        return l; // alpha is self-inverse
    l.inverted = !l.inverted;
    return l;
}

AlgebraMap letter_to_map(const Letter& l) {
    const WeylPoly x = WeylPoly::gen_x();
    const WeylPoly y = WeylPoly::gen_y();

    if (const auto* lin = std::get_if<LinearLetter>(&l.payload)) {
        Scalar a = lin->a, b = lin->b, c = lin->c, d = lin->d;
        if (l.inverted) {
            // ad - bc = 1, so the inverse matrix is (d, -b; -c, a).
            Scalar na = d, nb = -b, nc = -c, nd = a;
            a = na; b = nb; c = nc; d = nd;
        }
        return AlgebraMap{x * a + y * b, x * c + y * d, MapKind::homo};
    }
    if (const auto* tri = std::get_if<TriangularLetter>(&l.payload)) {
        Poly1 p = l.inverted ? -tri->p : tri->p;
        return AlgebraMap{x + p.eval_in(y), y, MapKind::homo};
    }
    return exchange_involution();
}

AlgebraMap word_to_map(const GeneratorWord& w) {
    AlgebraMap acc = identity_map();
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        acc = compose(letter_to_map(*it), acc);
    return acc;
}

GeneratorWord word_invert(const GeneratorWord& w) {
    GeneratorWord out;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(letter_invert(*it));
    return out;
}

Involution conjugate_involution(const Involution& inv, const GeneratorWord& w) {
    AlgebraMap fwd = word_to_map(w);
    AlgebraMap back = word_to_map(word_invert(w));
    return Involution(compose(compose(back, inv.map()), fwd));
}

std::string letter_to_string(const Letter& l) {
    std::string out = l.inverted ? "~" : "";
    if (const auto* lin = std::get_if<LinearLetter>(&l.payload)) {
        out += "lin:" + lin->a.to_string() + "," + lin->b.to_string() + "," +
               lin->c.to_string() + "," + lin->d.to_string();
    } else if (const auto* tri = std::get_if<TriangularLetter>(&l.payload)) {
        out += "tri:" + tri->p.to_string("Y");
    } else {
        out += "flip";
    }
    return out;
}

std::string word_to_string(const GeneratorWord& w) {
    if (w.letters.empty())
        return "id";
    std::string out;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        if (k)
            out += ";";
        out += letter_to_string(w.letters[k]);
    }
    return out;
}

std::vector<Scalar> SearchPool::default_coefficients() {
    return {Scalar(-1), Scalar::rational(-1, 2), Scalar::rational(1, 2), Scalar(1)};
}

SearchPool SearchPool::default_pool(int pool_degree, std::vector<Scalar> coefficients) {
    SearchPool pool;
    const Letter phi = phi_letter();
    pool.linears.push_back(std::get<LinearLetter>(phi.payload));
    for (int d = 0; d <= pool_degree; ++d)
        for (const Scalar& c : coefficients)
            pool.triangular_polys.push_back(Poly1::monomial(d, c));
    pool.include_flip = true;
    return pool;
}

std::vector<Letter> SearchPool::letters() const {
    std::vector<Letter> out;
    for (const auto& lin : linears) {
        out.push_back(Letter{lin, false});
        out.push_back(Letter{lin, true});
    }
    for (const auto& p : triangular_polys) {
        out.push_back(Letter{TriangularLetter{p}, false});
        out.push_back(Letter{TriangularLetter{p}, true});
    }
    if (include_flip)
        out.push_back(flip_letter());
    return out;
}

bool for_each_word(const SearchPool& pool, int max_length,
                   const std::function<bool(const GeneratorWord&)>& visit) {
    std::vector<Letter> alphabet = pool.letters();

    GeneratorWord word;
    if (visit(word))
        return true;
    if (alphabet.empty())
        return false;

    for (int len = 1; len <= max_length; ++len) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
        while (true) {
            word.letters.clear();
            for (std::size_t i : idx)
                word.letters.push_back(alphabet[i]);
            if (visit(word))
                return true;

            // advance the odometer, most significant digit first
            int pos = len - 1;
            while (pos >= 0) {
                auto& digit = idx[static_cast<std::size_t>(pos)];
                if (++digit < alphabet.size())
                    break;
                digit = 0;
                --pos;
            }
            if (pos < 0)
                break;
        }
    }
    return false;
}

} // namespace weylkit
