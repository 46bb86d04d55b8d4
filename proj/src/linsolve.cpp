#include "weylkit/linsolve.hpp"

#include <utility>

namespace weylkit {

SolveResult solve_exact(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();

    std::vector<std::size_t> pivot_row(cols, static_cast<std::size_t>(-1));
    std::size_t rank = 0;

    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && a[sel][col].is_zero())
            ++sel;
        if (sel == rows)
            continue;
        std::swap(a[sel], a[rank]);
        std::swap(b[sel], b[rank]);

        Scalar inv = a[rank][col].inverse();
        for (std::size_t j = col; j < cols; ++j)
            a[rank][j] *= inv;
        b[rank] *= inv;

        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero())
                continue;
            Scalar factor = a[r][col];
            for (std::size_t j = col; j < cols; ++j)
                a[r][j] -= factor * a[rank][j];
            b[r] -= factor * b[rank];
        }
        pivot_row[col] = rank;
        ++rank;
    }

    for (std::size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero())
            return {SolveStatus::inconsistent, {}};

    for (std::size_t col = 0; col < cols; ++col)
        if (pivot_row[col] == static_cast<std::size_t>(-1))
            return {SolveStatus::underdetermined, {}};

    std::vector<Scalar> x(cols, Scalar(0));
    for (std::size_t col = 0; col < cols; ++col)
        x[col] = b[pivot_row[col]];
    return {SolveStatus::unique, std::move(x)};
}

} // namespace weylkit
