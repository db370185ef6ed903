#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "graded.hpp"

namespace superpoisson {

/// Every matrix with entries from `grid`, in lexicographic row-major order,
/// projected onto its homogeneous component of the given parity (entries of
/// the wrong parity are set to zero). Distinct matrices may project to the
/// same map; all |grid|^(rows·cols) of them are returned.
inline std::vector<LinearMap> grid_maps(const GradedSpace& domain, const GradedSpace& codomain, Parity parity,
                                        const std::vector<Scalar>& grid) {
    const std::size_t rows = codomain.dim(), cols = domain.dim(), cells = rows * cols;
    if (grid.empty())
        throw Error("grid is empty");
    std::vector<LinearMap> out;
    std::vector<std::size_t> digit(cells, 0);
    while (true) {
        Matrix m(rows, cols);
        for (std::size_t c = 0; c < cells; ++c) {
            const std::size_t i = c / cols, j = c % cols;
            if (codomain.parity(i) == domain.parity(j) + parity)
                m(i, j) = grid[digit[c]];
        }
        out.emplace_back(domain, codomain, parity, std::move(m));
        std::size_t pos = cells;
        while (pos > 0 && ++digit[pos - 1] == grid.size())
            digit[--pos] = 0;
        if (pos == 0)
            break;
    }
    return out;
}

/// Random tensor of the given parity with σ(r) = -(-1)^{|r|} r: entries on
/// and above the diagonal are drawn uniformly from {lo..hi}, the rest follow
/// from the symmetry, and diagonal entries the symmetry forces to vanish
/// stay zero.
inline TensorElement random_graded_skew_tensor(const GradedSpace& s, Parity parity, std::mt19937_64& rng,
                                               int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix m(s.dim(), s.dim());
    const int rs = -parity_sign(parity);
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i; j < s.dim(); ++j) {
            if (s.parity(i) + s.parity(j) != parity)
                continue;
            const int mirror = rs * koszul_sign(s.parity(i), s.parity(j));
            if (i == j && mirror != 1)
                continue;
            const Scalar c = dist(rng);
            m(i, j) = c;
            m(j, i) = mirror * c;
        }
    return {s, parity, std::move(m)};
}

} // namespace superpoisson
