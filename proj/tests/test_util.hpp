#pragma once

#include <cmath>
#include <cstddef>

#include "ufact/linalg.hpp"
#include "ufact/random.hpp"

namespace testutil {

inline double max_abs_diff(const ufact::ComplexMatrix& a, const ufact::ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

inline ufact::ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, ufact::Rng& rng) {
    ufact::ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = ufact::Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return m;
}

inline ufact::ComplexMatrix random_hermitian(std::size_t n, ufact::Rng& rng) {
    const ufact::ComplexMatrix m = random_matrix(n, n, rng);
    ufact::ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

// distance on the phase circle [0, 2*pi)
inline double circular_distance(double a, double b) {
    const double two_pi = 2.0 * std::acos(-1.0);
    double d = std::fmod(std::abs(a - b), two_pi);
    return std::min(d, two_pi - d);
}

}  // namespace testutil
