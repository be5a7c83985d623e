#pragma once

// Hand-transcribed factor matrices for the 8-dimensional, four-block
// construction, kept independent of build_B/compose so the library can be
// checked against them entry by entry. The outer factors follow the printed
// band pattern; the two inner blocks are written out literally.

#include <cmath>
#include <vector>

#include "ufact/linalg.hpp"

namespace a84 {

using ufact::Complex;
using ufact::ComplexMatrix;

// m x m cascade band matrix: column 0 is the spherical cascade, column c has
// -sin t_{c-1} on the superdiagonal band and cos t_{c-1} tails below. Row 0
// carries head_sign, row j >= 1 carries e^{i ph[j-1]}.
inline ComplexMatrix band_factor(std::size_t m, const std::vector<double>& t,
                                 const std::vector<double>& ph, double head_sign) {
    ComplexMatrix b(m, m);
    auto rowphase = [&](std::size_t j) {
        return j == 0 ? Complex(head_sign, 0.0) : std::polar(1.0, ph[j - 1]);
    };
    for (std::size_t j = 0; j < m; ++j) {
        double sins = 1.0;
        for (std::size_t i = 0; i < j; ++i) sins *= std::sin(t[i]);
        b(j, 0) = rowphase(j) * sins * (j + 1 < m ? std::cos(t[j]) : 1.0);
    }
    for (std::size_t c = 1; c < m; ++c) {
        b(c - 1, c) = rowphase(c - 1) * (-std::sin(t[c - 1]));
        for (std::size_t j = c; j < m; ++j) {
            double sins = 1.0;
            for (std::size_t i = c; i < j; ++i) sins *= std::sin(t[i]);
            b(j, c) = rowphase(j) * std::cos(t[c - 1]) * sins *
                      (j + 1 < m ? std::cos(t[j]) : 1.0);
        }
    }
    return b;
}

// the printed 4x4 inner block, written out entry by entry
inline ComplexMatrix inner_block_4(const std::vector<double>& c, const std::vector<double>& g) {
    const double c1 = c[0], c2 = c[1], c3 = c[2];
    const Complex e1 = std::polar(1.0, g[0]);
    const Complex e2 = std::polar(1.0, g[1]);
    const Complex e3 = std::polar(1.0, g[2]);
    using std::cos;
    using std::sin;
    ComplexMatrix b(4, 4);
    b(0, 0) = -cos(c1);
    b(0, 1) = sin(c1);
    b(1, 0) = e1 * sin(c1) * cos(c2);
    b(1, 1) = e1 * cos(c1) * cos(c2);
    b(1, 2) = -e1 * sin(c2);
    b(2, 0) = e2 * sin(c1) * sin(c2) * cos(c3);
    b(2, 1) = e2 * cos(c1) * sin(c2) * cos(c3);
    b(2, 2) = e2 * cos(c2) * cos(c3);
    b(2, 3) = -e2 * sin(c3);
    b(3, 0) = e3 * sin(c1) * sin(c2) * sin(c3);
    b(3, 1) = e3 * cos(c1) * sin(c2) * sin(c3);
    b(3, 2) = e3 * cos(c2) * sin(c3);  // printed as sin c2 cos c3; that breaks unitarity
    b(3, 3) = e3 * cos(c3);
    return b;
}

// the printed 2x2 inner block
inline ComplexMatrix inner_block_2(double d1, double delta1) {
    const Complex e = std::polar(1.0, delta1);
    ComplexMatrix b(2, 2);
    b(0, 0) = -std::cos(d1);
    b(0, 1) = std::sin(d1);
    b(1, 0) = e * std::sin(d1);
    b(1, 1) = e * std::cos(d1);
    return b;
}

inline ComplexMatrix embed(const ComplexMatrix& b, std::size_t n, std::size_t offset) {
    ComplexMatrix out = ComplexMatrix::identity(n);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(offset + i, offset + j) = b(i, j);
    return out;
}

struct Params {
    std::vector<double> a, alpha;  // 7 + 7
    std::vector<double> b, beta;   // 5 + 5
    std::vector<double> c, gamma;  // 3 + 3
    double d1 = 0.0, delta1 = 0.0;
};

inline ComplexMatrix factor(const Params& p, std::size_t which) {
    switch (which) {
        case 0: return band_factor(8, p.a, p.alpha, 1.0);
        case 1: return embed(band_factor(6, p.b, p.beta, -1.0), 8, 1);
        case 2: return embed(inner_block_4(p.c, p.gamma), 8, 2);
        default: return embed(inner_block_2(p.d1, p.delta1), 8, 3);
    }
}

inline ComplexMatrix product(const Params& p) {
    ComplexMatrix m = factor(p, 0);
    for (std::size_t i = 1; i < 4; ++i) m = ufact::matmul(m, factor(p, i));
    return m;
}

}  // namespace a84
