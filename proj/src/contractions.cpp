#include "ufact/contractions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace ufact {

void VerificationReport::add(std::string name, double value, double tolerance) {
    checks.push_back({std::move(name), value, tolerance, value <= tolerance});
}

bool VerificationReport::passed() const {
    for (const ResidualCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string to_string(const VerificationReport& report) {
    std::string out;
    for (const ResidualCheck& c : report.checks) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-14s %-5s residual %.3e (tol %.3e)\n",
                      c.name.c_str(), c.pass ? "pass" : "FAIL", c.value, c.tolerance);
        out += line;
    }
    return out;
}

namespace {

constexpr double kNormSlack = 1e-12;

double largest_singular_value(const ComplexMatrix& m) {
    // sqrt of the top eigenvalue of the smaller Gram matrix
    const ComplexMatrix gram = m.rows() >= m.cols() ? matmul(adjoint(m), m)
                                                    : matmul(m, adjoint(m));
    const EigenDecomposition eig = hermitian_eig(gram, 1e-10 * std::max(1.0, frobenius_norm(gram)));
    return std::sqrt(std::max(eig.eigenvalues.front(), 0.0));
}

// sqrt(I - G) with eigenvalues clamped at zero; never throws
ComplexMatrix clamped_defect(const ComplexMatrix& gram) {
    const std::size_t n = gram.rows();
    const ComplexMatrix diff = ComplexMatrix::identity(n) - gram;
    const EigenDecomposition eig = hermitian_eig(diff, 1e-8 * std::max(1.0, frobenius_norm(diff)));
    ComplexMatrix s(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double root = std::sqrt(std::max(eig.eigenvalues[j], 0.0));
        const ComplexMatrix vj = column(eig.eigenvectors, j);
        s = s + Complex(root, 0.0) * outer(vj, vj);
    }
    return s;
}

}  // namespace

Contraction::Contraction(ComplexMatrix m) : matrix_(std::move(m)) {
    operator_norm_ = largest_singular_value(matrix_);
    if (operator_norm_ > 1.0 + kNormSlack)
        throw std::invalid_argument("Contraction: operator norm " +
                                    std::to_string(operator_norm_) + " exceeds 1");
}

DefectOperators defect_operators(const Contraction& t) {
    const ComplexMatrix& m = t.matrix();
    const std::size_t n = m.rows();
    const std::size_t k = m.cols();
    // the contraction bound leaves eigenvalues of I - T*T above ~ -2e-12
    const double tol = 1e-11 * static_cast<double>(std::max(n, k));
    DefectOperators d;
    d.d_t = psd_sqrt(ComplexMatrix::identity(k) - matmul(adjoint(m), m), tol);
    d.d_t_star = psd_sqrt(ComplexMatrix::identity(n) - matmul(m, adjoint(m)), tol);
    return d;
}

std::pair<double, double> intertwining_residual(const Contraction& t) {
    const DefectOperators d = defect_operators(t);
    const ComplexMatrix& m = t.matrix();
    const double first = frobenius_norm(matmul(m, d.d_t) - matmul(d.d_t_star, m));
    const double second =
        frobenius_norm(matmul(adjoint(m), d.d_t_star) - matmul(d.d_t, adjoint(m)));
    return {first, second};
}

VerificationReport verify_main_theorem(const ComplexMatrix& c, double tol) {
    const std::size_t n = c.rows();
    const std::size_t k = c.cols();
    VerificationReport report;

    report.add("isometry", unitarity_residual(c), tol);

    const ComplexMatrix gram = matmul(c, adjoint(c));  // C C*, n x n
    const ComplexMatrix defect = clamped_defect(gram);
    const ComplexMatrix complement = ComplexMatrix::identity(n) - defect;

    report.add("kernel", frobenius_norm(matmul(defect, c)), tol);
    report.add("eigenvector", frobenius_norm(matmul(complement, c) - c), tol);
    report.add("outer-product", frobenius_norm(complement - gram), tol);

    const EigenDecomposition eig =
        hermitian_eig(defect, 1e-8 * std::max(1.0, frobenius_norm(defect)));
    std::size_t ones = 0;
    double worst = 0.0;
    for (double lam : eig.eigenvalues) {
        if (lam > 0.5) ++ones;
        worst = std::max(worst, std::min(std::abs(lam), std::abs(lam - 1.0)));
    }
    const double count_mismatch =
        ones >= n - k ? static_cast<double>(ones - (n - k)) : static_cast<double>((n - k) - ones);
    report.add("defect-rank", std::max(count_mismatch, worst), tol);
    return report;
}

}  // namespace ufact
