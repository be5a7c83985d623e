#include "ufact/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace ufact {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

bool all_finite(const std::vector<Complex>& v) {
    for (const Complex& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {
    require(rows > 0 && cols > 0, "matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    require(rows > 0 && cols > 0, "matrix dimensions must be positive");
    require(data_.size() == rows * cols, "data length does not match rows*cols");
    require(all_finite(data_), "matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols() == b.rows(), "matmul: dimension mismatch (" +
                                      std::to_string(a.cols()) + " vs " +
                                      std::to_string(b.rows()) + ")");
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "operator+: shape mismatch");
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "operator-: shape mismatch");
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
    return r;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return Complex(s, 0.0) * a; }

Complex trace(const ComplexMatrix& a) {
    require(a.is_square(), "trace: matrix must be square");
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const Complex& z : a.data()) s += std::norm(z);
    return std::sqrt(s);
}

Complex determinant(ComplexMatrix a) {
    require(a.is_square(), "determinant: matrix must be square");
    const std::size_t n = a.rows();
    Complex det(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        // partial pivot
        std::size_t piv = i;
        double best = std::abs(a(i, i));
        for (std::size_t r = i + 1; r < n; ++r) {
            if (std::abs(a(r, i)) > best) {
                best = std::abs(a(r, i));
                piv = r;
            }
        }
        if (best == 0.0) return Complex(0.0, 0.0);
        if (piv != i) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(i, j), a(piv, j));
            det = -det;
        }
        det *= a(i, i);
        for (std::size_t r = i + 1; r < n; ++r) {
            const Complex f = a(r, i) / a(i, i);
            for (std::size_t j = i; j < n; ++j) a(r, j) -= f * a(i, j);
        }
    }
    return det;
}

double unitarity_residual(const ComplexMatrix& u) {
    return frobenius_norm(matmul(adjoint(u), u) - ComplexMatrix::identity(u.cols()));
}

double hermiticity_residual(const ComplexMatrix& h) {
    require(h.is_square(), "hermiticity_residual: matrix must be square");
    return frobenius_norm(h - adjoint(h));
}

double idempotence_residual(const ComplexMatrix& p) {
    require(p.is_square(), "idempotence_residual: matrix must be square");
    return frobenius_norm(matmul(p, p) - p);
}

ComplexMatrix block(const ComplexMatrix& a, std::size_t r0, std::size_t c0,
                    std::size_t rows, std::size_t cols) {
    require(r0 + rows <= a.rows() && c0 + cols <= a.cols(), "block: out of range");
    ComplexMatrix r(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r(i, j) = a(r0 + i, c0 + j);
    return r;
}

void set_block(ComplexMatrix& a, std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
    require(r0 + b.rows() <= a.rows() && c0 + b.cols() <= a.cols(), "set_block: out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) a(r0 + i, c0 + j) = b(i, j);
}

ComplexMatrix column(const ComplexMatrix& a, std::size_t j) {
    require(j < a.cols(), "column: index out of range");
    ComplexMatrix c(a.rows(), 1);
    for (std::size_t i = 0; i < a.rows(); ++i) c(i, 0) = a(i, j);
    return c;
}

ComplexMatrix outer(const ComplexMatrix& x, const ComplexMatrix& y) {
    require(x.cols() == 1 && y.cols() == 1, "outer: expects column vectors");
    ComplexMatrix r(x.rows(), y.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < y.rows(); ++j) r(i, j) = x(i, 0) * std::conj(y(j, 0));
    return r;
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Phase-normalize each eigenvector column: first component with magnitude
// above 1e-12 becomes real nonnegative.
void normalize_column_phases(ComplexMatrix& v) {
    for (std::size_t j = 0; j < v.cols(); ++j) {
        for (std::size_t i = 0; i < v.rows(); ++i) {
            const double m = std::abs(v(i, j));
            if (m > 1e-12) {
                const Complex ph = std::conj(v(i, j)) / m;
                for (std::size_t r = 0; r < v.rows(); ++r) v(r, j) *= ph;
                break;
            }
        }
    }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& h, double tol) {
    require(h.is_square(), "hermitian_eig: matrix must be square");
    const std::size_t n = h.rows();
    const double herm = hermiticity_residual(h);
    if (herm > tol)
        throw std::invalid_argument(
            "hermitian_eig: input not Hermitian within tolerance (residual " +
            std::to_string(herm) + ")");

    // work on the exactly Hermitian part
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double norm_h = frobenius_norm(a);
    const double thresh = 1e-14 * norm_h;
    constexpr int kMaxSweeps = 100;

    bool converged = (n == 1) || norm_h == 0.0 || offdiag_norm(a) <= thresh;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = std::abs(a(p, q));
                if (apq <= 1e-2 * thresh / double(n)) continue;
                const Complex phase = a(p, q) / apq;  // e^{i arg}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (app - aqq) / (2.0 * apq);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // R differs from I only at (p,p)=(q,q)=c, (p,q)=-s*phase,
                // (q,p)=s*conj(phase); apply A <- R* A R, V <- V R.
                for (std::size_t j = 0; j < n; ++j) {  // rows, left by R*
                    const Complex xp = a(p, j), xq = a(q, j);
                    a(p, j) = c * xp + s * phase * xq;
                    a(q, j) = -s * std::conj(phase) * xp + c * xq;
                }
                for (std::size_t i = 0; i < n; ++i) {  // cols, right by R
                    const Complex xp = a(i, p), xq = a(i, q);
                    a(i, p) = c * xp + s * std::conj(phase) * xq;
                    a(i, q) = -s * phase * xp + c * xq;
                    const Complex vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp + s * std::conj(phase) * vq;
                    v(i, q) = -s * phase * vp + c * vq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
            }
        }
        converged = offdiag_norm(a) <= thresh;
    }
    if (!converged) throw std::runtime_error("hermitian_eig: Jacobi sweeps did not converge");

    normalize_column_phases(v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const double li = a(i, i).real(), lj = a(j, j).real();
        if (li != lj) return li > lj;
        return std::arg(v(0, i)) < std::arg(v(0, j));
    });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h, double tol) {
    const double scale = std::max(1.0, frobenius_norm(h));
    EigenDecomposition eig = hermitian_eig(h, std::max(tol, 1e-12 * scale));
    const std::size_t n = h.rows();
    for (double lam : eig.eigenvalues) {
        if (lam < -tol)
            throw std::invalid_argument("psd_sqrt: eigenvalue " + std::to_string(lam) +
                                        " below -tol, matrix not PSD");
    }
    ComplexMatrix s(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double lam = std::max(eig.eigenvalues[j], 0.0);
        const double root = std::sqrt(lam);
        const ComplexMatrix vj = column(eig.eigenvectors, j);
        const ComplexMatrix contrib = outer(vj, vj);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) s(r, c) += root * contrib(r, c);
    }
    // hermitize against rounding
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Complex m = 0.5 * (s(i, j) + std::conj(s(j, i)));
            s(i, j) = m;
            s(j, i) = std::conj(m);
        }
    return s;
}

}  // namespace ufact
