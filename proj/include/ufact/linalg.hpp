#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ufact {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Entries are required to be finite;
/// constructors taking data throw std::invalid_argument on NaN/Inf.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
Complex determinant(ComplexMatrix a);

/// ||U*U - I||_F
double unitarity_residual(const ComplexMatrix& u);
/// ||H - H*||_F
double hermiticity_residual(const ComplexMatrix& h);
/// ||P^2 - P||_F
double idempotence_residual(const ComplexMatrix& p);

ComplexMatrix block(const ComplexMatrix& a, std::size_t r0, std::size_t c0,
                    std::size_t rows, std::size_t cols);
void set_block(ComplexMatrix& a, std::size_t r0, std::size_t c0, const ComplexMatrix& b);
ComplexMatrix column(const ComplexMatrix& a, std::size_t j);
/// x y* for column vectors x (m x 1), y (n x 1); result m x n.
ComplexMatrix outer(const ComplexMatrix& x, const ComplexMatrix& y);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // sorted descending
    ComplexMatrix eigenvectors;       // orthonormal columns, same order
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// `tol` bounds the accepted Hermiticity defect ||h - h*||_F. Eigenvalues are
/// sorted descending; exact ties are broken by the argument of the first
/// eigenvector component. Each eigenvector is phase-normalized so its first
/// component of magnitude > 1e-12 is real nonnegative, which makes the output
/// deterministic. Throws std::invalid_argument for non-Hermitian input and
/// std::runtime_error if 100 sweeps do not converge.
EigenDecomposition hermitian_eig(const ComplexMatrix& h, double tol = 1e-10);

/// Hermitian PSD square root. Eigenvalues below -tol are rejected
/// (std::invalid_argument); negatives above -tol are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& h, double tol = 1e-10);

}  // namespace ufact
