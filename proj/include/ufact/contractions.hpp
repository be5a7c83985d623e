#pragma once

#include <utility>

#include "ufact/linalg.hpp"
#include "ufact/report.hpp"

namespace ufact {

/// A linear map with operator norm at most 1. The norm (largest singular
/// value) is computed on construction; matrices beyond 1 + 1e-12 are
/// rejected rather than repaired.
class Contraction {
public:
    explicit Contraction(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return matrix_; }
    double operator_norm() const { return operator_norm_; }

private:
    ComplexMatrix matrix_;
    double operator_norm_ = 0.0;
};

struct DefectOperators {
    ComplexMatrix d_t;       // (I_k - T*T)^{1/2}, k x k
    ComplexMatrix d_t_star;  // (I_n - T T*)^{1/2}, n x n
};

DefectOperators defect_operators(const Contraction& t);

/// (||T D_T - D_{T*} T||_F, ||T* D_{T*} - D_T T*||_F)
std::pair<double, double> intertwining_residual(const Contraction& t);

/// Check that an n x k matrix generates an isometry whose defect operator
/// diagonalizes as claimed. Reports five residuals against tol:
///   isometry        ||C*C - I_k||
///   kernel          ||D_{T*} C||
///   eigenvector     ||(I - D_{T*}) C - C||
///   outer-product   ||(I - D_{T*}) - C C*||
///   defect-rank     eigenvalues of D_{T*} must be n-k ones and k zeros;
///                   the value is the larger of the count mismatch and the
///                   worst distance of an eigenvalue from {0, 1}
/// Never throws for bad input; failures show up in the report.
VerificationReport verify_main_theorem(const ComplexMatrix& c, double tol);

}  // namespace ufact
