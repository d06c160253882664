#pragma once

// Dense complex matrix plumbing shared by every other module: eigensolves,
// Frobenius norms, and the exact polynomial exponential of nilpotent
// (strictly triangular) matrices.

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qtsym {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// vectorConditionNumber > kDefectThreshold flags a (numerically) defective
// eigenbasis; infinity is the sentinel for an exactly singular one.
inline constexpr double kDefectThreshold = 1e8;

struct EigenDecomposition {
  ComplexVector eigenvalues;   // sorted by (Re, Im) ascending
  ComplexMatrix eigenvectors;  // columns, same order as eigenvalues
  double vectorConditionNumber = 0.0;

  bool defective() const { return vectorConditionNumber > kDefectThreshold; }
};

double frobeniusNorm(const ComplexMatrix& a);

// Full eigendecomposition of a general dense complex matrix. Throws
// std::runtime_error on solver non-convergence (message names the dimension).
EigenDecomposition eigendecompose(const ComplexMatrix& h);

// exp(scale*A) for strictly upper- or strictly lower-triangular A, computed
// as the exact finite Taylor sum (A is nilpotent, A^dim = 0). Throws
// std::domain_error if A is not strictly triangular.
ComplexMatrix expTriangularNilpotent(const ComplexMatrix& a, Complex scale);

// 2-norm condition number via SVD; infinity when the smallest singular
// value underflows scale*eps.
double conditionNumber(const ComplexMatrix& a);

bool isFinite(const ComplexMatrix& a);

}  // namespace qtsym
