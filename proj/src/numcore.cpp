#include "qtsym/numcore.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qtsym {

double frobeniusNorm(const ComplexMatrix& a) { return a.norm(); }

bool isFinite(const ComplexMatrix& a) {
  return a.allFinite();
}

double conditionNumber(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (smin <= smax * std::numeric_limits<double>::epsilon()) {
    return std::numeric_limits<double>::infinity();
  }
  return smax / smin;
}

EigenDecomposition eigendecompose(const ComplexMatrix& h) {
  if (h.rows() != h.cols() || h.rows() < 1) {
    throw std::invalid_argument("eigendecompose: matrix must be square, dim >= 1");
  }
  if (!isFinite(h)) {
    throw std::invalid_argument("eigendecompose: matrix has non-finite entries");
  }

  Eigen::ComplexEigenSolver<ComplexMatrix> solver(h, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecompose: eigensolver failed to converge at dim " +
                             std::to_string(h.rows()));
  }

  const auto n = h.rows();
  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const auto& raw = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    if (raw(i).real() != raw(j).real()) return raw(i).real() < raw(j).real();
    return raw(i).imag() < raw(j).imag();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = raw(order[static_cast<size_t>(k)]);
    out.eigenvectors.col(k) = solver.eigenvectors().col(order[static_cast<size_t>(k)]);
  }
  out.vectorConditionNumber = conditionNumber(out.eigenvectors);
  return out;
}

namespace {

bool strictlyUpper(const ComplexMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j <= i; ++j)
      if (a(i, j) != Complex(0.0, 0.0)) return false;
  return true;
}

bool strictlyLower(const ComplexMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i; j < a.cols(); ++j)
      if (a(i, j) != Complex(0.0, 0.0)) return false;
  return true;
}

}  // namespace

ComplexMatrix expTriangularNilpotent(const ComplexMatrix& a, Complex scale) {
  if (a.rows() != a.cols()) {
    throw std::domain_error("expTriangularNilpotent: matrix must be square");
  }
  if (!strictlyUpper(a) && !strictlyLower(a)) {
    throw std::domain_error("expTriangularNilpotent: matrix must be strictly triangular");
  }
  const auto n = a.rows();
  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  const ComplexMatrix scaled = scale * a;
  // A^n = 0, so the Taylor series terminates after n-1 products.
  for (Eigen::Index k = 1; k < n; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    result += term;
  }
  return result;
}

}  // namespace qtsym
