#include "qtsym/symmetry.hpp"

#include <stdexcept>

namespace qtsym {

namespace {

void requireSameDim(const ComplexMatrix& h, const ComplexMatrix& q) {
  if (h.rows() != q.rows() || h.cols() != q.cols()) {
    throw std::domain_error("symmetry: dimension mismatch between H and Q");
  }
}

double scaled(double num, double hScale, double qScale) {
  return num / std::max(1.0, hScale * qScale);
}

}  // namespace

AntilinearSymmetry::AntilinearSymmetry(ComplexMatrix q_) : q(std::move(q_)) {
  if (q.rows() != q.cols() || q.rows() < 1) {
    throw std::invalid_argument("AntilinearSymmetry: Q must be square");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(q);
  const auto& s = svd.singularValues();
  if (s(s.size() - 1) <= 1e-12 * q.norm()) {
    throw std::invalid_argument("AntilinearSymmetry: Q is numerically singular");
  }
}

double qtResidual(const ComplexMatrix& h, const AntilinearSymmetry& s) {
  requireSameDim(h, s.q);
  return scaled((s.q * h.conjugate() - h * s.q).norm(), h.norm(), s.q.norm());
}

double wphResidual(const ComplexMatrix& h, const AntilinearSymmetry& s) {
  requireSameDim(h, s.q);
  return scaled((s.q * h.adjoint() - h * s.q).norm(), h.norm(), s.q.norm());
}

double symmetricDefect(const ComplexMatrix& h) {
  return (h - h.transpose().eval()).norm() / std::max(1.0, h.norm());
}

double qSquaredCommutatorResidual(const ComplexMatrix& h, const AntilinearSymmetry& s) {
  requireSameDim(h, s.q);
  const ComplexMatrix q2 = s.q * s.q;
  return (h * q2 - q2 * h).norm() / std::max(1.0, h.norm() * s.q.norm() * s.q.norm());
}

EquivalenceGap equivalenceGap(const ComplexMatrix& h, const AntilinearSymmetry& s) {
  return {qtResidual(h, s), wphResidual(h, s), symmetricDefect(h)};
}

}  // namespace qtsym
