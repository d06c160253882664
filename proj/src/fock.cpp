#include "qtsym/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace qtsym {

LadderPair ladderMatrices(int n) {
  if (n < 2) throw std::invalid_argument("ladderMatrices: truncation must be >= 2");
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    a(k - 1, k) = Complex(std::sqrt(static_cast<double>(k)), 0.0);
  }
  return {a, a.adjoint()};
}

ComplexMatrix buildGeneralFock(const FockModelParams& p) {
  const auto [a, adag] = ladderMatrices(p.truncation);
  return p.alpha * (a * a) + p.beta * (adag * adag) + p.gamma * (a * adag + adag * a) +
         p.mfr * a + p.nfr * adag;
}

double QtConstraintResiduals::maxAnalytic() const {
  double m = alphaReal;
  m = std::max(m, betaReal);
  m = std::max(m, gammaReal);
  m = std::max(m, mShift);
  m = std::max(m, nShift);
  return std::max(m, nqProduct);
}

QtConstraintResiduals qtConstraintResiduals(const FockModelParams& p) {
  if (p.qfr == Complex(0.0)) {
    throw std::domain_error("qtConstraintResiduals: q must be nonzero");
  }
  QtConstraintResiduals r{};
  r.alphaReal = std::abs(std::conj(p.alpha) - p.alpha);
  r.betaReal = std::abs(std::conj(p.beta) - p.beta);
  r.gammaReal = std::abs(std::conj(p.gamma) - p.gamma);
  r.mShift = std::abs(std::conj(p.mfr) - (p.mfr - 2.0 * p.gamma * p.qfr));
  r.nShift = std::abs(std::conj(p.nfr) - (p.nfr - 2.0 * p.beta * p.qfr));
  r.nqProduct = std::abs(p.nfr * p.qfr);

  // Cross-check on the truncated operators, edge rows projected out.
  const int n = p.truncation;
  const ComplexMatrix h = buildGeneralFock(p);
  const ComplexMatrix q = expTriangularNilpotent(ladderMatrices(n).a, p.qfr);
  ComplexMatrix resid = q * h.conjugate() - h * q;
  resid.block(n - 2, 0, 2, n).setZero();
  resid.block(0, n - 2, n, 2).setZero();
  r.projectedOperatorResidual = resid.norm() / std::max(1.0, h.norm() * q.norm());
  return r;
}

ComplexMatrix buildReducedFock(const ReducedFockParams& p, int n) {
  if (p.gamma == 0.0 || p.q == 0.0) {
    throw std::invalid_argument("buildReducedFock: gamma and q must be nonzero");
  }
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  const Complex m = p.m();
  for (int k = 0; k < n; ++k) {
    h(k, k) = Complex(p.gamma * (2 * k + 1), 0.0);
    if (k >= 1) h(k - 1, k) = m * std::sqrt(static_cast<double>(k));
    if (k >= 2) h(k - 2, k) = p.alpha * std::sqrt(static_cast<double>(k) * (k - 1));
  }
  return h;
}

Eigen::VectorXd reducedSpectrum(const ReducedFockParams& p, int n) {
  Eigen::VectorXd e(n);
  for (int k = 0; k < n; ++k) e(k) = p.gamma * (2 * k + 1);
  return e;
}

ComplexVector reducedEigenvector(const ReducedFockParams& p, int n, int bigN) {
  if (n < 0 || n >= bigN - 2) {
    throw std::invalid_argument("reducedEigenvector: index must lie in the interior, n < N-2");
  }
  const Complex m = p.m();
  if (n == 1 && std::abs(m) < 1e-12) {
    throw std::domain_error("reducedEigenvector: closed-form denominator m degenerates");
  }
  if (n == 2 && std::abs(m * m + 2.0 * p.alpha * p.gamma) < 1e-12) {
    throw std::domain_error(
        "reducedEigenvector: closed-form denominator m^2 + 2*alpha*gamma degenerates");
  }

  const ComplexMatrix h = buildReducedFock(p, bigN);
  const double en = p.gamma * (2 * n + 1);
  ComplexVector psi = ComplexVector::Zero(bigN);
  psi(n) = Complex(1.0, 0.0);
  // Triangular back-substitution inside the invariant subspace: distinct
  // diagonal entries make every pivot gamma*2(k-n) nonzero.
  for (int k = n - 1; k >= 0; --k) {
    Complex acc(0.0, 0.0);
    for (int j = k + 1; j <= n; ++j) acc += h(k, j) * psi(j);
    psi(k) = -acc / (h(k, k) - en);
  }
  // First nonzero component = 1.
  for (int k = 0; k < bigN; ++k) {
    if (std::abs(psi(k)) > 0.0) {
      psi /= psi(k);
      break;
    }
  }
  return psi;
}

FockQuasiHermitianCertificate quasiHermitianCheck(const ReducedFockParams& p, int bigN) {
  const int block = bigN - 2;
  if (block < 2) throw std::invalid_argument("quasiHermitianCheck: truncation too small");
  const ComplexMatrix h = buildReducedFock(p, bigN).topLeftCorner(block, block);

  ComplexMatrix s(block, block);
  for (int n = 0; n < block; ++n) {
    // Eigenvectors of the block itself, via the same back-substitution.
    ComplexVector psi = ComplexVector::Zero(block);
    psi(n) = Complex(1.0, 0.0);
    const double en = p.gamma * (2 * n + 1);
    for (int k = n - 1; k >= 0; --k) {
      Complex acc(0.0, 0.0);
      for (int j = k + 1; j <= n; ++j) acc += h(k, j) * psi(j);
      psi(k) = -acc / (h(k, k) - en);
    }
    s.col(n) = psi.normalized();
  }

  FockQuasiHermitianCertificate cert{};
  cert.blockSize = block;
  cert.condS = conditionNumber(s);
  if (cert.condS > 1e10) {
    throw std::runtime_error("quasiHermitianCheck: eigenvector basis is ill-conditioned");
  }
  ComplexMatrix lambda = ComplexMatrix::Zero(block, block);
  for (int n = 0; n < block; ++n) lambda(n, n) = Complex(p.gamma * (2 * n + 1), 0.0);
  cert.reconstructionResidual =
      (s * lambda * s.inverse() - h).norm() / std::max(1.0, h.norm());
  return cert;
}

ComplexMatrix numberParityMatrix(int n) {
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) p(k, k) = Complex((k % 2 == 0) ? 1.0 : -1.0, 0.0);
  return p;
}

double ptResidual(const ComplexMatrix& h) {
  const ComplexMatrix p = numberParityMatrix(static_cast<int>(h.rows()));
  return (p * h.conjugate() * p - h).norm() / std::max(1.0, h.norm());
}

}  // namespace qtsym
