#pragma once

// Truncated Fock-space realization of the quadratic ladder Hamiltonian
//   H = alpha a^2 + beta a+^2 + gamma {a, a+} + m a + n a+
// with the non-unitary symmetry factor Q = exp(q a), the analytic
// QT-constraint residuals, and the reduced model
//   H = alpha a^2 + gamma {a, a+} + (mu + i gamma q) a
// whose spectrum is exactly gamma(2n+1).
//
// Truncation corrupts the last two rows/columns of degree-2 ladder
// products, so operator identities are asserted on the leading (N-2) block
// only.

#include "qtsym/numcore.hpp"
#include "qtsym/symmetry.hpp"

namespace qtsym {

struct FockModelParams {
  Complex alpha{0.0};
  Complex beta{0.0};
  Complex gamma{0.0};
  Complex mfr{0.0};  // coefficient of a
  Complex nfr{0.0};  // coefficient of a+
  Complex qfr{0.0};  // exponent parameter of Q = exp(qfr a)
  int truncation = 8;
};

struct ReducedFockParams {
  double alpha = 0.0;
  double gamma = 1.0;  // nonzero
  double mu = 0.0;
  double q = 1.0;      // nonzero

  Complex m() const { return Complex(mu, gamma * q); }
};

struct LadderPair {
  ComplexMatrix a;
  ComplexMatrix adag;
};

// a[m][n] = sqrt(n) delta_{m,n-1}; adag = a^dagger. [a, a+] = I holds on
// the leading (N-1) block; the last diagonal slot reads -(N-1).
LadderPair ladderMatrices(int n);

ComplexMatrix buildGeneralFock(const FockModelParams& p);

struct QtConstraintResiduals {
  double alphaReal;        // |alpha* - alpha|
  double betaReal;         // |beta* - beta|
  double gammaReal;        // |gamma* - gamma|
  double mShift;           // |m* - (m - 2 gamma q)|
  double nShift;           // |n* - (n - 2 beta q)|
  double nqProduct;        // |n q|
  double projectedOperatorResidual;  // |P (Q conj(H) - H Q) P| scaled, P = leading N-2 block

  double maxAnalytic() const;
};

// Throws std::domain_error when p.qfr == 0.
QtConstraintResiduals qtConstraintResiduals(const FockModelParams& p);

ComplexMatrix buildReducedFock(const ReducedFockParams& p, int n);

// Exact spectrum gamma(2n+1), n = 0..N-1.
Eigen::VectorXd reducedSpectrum(const ReducedFockParams& p, int n);

// Eigenvector for E_n by back-substitution inside the invariant subspace
// spanned by the first n+1 number states; first nonzero component
// normalized to 1. Throws std::domain_error when a closed-form denominator
// (m for n=1, m^2 + 2 alpha gamma for n=2) degenerates below 1e-12.
ComplexVector reducedEigenvector(const ReducedFockParams& p, int n, int bigN);

struct FockQuasiHermitianCertificate {
  double reconstructionResidual;
  double condS;
  int blockSize;
};

// Diagonalizes the leading (N-2) interior block through its triangular
// eigenbasis and verifies similarity to the real diagonal spectrum.
// Throws std::runtime_error when cond(S) exceeds 1e10.
FockQuasiHermitianCertificate quasiHermitianCheck(const ReducedFockParams& p, int bigN);

// Number-basis parity diag((-1)^n); P a P = -a.
ComplexMatrix numberParityMatrix(int n);

// |P conj(H) P - H| / max(1, |H|): zero for PT-symmetric H, order-one for
// the mu != 0 reduced models.
double ptResidual(const ComplexMatrix& h);

}  // namespace qtsym
