#pragma once

// Antilinear symmetry Theta = Q T, with T fixed as entrywise complex
// conjugation in the working basis. The residuals below are the defining
// operator identities rendered as scale-free Frobenius norms:
//
//   QT-symmetry           Q conj(H) = H Q
//   weak pseudo-Hermiticity  Q H^dag = H Q
//   symmetry              H = H^T
//   Q^2 symmetry          [H, Q^2] = 0
//
// All residuals are normalized by max(1, |H| |Q|) so tolerances are
// independent of parameter scale.

#include "qtsym/numcore.hpp"

namespace qtsym {

struct AntilinearSymmetry {
  ComplexMatrix q;

  // Validates invertibility (smallest singular value > 1e-12 * |q|_F).
  explicit AntilinearSymmetry(ComplexMatrix q_);
};

double qtResidual(const ComplexMatrix& h, const AntilinearSymmetry& s);
double wphResidual(const ComplexMatrix& h, const AntilinearSymmetry& s);
double symmetricDefect(const ComplexMatrix& h);
double qSquaredCommutatorResidual(const ComplexMatrix& h, const AntilinearSymmetry& s);

struct EquivalenceGap {
  double qt;
  double wph;
  double symmetricDefect;
};

EquivalenceGap equivalenceGap(const ComplexMatrix& h, const AntilinearSymmetry& s);

}  // namespace qtsym
