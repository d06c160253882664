#pragma once

// The four explicit 2x2 families: QT-symmetric with real and imaginary
// lower-triangular Q-parameter, Hermitian (trivial Q), and the weakly
// pseudo-Hermitian family with nonzero complex Q-parameter. Closed-form
// spectra and discriminant-based exceptional-point location.

#include <utility>

#include "qtsym/numcore.hpp"

namespace qtsym {

// Parameters of the QT family with Q = [[1,0],[i q,1]]; the degenerate
// real-parameter family [[a,0],[c,a]] is the sub-case b = 0, a = d.
struct TwoLevelQtParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double q = 0.0;
};

// Parameters of the weakly pseudo-Hermitian family, Q = [[1,0],[q,1]],
// q complex and nonzero.
struct TwoLevelWphParams {
  double a1 = 0.0;
  double a2 = 0.0;
  Complex q = Complex(1.0, 0.0);
};

ComplexMatrix buildQtReal(double a, double c);
ComplexMatrix buildQtImaginary(const TwoLevelQtParams& p);
ComplexMatrix buildWphNonzero(const TwoLevelWphParams& p);  // throws if q == 0
ComplexMatrix buildHermitian(double a, double b1, double b2, double d);

// Closed-form spectra. The square root takes the principal branch with
// sqrt(negative real) = +i sqrt|.|, so E+ carries the nonnegative
// imaginary part in the conjugate-pair regime.
std::pair<Complex, Complex> qtEigenvalues(const TwoLevelQtParams& p);
std::pair<Complex, Complex> wphEigenvalues(const TwoLevelWphParams& p);

// Closed-form discriminants whose zero marks the exceptional point.
double qtDiscriminant(const TwoLevelQtParams& p);
double wphDiscriminant(double qAbs);

enum class TwoLevelFamily { QtReal, QtImaginary, Hermitian, Wph };

// Bisection on the analytic discriminant over [lo, hi] in the scan
// parameter (q for the QT family, |q| for the WPH family). Fixed params
// supply the remaining entries. Throws std::runtime_error when the
// discriminant does not change sign across the range.
double findExceptionalPoint(TwoLevelFamily family, const TwoLevelQtParams& fixed,
                            double lo, double hi, double tol = 1e-10);

}  // namespace qtsym
