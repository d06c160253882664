#include "qtsym/twolevel.hpp"

#include <cmath>
#include <stdexcept>

namespace qtsym {

namespace {

// Principal branch with sqrt(negative real) = +i sqrt|.|.
Complex branchSqrt(double x) {
  if (x >= 0.0) return Complex(std::sqrt(x), 0.0);
  return Complex(0.0, std::sqrt(-x));
}

}  // namespace

ComplexMatrix buildQtReal(double a, double c) {
  ComplexMatrix h(2, 2);
  h << Complex(a), Complex(0.0), Complex(c), Complex(a);
  return h;
}

ComplexMatrix buildQtImaginary(const TwoLevelQtParams& p) {
  const Complex half_i(0.0, 0.5);
  ComplexMatrix h(2, 2);
  h(0, 0) = p.a - half_i * p.b * p.q;
  h(0, 1) = Complex(p.b);
  h(1, 0) = p.c + half_i * (p.a - p.d) * p.q;
  h(1, 1) = p.d + half_i * p.b * p.q;
  return h;
}

ComplexMatrix buildWphNonzero(const TwoLevelWphParams& p) {
  if (p.q == Complex(0.0)) {
    throw std::domain_error(
        "buildWphNonzero: q must be nonzero (use buildHermitian for the q = 0 family)");
  }
  const Complex ia2(0.0, p.a2);
  ComplexMatrix h(2, 2);
  h(0, 0) = p.a1 + ia2;
  h(0, 1) = -2.0 * ia2 / p.q;
  h(1, 0) = 2.0 * ia2 / std::conj(p.q);
  h(1, 1) = p.a1 - ia2;
  return h;
}

ComplexMatrix buildHermitian(double a, double b1, double b2, double d) {
  ComplexMatrix h(2, 2);
  h(0, 0) = Complex(a);
  h(0, 1) = Complex(b1, b2);
  h(1, 0) = Complex(b1, -b2);
  h(1, 1) = Complex(d);
  return h;
}

double qtDiscriminant(const TwoLevelQtParams& p) {
  return (p.a - p.d) * (p.a - p.d) - p.b * (p.b * p.q * p.q - 4.0 * p.c);
}

double wphDiscriminant(double qAbs) { return 4.0 - qAbs * qAbs; }

std::pair<Complex, Complex> qtEigenvalues(const TwoLevelQtParams& p) {
  const Complex root = branchSqrt(qtDiscriminant(p));
  const double trace = p.a + p.d;
  return {0.5 * (trace + root), 0.5 * (trace - root)};
}

std::pair<Complex, Complex> wphEigenvalues(const TwoLevelWphParams& p) {
  const double qAbs = std::abs(p.q);
  if (qAbs == 0.0) {
    throw std::domain_error("wphEigenvalues: q must be nonzero");
  }
  const Complex shift = std::abs(p.a2) / qAbs * branchSqrt(wphDiscriminant(qAbs));
  return {p.a1 + shift, p.a1 - shift};
}

double findExceptionalPoint(TwoLevelFamily family, const TwoLevelQtParams& fixed,
                            double lo, double hi, double tol) {
  auto disc = [&](double t) {
    switch (family) {
      case TwoLevelFamily::Wph:
        return wphDiscriminant(t);
      case TwoLevelFamily::QtImaginary: {
        TwoLevelQtParams p = fixed;
        p.q = t;
        return qtDiscriminant(p);
      }
      default:
        throw std::domain_error(
            "findExceptionalPoint: only the qt-imaginary and wph families carry a "
            "scan discriminant");
    }
  };

  double flo = disc(lo);
  double fhi = disc(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::runtime_error("findExceptionalPoint: discriminant does not change sign in range");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = disc(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qtsym
