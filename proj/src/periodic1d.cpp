#include "qtsym/periodic1d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qtsym {

namespace {

constexpr double kPi = std::numbers::pi;

// Signed mode index for DFT slot n: n for n < M/2, n - M otherwise
// (Nyquist lands on -M/2).
int signedMode(int n, int m) { return n < m / 2 ? n : n - m; }

ComplexMatrix circulant(const ComplexVector& first) {
  const auto m = first.size();
  ComplexMatrix out(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index l = 0; l < m; ++l) out(j, l) = first((j - l + m) % m);
  return out;
}

}  // namespace

void FourierPotentialSpec::validate() const {
  if (!(ell > 0.0)) throw std::invalid_argument("FourierPotentialSpec: ell must be positive");
  if (periodicPart.size() > 64 || antiperiodicPart.size() > 64) {
    throw std::invalid_argument("FourierPotentialSpec: mode lists longer than 64");
  }
  for (const auto& mode : {periodicPart, antiperiodicPart}) {
    for (const auto& c : mode) {
      if (!std::isfinite(c.cosCoeff) || !std::isfinite(c.sinCoeff)) {
        throw std::invalid_argument("FourierPotentialSpec: non-finite coefficient");
      }
    }
  }
}

void GridSpec::validate() const {
  if (points < 8 || points % 2 != 0) {
    throw std::invalid_argument("GridSpec: points must be even and >= 8");
  }
  if (!(ell > 0.0) || !(mass > 0.0) || !(hbar > 0.0)) {
    throw std::invalid_argument("GridSpec: ell, mass, hbar must be positive");
  }
}

ComplexVector samplePotential(const FourierPotentialSpec& spec, const GridSpec& grid) {
  spec.validate();
  grid.validate();
  const int m = grid.points;
  Eigen::VectorXd periodic = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd antiperiodic = Eigen::VectorXd::Zero(m);
  for (int j = 0; j < m; ++j) {
    const double x = grid.x(j);
    for (std::size_t n = 0; n < spec.periodicPart.size(); ++n) {
      const double w = 2.0 * static_cast<double>(n) * kPi / spec.ell;
      periodic(j) += spec.periodicPart[n].cosCoeff * std::cos(w * x) +
                     spec.periodicPart[n].sinCoeff * std::sin(w * x);
    }
    for (std::size_t n = 0; n < spec.antiperiodicPart.size(); ++n) {
      const double w = (2.0 * static_cast<double>(n) + 1.0) * kPi / spec.ell;
      antiperiodic(j) += spec.antiperiodicPart[n].cosCoeff * std::cos(w * x) +
                         spec.antiperiodicPart[n].sinCoeff * std::sin(w * x);
    }
  }
  ComplexVector out(m);
  if (spec.assignment == ParityAssignment::RealPeriodicImagAntiperiodic) {
    for (int j = 0; j < m; ++j) out(j) = Complex(periodic(j), antiperiodic(j));
  } else {
    for (int j = 0; j < m; ++j) out(j) = Complex(antiperiodic(j), periodic(j));
  }
  return out;
}

double checkParity(const ComplexVector& samples, const GridSpec& grid, ParityKind kind) {
  grid.validate();
  const int m = grid.points;
  if (samples.size() != m) throw std::domain_error("checkParity: sample length mismatch");
  const double sign = (kind == ParityKind::Periodic) ? -1.0 : 1.0;
  double worst = 0.0;
  for (int j = 0; j < m; ++j) {
    const int shifted = (j - m / 2 + m) % m;  // x_j - l with wraparound
    worst = std::max(worst, std::abs(samples(shifted) + sign * samples(j)));
  }
  return worst;
}

ComplexMatrix momentumMatrix(const GridSpec& grid) {
  grid.validate();
  const int m = grid.points;
  // Circulant generator: purely imaginary, odd under r -> M - r, with the
  // Nyquist mode dropped so that conj(p) = -p holds exactly.
  ComplexVector gen = ComplexVector::Zero(m);
  for (int r = 1; r <= m / 2; ++r) {
    double s = 0.0;
    for (int n = 1; n < m / 2; ++n) {
      const double k = kPi * n / grid.ell;
      s += k * std::sin(2.0 * kPi * n * r / m);
    }
    gen(r) = Complex(0.0, 2.0 * grid.hbar * s / m);
    if (r < m / 2) gen(m - r) = -gen(r);
  }
  gen(m / 2) = Complex(0.0, 0.0);  // sin(pi n) = 0 term by term
  return circulant(gen);
}

ComplexMatrix kineticMatrix(const GridSpec& grid) {
  grid.validate();
  const int m = grid.points;
  // Real, even circulant generator carrying the full k^2 lattice
  // (Nyquist included), mirrored so the matrix is exactly symmetric.
  ComplexVector gen = ComplexVector::Zero(m);
  const double scale = grid.hbar * grid.hbar / (2.0 * grid.mass * m);
  for (int r = 0; r <= m / 2; ++r) {
    double s = 0.0;
    for (int n = 0; n < m; ++n) {
      const double k = kPi * signedMode(n, m) / grid.ell;
      s += k * k * std::cos(2.0 * kPi * n * r / m);
    }
    gen(r) = Complex(scale * s, 0.0);
    if (r > 0 && r < m / 2) gen(m - r) = gen(r);
  }
  return circulant(gen);
}

ComplexMatrix buildHamiltonian(const ComplexVector& v, const ComplexVector& a,
                               const GridSpec& grid) {
  grid.validate();
  const int m = grid.points;
  if (v.size() != m || a.size() != m) {
    throw std::domain_error("buildHamiltonian: sample vector length differs from grid points");
  }
  ComplexMatrix h = kineticMatrix(grid);
  h += v.asDiagonal();
  if (!a.isZero(0.0)) {
    const ComplexMatrix p = momentumMatrix(grid);
    const ComplexMatrix ad = ComplexMatrix(a.asDiagonal());
    h += (-(p * ad) - (ad * p) + ad * ad) / (2.0 * grid.mass);
  }
  return h;
}

AntilinearSymmetry translationOperator(const GridSpec& grid) {
  grid.validate();
  const int m = grid.points;
  ComplexMatrix q = ComplexMatrix::Zero(m, m);
  // Q e_l = e_{l - M/2 mod M}, so Q^-1 diag(x) Q = diag(x - l mod 2l).
  for (int l = 0; l < m; ++l) q((l - m / 2 + m) % m, l) = Complex(1.0, 0.0);
  return AntilinearSymmetry(std::move(q));
}

namespace {

FamilyReport verifyFamilySamples(const ComplexVector& v, const ComplexVector& a,
                                 const GridSpec& grid, bool qtConvention) {
  FamilyReport rep;
  rep.parityResidualVReal = checkParity(v.real().cast<Complex>(), grid, ParityKind::Periodic);
  rep.parityResidualVImag = checkParity(v.imag().cast<Complex>(), grid, ParityKind::Antiperiodic);
  const ParityKind aRealKind = qtConvention ? ParityKind::Antiperiodic : ParityKind::Periodic;
  const ParityKind aImagKind = qtConvention ? ParityKind::Periodic : ParityKind::Antiperiodic;
  rep.parityResidualAReal = checkParity(a.real().cast<Complex>(), grid, aRealKind);
  rep.parityResidualAImag = checkParity(a.imag().cast<Complex>(), grid, aImagKind);
  rep.parityViolation = rep.parityResidualVReal > 1e-8 || rep.parityResidualVImag > 1e-8 ||
                        rep.parityResidualAReal > 1e-8 || rep.parityResidualAImag > 1e-8;

  const ComplexMatrix h = buildHamiltonian(v, a, grid);
  const AntilinearSymmetry q = translationOperator(grid);
  rep.qtResidual = qtResidual(h, q);
  rep.wphResidual = wphResidual(h, q);
  rep.qSquaredResidual = qSquaredCommutatorResidual(h, q);

  const EigenDecomposition ed = eigendecompose(h);
  rep.spectrum = ed.eigenvalues;
  rep.classification = classifySpectrum(ed.eigenvalues, defaultSpectrumTol(ed.eigenvalues));
  return rep;
}

FamilyReport verifyFamily(const FourierPotentialSpec& vSpec, const FourierPotentialSpec& aSpec,
                          const GridSpec& grid, bool qtConvention) {
  if (vSpec.ell != grid.ell || aSpec.ell != grid.ell) {
    throw std::invalid_argument("verifyFamily: spec and grid half-periods differ");
  }
  return verifyFamilySamples(samplePotential(vSpec, grid), samplePotential(aSpec, grid), grid,
                             qtConvention);
}

}  // namespace

FamilyReport verifyWphFamily(const FourierPotentialSpec& vSpec, const FourierPotentialSpec& aSpec,
                             const GridSpec& grid) {
  return verifyFamily(vSpec, aSpec, grid, /*qtConvention=*/false);
}

FamilyReport verifyQtFamily(const FourierPotentialSpec& vSpec, const FourierPotentialSpec& aSpec,
                            const GridSpec& grid) {
  return verifyFamily(vSpec, aSpec, grid, /*qtConvention=*/true);
}

FamilyReport verifyWphSamples(const ComplexVector& v, const ComplexVector& a,
                              const GridSpec& grid) {
  return verifyFamilySamples(v, a, grid, /*qtConvention=*/false);
}

FamilyReport verifyQtSamples(const ComplexVector& v, const ComplexVector& a,
                             const GridSpec& grid) {
  return verifyFamilySamples(v, a, grid, /*qtConvention=*/true);
}

GridSpec paperSinCosGrid(int points) {
  GridSpec g;
  g.points = points;
  g.ell = kPi;  // k l = pi puts sin(2kx), cos(5kx) on the parity lattice
  g.mass = 0.5;
  g.hbar = 1.0;
  return g;
}

ComplexVector paperSinCosPotential(double lambda1, double lambda2, const GridSpec& grid) {
  grid.validate();
  ComplexVector v(grid.points);
  const double k = kPi / grid.ell;
  for (int j = 0; j < grid.points; ++j) {
    const double x = grid.x(j);
    v(j) = Complex(lambda1 * std::sin(2.0 * k * x), lambda2 * std::cos(5.0 * k * x));
  }
  return v;
}

int AngularSampleField::shiftPoints() const {
  if (thetaPoints < 2 || thetaPoints % 2 != 0 || samples.size() != thetaPoints) {
    throw std::domain_error("AngularSampleField: need an even theta grid matching the samples");
  }
  const double raw = phi * thetaPoints / (2.0 * kPi);
  const double rounded = std::round(raw);
  if (std::abs(raw - rounded) > 1e-9 || rounded <= 0.0) {
    throw std::domain_error("AngularSampleField: phi is not an integer number of grid steps");
  }
  return static_cast<int>(rounded) % thetaPoints;
}

double checkAngularConditions(const AngularSampleField& field, AngularConditionKind kind) {
  const int shift = field.shiftPoints();
  const int m = field.thetaPoints;
  const double sign = (kind == AngularConditionKind::PeriodicUnderPhi) ? -1.0 : 1.0;
  double worst = 0.0;
  for (int j = 0; j < m; ++j) {
    const int back = (j - shift + m) % m;  // theta_j - phi
    worst = std::max(worst, std::abs(field.samples(back) + sign * field.samples(j)));
  }
  return worst;
}

ComplexVector sampleSymmetric3dPotential(const std::vector<double>& e, const std::vector<double>& f,
                                         const std::vector<double>& g, const std::vector<double>& h,
                                         double omega, int thetaPoints) {
  if (!(omega > 0.0)) throw std::invalid_argument("sampleSymmetric3dPotential: omega must be positive");
  if (thetaPoints < 2) throw std::invalid_argument("sampleSymmetric3dPotential: theta grid too small");
  ComplexVector out = ComplexVector::Zero(thetaPoints);
  for (int j = 0; j < thetaPoints; ++j) {
    const double th = 2.0 * kPi * j / thetaPoints;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t n = 0; n < e.size(); ++n) re += e[n] * std::cos(2.0 * n * omega * th);
    for (std::size_t n = 0; n < f.size(); ++n) re += f[n] * std::sin(2.0 * n * omega * th);
    for (std::size_t n = 0; n < g.size(); ++n) im += g[n] * std::cos((2.0 * n + 1.0) * omega * th);
    for (std::size_t n = 0; n < h.size(); ++n) im += h[n] * std::sin((2.0 * n + 1.0) * omega * th);
    out(j) = Complex(re, im);
  }
  return out;
}

}  // namespace qtsym
