#pragma once

// One-dimensional periodic-cell realization of the translation symmetry
// Q = exp(i l p / hbar): Fourier-specified complex potentials with
// periodicity/antiperiodicity conditions on half the cell, spectral
// Hamiltonians H = (p - a(x))^2 / 2m + v(x) on a uniform grid over
// [0, 2l), and the sampled angular-condition utilities for the rotation
// analog in cylindrical coordinates.

#include <string>
#include <vector>

#include "qtsym/classify.hpp"
#include "qtsym/numcore.hpp"
#include "qtsym/symmetry.hpp"

namespace qtsym {

// Which Fourier block supplies the real part of the sampled potential.
// WPH convention: real part l-periodic, imaginary part l-antiperiodic.
// QT vector-potential convention: roles swapped.
enum class ParityAssignment { RealPeriodicImagAntiperiodic, RealAntiperiodicImagPeriodic };

struct FourierMode {
  double cosCoeff = 0.0;
  double sinCoeff = 0.0;
};

struct FourierPotentialSpec {
  double ell = 1.0;                        // half-period l > 0
  std::vector<FourierMode> periodicPart;   // frequency 2 n pi / l, n = 0,1,...
  std::vector<FourierMode> antiperiodicPart;  // frequency (2n+1) pi / l
  ParityAssignment assignment = ParityAssignment::RealPeriodicImagAntiperiodic;

  void validate() const;  // throws std::invalid_argument
};

struct GridSpec {
  int points = 128;   // M, even, >= 8
  double ell = 1.0;   // domain [0, 2l)
  double mass = 0.5;  // default m = 1/2 so H = p^2 + v
  double hbar = 1.0;

  void validate() const;
  double x(int j) const { return 2.0 * ell * j / points; }
};

enum class ParityKind { Periodic, Antiperiodic };

ComplexVector samplePotential(const FourierPotentialSpec& spec, const GridSpec& grid);

// max_j |f(x_j - l) -+ f(x_j)| with the half-cell index shift M/2.
double checkParity(const ComplexVector& samples, const GridSpec& grid, ParityKind kind);

// Momentum matrix via Fourier spectral differentiation (odd-symmetric mode
// assignment; Nyquist mode carries zero first-order momentum so that
// conj(p) = -p exactly).
ComplexMatrix momentumMatrix(const GridSpec& grid);

// Kinetic matrix with the full k^2 lattice (Nyquist included), diagonal in
// the discrete Fourier basis and exactly commuting with the grid shift.
ComplexMatrix kineticMatrix(const GridSpec& grid);

// H = kinetic/1 + (-p a - a p + a^2)/2m + v, the symmetric expansion of
// (p - a)^2 / 2m + v.
ComplexMatrix buildHamiltonian(const ComplexVector& v, const ComplexVector& a,
                               const GridSpec& grid);

// Q = cyclic shift by half the cell (M/2 points); unitary permutation.
AntilinearSymmetry translationOperator(const GridSpec& grid);

struct FamilyReport {
  double parityResidualVReal = 0.0;
  double parityResidualVImag = 0.0;
  double parityResidualAReal = 0.0;
  double parityResidualAImag = 0.0;
  double qtResidual = 0.0;
  double wphResidual = 0.0;
  double qSquaredResidual = 0.0;
  bool parityViolation = false;
  ComplexVector spectrum;
  SpectrumClassification classification;
};

FamilyReport verifyWphFamily(const FourierPotentialSpec& vSpec, const FourierPotentialSpec& aSpec,
                             const GridSpec& grid);
FamilyReport verifyQtFamily(const FourierPotentialSpec& vSpec, const FourierPotentialSpec& aSpec,
                            const GridSpec& grid);

// Same verification on raw sample vectors (used for directly evaluated
// presets that bypass the coefficient encoding).
FamilyReport verifyWphSamples(const ComplexVector& v, const ComplexVector& a,
                              const GridSpec& grid);
FamilyReport verifyQtSamples(const ComplexVector& v, const ComplexVector& a,
                             const GridSpec& grid);

// The sin/cos example shipped as a directly evaluated preset on the
// k l = pi frequency lattice: ell = pi, v = lambda1 sin(2x) + i lambda2 cos(5x).
ComplexVector paperSinCosPotential(double lambda1, double lambda2, const GridSpec& grid);
GridSpec paperSinCosGrid(int points);

// --- Angular utilities (rotation analog, sampled at fixed rho, z) ---

struct AngularSampleField {
  int thetaPoints = 0;       // even, grid over [0, 2pi)
  ComplexVector samples;
  double phi = 0.0;          // rotation angle; must be an integer number of grid steps

  int shiftPoints() const;   // throws std::domain_error if phi is incommensurate
};

enum class AngularConditionKind { PeriodicUnderPhi, AntiperiodicUnderPhi };

double checkAngularConditions(const AngularSampleField& field, AngularConditionKind kind);

// Sum over n of e_n cos(2 n w th) + f_n sin(2 n w th)
//            + i [ g_n cos((2n+1) w th) + h_n sin((2n+1) w th) ].
ComplexVector sampleSymmetric3dPotential(const std::vector<double>& e, const std::vector<double>& f,
                                         const std::vector<double>& g, const std::vector<double>& h,
                                         double omega, int thetaPoints);

}  // namespace qtsym
