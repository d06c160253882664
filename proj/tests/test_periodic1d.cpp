#include <doctest.h>

#include <numbers>
#include <random>

#include "qtsym/periodic1d.hpp"

using namespace qtsym;

namespace {

constexpr double kPi = std::numbers::pi;

GridSpec grid(int points, double ell, double mass = 0.5, double hbar = 1.0) {
  GridSpec g;
  g.points = points;
  g.ell = ell;
  g.mass = mass;
  g.hbar = hbar;
  return g;
}

FourierPotentialSpec randomConformingSpec(double ell, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierPotentialSpec spec;
  spec.ell = ell;
  const int modes = 1 + static_cast<int>(rng() % 4);
  for (int n = 0; n < modes; ++n) {
    spec.periodicPart.push_back({u(rng), u(rng)});
    spec.antiperiodicPart.push_back({u(rng), u(rng)});
  }
  return spec;
}

}  // namespace

TEST_CASE("samplePotential basic modes") {
  const GridSpec g = grid(16, 1.0);

  FourierPotentialSpec cosSpec;
  cosSpec.ell = 1.0;
  cosSpec.periodicPart = {{0, 0}, {1, 0}};  // cos(2 pi x)
  const auto vc = samplePotential(cosSpec, g);
  for (int j = 0; j < 16; ++j) {
    CHECK(vc(j).real() == doctest::Approx(std::cos(2.0 * kPi * g.x(j))));
    CHECK(vc(j).imag() == 0.0);
  }

  FourierPotentialSpec sinSpec;
  sinSpec.ell = 1.0;
  sinSpec.antiperiodicPart = {{0, 1}};  // sin(pi x), assigned to the imaginary part
  const auto vs = samplePotential(sinSpec, g);
  for (int j = 0; j < 16; ++j) {
    CHECK(vs(j).imag() == doctest::Approx(std::sin(kPi * g.x(j))));
  }
}

TEST_CASE("checkParity") {
  const GridSpec g = grid(32, 1.0);
  ComplexVector cos2pi(32), cospi(32);
  for (int j = 0; j < 32; ++j) {
    cos2pi(j) = std::cos(2.0 * kPi * g.x(j));
    cospi(j) = std::cos(kPi * g.x(j));
  }
  CHECK(checkParity(cos2pi, g, ParityKind::Periodic) <= 1e-12);
  CHECK(checkParity(cospi, g, ParityKind::Antiperiodic) <= 1e-12);
  CHECK(checkParity(cospi, g, ParityKind::Periodic) == doctest::Approx(2.0));
}

TEST_CASE("kinetic matrix reproduces the plane-wave spectrum") {
  const GridSpec g = grid(32, 1.0, 0.5, 1.0);
  const ComplexMatrix t = kineticMatrix(g);
  CHECK(symmetricDefect(t) == 0.0);

  std::vector<double> expected;
  for (int n = -16; n < 16; ++n) {
    const double k = kPi * n / g.ell;
    expected.push_back(g.hbar * g.hbar * k * k / (2.0 * g.mass));
  }
  std::sort(expected.begin(), expected.end());
  const auto ed = eigendecompose(t);
  for (int j = 0; j < 32; ++j) {
    CHECK(std::abs(ed.eigenvalues(j) - Complex(expected[j])) <= 1e-8 * std::max(1.0, t.norm()));
  }
}

TEST_CASE("constant potential shifts the kinetic spectrum") {
  const GridSpec g = grid(16, 1.0);
  const double c = 0.7;
  const ComplexVector v = ComplexVector::Constant(16, Complex(c));
  const ComplexVector a = ComplexVector::Zero(16);
  const auto e1 = eigendecompose(buildHamiltonian(v, a, g)).eigenvalues;
  const auto e0 = eigendecompose(kineticMatrix(g)).eigenvalues;
  for (int j = 0; j < 16; ++j) CHECK(std::abs(e1(j) - e0(j) - Complex(c)) <= 1e-8);
}

TEST_CASE("momentum matrix: conj(p) = -p and transpose antisymmetry") {
  const GridSpec g = grid(24, 1.7);
  const ComplexMatrix p = momentumMatrix(g);
  CHECK((p.conjugate() + p).norm() == 0.0);
  CHECK((p.transpose() + p).norm() == 0.0);
}

TEST_CASE("translation operator contracts") {
  const GridSpec g4 = grid(8, 1.0);
  const auto q = translationOperator(g4);
  // Unitary permutation, Q^2 = I for the half-period shift.
  CHECK((q.q * q.q - ComplexMatrix::Identity(8, 8)).norm() == 0.0);
  CHECK((q.q * q.q.adjoint() - ComplexMatrix::Identity(8, 8)).norm() == 0.0);

  // Q^-1 diag(x) Q = diag(x - l mod 2l).
  ComplexMatrix x = ComplexMatrix::Zero(8, 8);
  for (int j = 0; j < 8; ++j) x(j, j) = Complex(g4.x(j));
  const ComplexMatrix shifted = q.q.inverse() * x * q.q;
  for (int j = 0; j < 8; ++j) {
    const double want = std::fmod(g4.x(j) - g4.ell + 2.0 * g4.ell, 2.0 * g4.ell);
    CHECK(std::abs(shifted(j, j) - Complex(want)) <= 1e-12);
  }

  // Exact commutation with the spectral kinetic matrix.
  for (int m : {8, 64, 256, 512}) {
    const GridSpec g = grid(m, 1.3);
    const auto qm = translationOperator(g);
    const ComplexMatrix t = kineticMatrix(g);
    CHECK((t * qm.q - qm.q * t).norm() <= 1e-12);
    const ComplexMatrix p = momentumMatrix(g);
    CHECK((p * qm.q - qm.q * p).norm() <= 1e-12);
  }
}

TEST_CASE("paper sin/cos preset") {
  const GridSpec g = paperSinCosGrid(128);
  const ComplexVector v = paperSinCosPotential(1.0, 0.5, g);

  // Parity residuals of the preset are analytically exact.
  CHECK(checkParity(v.real().cast<Complex>(), g, ParityKind::Periodic) <= 1e-12);
  CHECK(checkParity(v.imag().cast<Complex>(), g, ParityKind::Antiperiodic) <= 1e-12);

  const auto rep = verifyWphSamples(v, ComplexVector::Zero(128), g);
  CHECK(!rep.parityViolation);
  CHECK(rep.wphResidual <= 1e-10);
  CHECK(rep.qtResidual <= 1e-10);  // a = 0: symmetric H, QT and WPH coincide
  CHECK(rep.qSquaredResidual <= 1e-12);
  CHECK(rep.classification.verdict != SpectrumVerdict::NotPseudoReal);
}

TEST_CASE("hermitian sub-case: real periodic potential only") {
  GridSpec g = paperSinCosGrid(64);
  const ComplexVector v = paperSinCosPotential(1.0, 0.0, g);
  const auto rep = verifyWphSamples(v, ComplexVector::Zero(64), g);
  CHECK(rep.wphResidual <= 1e-10);
  CHECK(rep.classification.verdict == SpectrumVerdict::AllReal);
}

TEST_CASE("broken parity is flagged") {
  GridSpec g = grid(64, 1.0);
  // Imaginary l-periodic part violates the WPH assignment.
  ComplexVector v(64);
  for (int j = 0; j < 64; ++j) v(j) = Complex(0.0, std::cos(2.0 * kPi * g.x(j)));
  const auto rep = verifyWphSamples(v, ComplexVector::Zero(64), g);
  CHECK(rep.parityViolation);
  // Well above the 1e-10 conforming bound; the kinetic term dominates the
  // normalization so the violating O(1) potential lands near 4e-5 at M=64.
  CHECK(rep.wphResidual > 1e-6);
}

TEST_CASE("QT family: vector potential with swapped parity roles") {
  GridSpec g = grid(64, 1.0);
  std::mt19937_64 rng(8);
  const FourierPotentialSpec vSpec = randomConformingSpec(1.0, rng);

  // a with real antiperiodic part only: QT-conforming, not WPH.
  FourierPotentialSpec aSpec;
  aSpec.ell = 1.0;
  aSpec.antiperiodicPart = {{0.4, 0.2}};
  aSpec.assignment = ParityAssignment::RealAntiperiodicImagPeriodic;
  const auto repQt = verifyQtFamily(vSpec, aSpec, g);
  CHECK(!repQt.parityViolation);
  CHECK(repQt.qtResidual <= 1e-10);
  CHECK(repQt.wphResidual > 1e-6);
  CHECK(repQt.classification.verdict != SpectrumVerdict::NotPseudoReal);

  // a with real periodic part only: WPH-conforming, not QT.
  FourierPotentialSpec aWph;
  aWph.ell = 1.0;
  aWph.periodicPart = {{0.0, 0.0}, {0.4, 0.2}};
  const auto repWph = verifyWphFamily(vSpec, aWph, g);
  CHECK(!repWph.parityViolation);
  CHECK(repWph.wphResidual <= 1e-10);
  CHECK(repWph.qtResidual > 1e-6);
}

TEST_CASE("correspondence: QT-conforming (v, a) maps to WPH-conforming (v, ia)") {
  GridSpec g = grid(32, 1.0);
  FourierPotentialSpec aQt;
  aQt.ell = 1.0;
  aQt.antiperiodicPart = {{0.5, -0.3}};
  aQt.periodicPart = {{0.0, 0.0}, {0.2, 0.1}};
  aQt.assignment = ParityAssignment::RealAntiperiodicImagPeriodic;
  const ComplexVector aSamples = samplePotential(aQt, g);
  // i * a swaps real and imaginary parts (with a sign), landing on the WPH
  // assignment: real part periodic, imaginary antiperiodic.
  const ComplexVector ia = Complex(0, 1) * aSamples;
  CHECK(checkParity(ia.real().cast<Complex>(), g, ParityKind::Periodic) <= 1e-12);
  CHECK(checkParity(ia.imag().cast<Complex>(), g, ParityKind::Antiperiodic) <= 1e-12);
}

TEST_CASE("pseudo-reality over random conforming specs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const GridSpec g = grid(64, 1.0);
    const auto vSpec = randomConformingSpec(1.0, rng);
    const auto aSpec = randomConformingSpec(1.0, rng);
    const auto rep = verifyWphFamily(vSpec, aSpec, g);
    CHECK(!rep.parityViolation);
    CHECK(rep.wphResidual <= 1e-10);
    CHECK(rep.classification.verdict != SpectrumVerdict::NotPseudoReal);
  }
}

TEST_CASE("equivalence on symmetric H: a = 0 makes qt and wph identical") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const GridSpec g = grid(32, 1.0);
    const auto vSpec = randomConformingSpec(1.0, rng);
    const auto rep = verifyWphFamily(vSpec, FourierPotentialSpec{.ell = 1.0}, g);
    CHECK(std::abs(rep.qtResidual - rep.wphResidual) <= 1e-12);
  }
}

TEST_CASE("angular condition checks") {
  const int n = 12;
  const double phi = 2.0 * kPi / n * 3;  // 3 grid steps (phi = pi/2)
  const double omega = kPi / phi;        // omega phi = pi lattice convention

  auto sampleCos = [&](double mult) {
    AngularSampleField f;
    f.thetaPoints = n;
    f.phi = phi;
    f.samples.resize(n);
    for (int j = 0; j < n; ++j) f.samples(j) = std::cos(mult * omega * (2.0 * kPi * j / n));
    return f;
  };

  CHECK(checkAngularConditions(sampleCos(2.0), AngularConditionKind::PeriodicUnderPhi) <= 1e-12);
  CHECK(checkAngularConditions(sampleCos(3.0), AngularConditionKind::AntiperiodicUnderPhi) <= 1e-12);
  CHECK(checkAngularConditions(sampleCos(1.0), AngularConditionKind::PeriodicUnderPhi) ==
        doctest::Approx(2.0));

  AngularSampleField bad;
  bad.thetaPoints = n;
  bad.phi = 0.7;  // incommensurate with the grid
  bad.samples = ComplexVector::Zero(n);
  CHECK_THROWS_AS(checkAngularConditions(bad, AngularConditionKind::PeriodicUnderPhi),
                  std::domain_error);
}

TEST_CASE("sampleSymmetric3dPotential") {
  const auto constant = sampleSymmetric3dPotential({1.0}, {}, {}, {}, 1.0, 8);
  for (int j = 0; j < 8; ++j) CHECK(constant(j) == Complex(1.0));

  const auto gOnly = sampleSymmetric3dPotential({}, {}, {1.0}, {}, 1.0, 8);
  for (int j = 0; j < 8; ++j) {
    CHECK(gOnly(j).imag() == doctest::Approx(std::cos(2.0 * kPi * j / 8)));
    CHECK(gOnly(j).real() == 0.0);
  }

  // e_1 = 1, h_0 = 2 with omega = 3: the rotation phi = pi/3 (1/omega up to
  // the 2 pi convention) is exactly 2 grid steps on a 12-point grid.
  const double omega = 3.0;
  const auto mixed = sampleSymmetric3dPotential({0.0, 1.0}, {}, {}, {2.0}, omega, 12);
  AngularSampleField re, im;
  re.thetaPoints = im.thetaPoints = 12;
  re.phi = im.phi = kPi / 3.0;
  re.samples = mixed.real().cast<Complex>();
  im.samples = mixed.imag().cast<Complex>();
  CHECK(checkAngularConditions(re, AngularConditionKind::PeriodicUnderPhi) <= 1e-12);
  CHECK(checkAngularConditions(im, AngularConditionKind::AntiperiodicUnderPhi) <= 1e-12);
}
