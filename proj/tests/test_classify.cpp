#include <doctest.h>

#include <random>

#include "qtsym/classify.hpp"
#include "qtsym/fock.hpp"
#include "qtsym/twolevel.hpp"

using namespace qtsym;

namespace {

ComplexVector vec(std::initializer_list<Complex> xs) {
  ComplexVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("classifySpectrum verdicts") {
  CHECK(classifySpectrum(vec({1, 3, 5}), 1e-8).verdict == SpectrumVerdict::AllReal);

  const auto pairs = classifySpectrum(vec({{1, 2}, {1, -2}, {4, 0}}), 1e-8);
  CHECK(pairs.verdict == SpectrumVerdict::PseudoRealWithPairs);
  CHECK(pairs.maxPairingDefect <= 1e-15);
  CHECK(pairs.pairing.size() == 1);

  CHECK(classifySpectrum(vec({{0, 1}, {0, 2}}), 1e-8).verdict == SpectrumVerdict::NotPseudoReal);
  CHECK_THROWS_AS(classifySpectrum(vec({1}), 0.0), std::invalid_argument);
}

TEST_CASE("classifySpectrum is involution-stable") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    ComplexVector e(6);
    for (int i = 0; i < 3; ++i) {
      const Complex z(u(rng), u(rng));
      e(2 * i) = z;
      e(2 * i + 1) = std::conj(z);
    }
    const auto fwd = classifySpectrum(e, 1e-8);
    const auto bwd = classifySpectrum(e.conjugate(), 1e-8);
    CHECK(fwd.verdict == bwd.verdict);
    // Conjugation swaps the roles inside each pair.
    REQUIRE(fwd.pairing.size() == bwd.pairing.size());
    for (std::size_t k = 0; k < fwd.pairing.size(); ++k) {
      CHECK(fwd.pairing[k].first == bwd.pairing[k].second);
      CHECK(fwd.pairing[k].second == bwd.pairing[k].first);
    }
  }
}

TEST_CASE("verdict monotone in tol") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    ComplexVector e(4);
    for (int i = 0; i < 4; ++i) e(i) = Complex(u(rng), u(rng) * 1e-7);
    for (double tol : {1e-9, 1e-6, 1e-3}) {
      const auto small = classifySpectrum(e, tol);
      const auto large = classifySpectrum(e, tol * 100);
      if (small.verdict == SpectrumVerdict::AllReal) {
        CHECK(large.verdict == SpectrumVerdict::AllReal);
      }
    }
  }
}

TEST_CASE("defectivenessReport on the 2x2 families") {
  // Non-diagonalizable lower-triangular family.
  const auto edJordan = eigendecompose(buildQtReal(1, 1));
  CHECK(defectivenessReport(edJordan, 1e-6).defective);

  // |q| = 1: diagonalizable, real spectrum.
  const auto edFine = eigendecompose(buildWphNonzero({0, 1, Complex(1, 0)}));
  CHECK(!defectivenessReport(edFine, 1e-6).defective);

  // |q| = 2: exceptional point.
  const auto edEp = eigendecompose(buildWphNonzero({0, 1, Complex(2, 0)}));
  CHECK(defectivenessReport(edEp, 1e-6).defective);
}

TEST_CASE("near-degenerate but healthy eigenbasis is not flagged") {
  ComplexMatrix h(2, 2);
  h << Complex(1.0), Complex(0), Complex(0), Complex(1.0 + 1e-9);
  const auto rep = defectivenessReport(eigendecompose(h), 1e-6);
  CHECK(rep.minGap < 1e-6);
  CHECK(!rep.defective);
}

TEST_CASE("quasiHermitianCertificate") {
  // Hermitian input passes at machine scale.
  const ComplexMatrix h = buildHermitian(1, 0.5, -0.3, -2);
  const auto cert = quasiHermitianCertificate(h, eigendecompose(h), 1e-8);
  CHECK(cert.reconstructionResidual <= 1e-12);

  // Reduced Fock interior block.
  const ComplexMatrix hf = buildReducedFock({0, 1, 0, 1}, 14).topLeftCorner(12, 12);
  const auto certF = quasiHermitianCertificate(hf, eigendecompose(hf), 1e-8);
  CHECK(certF.reconstructionResidual <= 1e-8);

  // Complex pair (|q| = 3) refuses.
  const ComplexMatrix hc = buildWphNonzero({1, 2, Complex(3, 0)});
  CHECK_THROWS_AS(quasiHermitianCertificate(hc, eigendecompose(hc), 1e-8), std::domain_error);

  // Defective input refuses.
  const ComplexMatrix hd = buildQtReal(1, 1);
  CHECK_THROWS_AS(quasiHermitianCertificate(hd, eigendecompose(hd), 1e-8), std::domain_error);
}
