#pragma once

// Spectrum classification: pseudo-reality (conjugate pairing of nonreal
// eigenvalues), defectiveness, and quasi-Hermiticity certificates.

#include <cstddef>
#include <utility>
#include <vector>

#include "qtsym/numcore.hpp"

namespace qtsym {

enum class SpectrumVerdict { AllReal, PseudoRealWithPairs, NotPseudoReal };

struct SpectrumClassification {
  SpectrumVerdict verdict = SpectrumVerdict::AllReal;
  std::vector<std::pair<std::size_t, std::size_t>> pairing;  // conjugate-matched index pairs
  double maxPairingDefect = 0.0;
  bool defective = false;
};

const char* verdictName(SpectrumVerdict v);

// Scale-free default: 1e-8 * max(1, spectral radius).
double defaultSpectrumTol(const ComplexVector& eigs);

SpectrumClassification classifySpectrum(const ComplexVector& eigs, double tol);

struct DefectivenessReport {
  bool defective = false;
  double minGap = 0.0;
  double cond = 0.0;
};

// Defective requires BOTH an ill-conditioned eigenbasis and near-degenerate
// eigenvalues, so an accidentally close pair with a healthy basis is not
// flagged.
DefectivenessReport defectivenessReport(const EigenDecomposition& ed, double gapTol);

struct QuasiHermitianCertificate {
  double reconstructionResidual = 0.0;  // |S L S^-1 - H| / |H|
  double condS = 0.0;
};

// Verifies H = S Lambda S^-1 with Lambda real diagonal. Throws
// std::domain_error if the decomposition is defective or an eigenvalue has
// imaginary part beyond tol.
QuasiHermitianCertificate quasiHermitianCertificate(const ComplexMatrix& h,
                                                    const EigenDecomposition& ed,
                                                    double tol);

}  // namespace qtsym
