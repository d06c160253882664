#include "qtsym/classify.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qtsym {

const char* verdictName(SpectrumVerdict v) {
  switch (v) {
    case SpectrumVerdict::AllReal: return "AllReal";
    case SpectrumVerdict::PseudoRealWithPairs: return "PseudoRealWithPairs";
    case SpectrumVerdict::NotPseudoReal: return "NotPseudoReal";
  }
  return "?";
}

double defaultSpectrumTol(const ComplexVector& eigs) {
  double radius = 0.0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i) radius = std::max(radius, std::abs(eigs(i)));
  return 1e-8 * std::max(1.0, radius);
}

SpectrumClassification classifySpectrum(const ComplexVector& eigs, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("classifySpectrum: tol must be positive");

  SpectrumClassification out;
  std::vector<std::size_t> upper;  // Im > tol
  std::vector<std::size_t> lower;  // Im < -tol
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    if (eigs(i).imag() > tol) upper.push_back(static_cast<std::size_t>(i));
    else if (eigs(i).imag() < -tol) lower.push_back(static_cast<std::size_t>(i));
  }

  if (upper.empty() && lower.empty()) {
    out.verdict = SpectrumVerdict::AllReal;
    return out;
  }
  if (upper.size() != lower.size()) {
    out.verdict = SpectrumVerdict::NotPseudoReal;
    return out;
  }

  // Greedy nearest-conjugate matching, smallest real part first for
  // determinism. maxPairingDefect exposes any mismatch the greedy pass
  // glosses over.
  auto byValue = [&](std::size_t i, std::size_t j) {
    if (eigs(i).real() != eigs(j).real()) return eigs(i).real() < eigs(j).real();
    return eigs(i).imag() < eigs(j).imag();
  };
  std::sort(upper.begin(), upper.end(), byValue);
  std::vector<bool> used(lower.size(), false);

  for (std::size_t i : upper) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bestK = lower.size();
    for (std::size_t k = 0; k < lower.size(); ++k) {
      if (used[k]) continue;
      const double d = std::abs(eigs(i) - std::conj(eigs(lower[k])));
      if (d < best) {
        best = d;
        bestK = k;
      }
    }
    if (bestK == lower.size() || best > tol) {
      out.verdict = SpectrumVerdict::NotPseudoReal;
      out.maxPairingDefect = std::max(out.maxPairingDefect, best);
      return out;
    }
    used[bestK] = true;
    out.pairing.emplace_back(i, lower[bestK]);
    out.maxPairingDefect = std::max(out.maxPairingDefect, best);
  }
  out.verdict = SpectrumVerdict::PseudoRealWithPairs;
  return out;
}

DefectivenessReport defectivenessReport(const EigenDecomposition& ed, double gapTol) {
  DefectivenessReport rep;
  rep.cond = ed.vectorConditionNumber;
  rep.minGap = std::numeric_limits<double>::infinity();
  const auto& e = ed.eigenvalues;
  for (Eigen::Index i = 0; i < e.size(); ++i)
    for (Eigen::Index j = i + 1; j < e.size(); ++j)
      rep.minGap = std::min(rep.minGap, std::abs(e(i) - e(j)));
  if (e.size() < 2) rep.minGap = std::numeric_limits<double>::infinity();
  rep.defective = (rep.cond > kDefectThreshold) && (rep.minGap < gapTol);
  return rep;
}

QuasiHermitianCertificate quasiHermitianCertificate(const ComplexMatrix& h,
                                                    const EigenDecomposition& ed,
                                                    double tol) {
  const DefectivenessReport rep = defectivenessReport(ed, 1e-6 * std::max(1.0, h.norm()));
  if (ed.defective() || rep.defective) {
    throw std::domain_error("quasiHermitianCertificate: eigenbasis is defective");
  }
  for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
    if (std::abs(ed.eigenvalues(i).imag()) > tol) {
      throw std::domain_error(
          "quasiHermitianCertificate: spectrum has a complex eigenvalue beyond tolerance");
    }
  }
  const ComplexMatrix& s = ed.eigenvectors;
  ComplexMatrix lambda = ComplexMatrix::Zero(h.rows(), h.cols());
  for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
    lambda(i, i) = Complex(ed.eigenvalues(i).real(), 0.0);
  }
  QuasiHermitianCertificate cert;
  cert.condS = conditionNumber(s);
  cert.reconstructionResidual =
      (s * lambda * s.inverse() - h).norm() / std::max(1.0, h.norm());
  return cert;
}

}  // namespace qtsym
