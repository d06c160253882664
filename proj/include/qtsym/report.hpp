#pragma once

// Machine-readable analysis reports: a single JSON document with a stable
// schema plus optional CSV spectrum sidecars. Numbers serialize through
// nlohmann::json's shortest round-trip rendering, so reports reload
// bit-exactly.

#include <nlohmann/json.hpp>
#include <string>

#include "qtsym/classify.hpp"
#include "qtsym/numcore.hpp"

namespace qtsym {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json spectrumToJson(const ComplexVector& eigs);
nlohmann::json classificationToJson(const SpectrumClassification& c);

// FNV-1a over the canonical input string; stable across runs.
std::string configHash(const std::string& canonicalInput);

// Assembles the report envelope: schema version, model block, and
// provenance (tool version, config hash, RFC 3339 timestamp).
nlohmann::json makeReport(const std::string& modelTag, const nlohmann::json& params,
                          const std::string& canonicalInput);

// Atomic write: temp file in the destination directory, then rename.
void writeFileAtomic(const std::string& path, const std::string& contents);

std::string spectrumCsv(const ComplexVector& eigs);

}  // namespace qtsym
