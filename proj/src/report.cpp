#include "qtsym/report.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qtsym {

nlohmann::json spectrumToJson(const ComplexVector& eigs) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    arr.push_back({{"index", i}, {"re", eigs(i).real()}, {"im", eigs(i).imag()}});
  }
  return arr;
}

nlohmann::json classificationToJson(const SpectrumClassification& c) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [i, j] : c.pairing) pairs.push_back({i, j});
  return {{"verdict", verdictName(c.verdict)},
          {"pairing", pairs},
          {"max_pairing_defect", c.maxPairingDefect},
          {"defective", c.defective}};
}

std::string configHash(const std::string& canonicalInput) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : canonicalInput) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

namespace {

std::string timestampUtc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

nlohmann::json makeReport(const std::string& modelTag, const nlohmann::json& params,
                          const std::string& canonicalInput) {
  return {{"schema_version", kReportSchemaVersion},
          {"model", {{"tag", modelTag}, {"params", params}}},
          {"provenance",
           {{"tool_version", kToolVersion},
            {"config_hash", configHash(canonicalInput)},
            {"timestamp", timestampUtc()}}}};
}

void writeFileAtomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << contents;
  }
  fs::rename(tmp, target);
}

std::string spectrumCsv(const ComplexVector& eigs) {
  std::ostringstream out;
  out << "index,Re(E),Im(E)\n";
  out.precision(17);
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    out << i << "," << eigs(i).real() << "," << eigs(i).imag() << "\n";
  }
  return out.str();
}

}  // namespace qtsym
