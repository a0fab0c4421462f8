#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fecc {

/// One piece of evidence for a failed property: what went wrong, the
/// offending 1-based indices, and the offending value rendered as text.
struct WitnessEntry {
  std::string kind;
  std::vector<long> indices;
  std::string value;
};

/// Pass/fail record for one property. A failing report always carries at
/// least one witness entry.
struct VerificationReport {
  static constexpr std::size_t kMaxWitnessEntries = 64;

  std::string property;
  bool pass = true;
  std::vector<WitnessEntry> witness;
  std::vector<std::pair<std::string, long>> parameters;
  std::size_t failures = 0;

  VerificationReport() = default;
  VerificationReport(std::string name, std::vector<std::pair<std::string, long>> params)
      : property(std::move(name)), parameters(std::move(params)) {}

  void fail(WitnessEntry entry) {
    pass = false;
    ++failures;
    if (witness.size() < kMaxWitnessEntries) witness.push_back(std::move(entry));
  }

  /// Merges the evidence of another report into this one.
  void absorb(const VerificationReport& other) {
    for (const auto& w : other.witness) fail(w);
    if (!other.pass && other.witness.empty()) fail({other.property, {}, "failed"});
  }

  bool has_witness_kind(const std::string& kind) const {
    for (const auto& w : witness)
      if (w.kind == kind) return true;
    return false;
  }
};

}  // namespace fecc
