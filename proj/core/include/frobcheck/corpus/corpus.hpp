#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frobcheck/errors.hpp"
#include "frobcheck/geometry/ambient.hpp"

namespace frobcheck {

/// Malformed corpus file. Carries the entry and field that failed.
class SchemaError : public Error {
 public:
  SchemaError(std::string entry, std::string field, const std::string& what)
      : Error("entry '" + entry + "', field '" + field + "': " + what),
        entry_(std::move(entry)),
        field_(std::move(field)) {}

  const std::string& entry() const noexcept { return entry_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::string entry_;
  std::string field_;
};

struct CheckSpec {
  std::string kind;  // fsplit, smooth, delta1, chow, lattice
  std::string expect;
  nlohmann::json params = nlohmann::json::object();
};

struct CorpusEntry {
  std::string name;
  std::int64_t prime = 0;
  std::vector<ProjectiveFactor> factors;
  std::string polynomial;
  std::vector<CheckSpec> checks;
  std::string paper_ref;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
};

/// Validates keys, types, check kinds and expectation vocabulary, and
/// parses the ambient and polynomial of entries whose checks use them.
Corpus parse_corpus(const nlohmann::json& j);
Corpus load_corpus(const std::filesystem::path& path);
nlohmann::json corpus_to_json(const Corpus& c);

struct CheckResult {
  std::string name;
  std::string check;
  std::string expected;
  std::string actual;
  bool passed = false;
  double elapsed_ms = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct Report {
  std::vector<CheckResult> results;
  ReportSummary summary;

  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const CheckResult& r);
void from_json(const nlohmann::json& j, CheckResult& r);
void to_json(nlohmann::json& j, const ReportSummary& s);
void from_json(const nlohmann::json& j, ReportSummary& s);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

std::string report_text(const Report& r);

struct RunOptions {
  unsigned jobs = 1;
  /// Off: elapsed_ms is written as 0, making reports reproducible.
  bool timings = true;
};

/// A check that throws is recorded as failed with actual "error: ...".
CheckResult run_check(const CorpusEntry& entry, const CheckSpec& check, bool timings = true);

/// Entries run in parallel up to `jobs`; results stay in entry order.
Report run_corpus(const Corpus& corpus, const RunOptions& options = {});
Report run_corpus(const std::filesystem::path& path, const RunOptions& options = {});

/// 0 when everything passed, 1 otherwise.
int exit_code(const Report& r);

}  // namespace frobcheck
