#pragma once

#include <json.hpp>
#include <string>

#include "cfree/functional.hpp"

namespace cfree {

/// Serialized series data. `type` distinguishes functionals (empty-word
/// entry "1/1" required) from plain series such as cumulant outputs (zero
/// constant term, no empty-word entry). Entries are kept in canonical
/// (degree, lex) order with lowest-terms rational strings, so emit/ingest
/// round-trips are bit-identical.
struct StateDocument {
  std::string name;                 // optional
  std::string type = "functional";  // "functional" | "series"
  int d = 1;
  int truncation = 0;
  std::vector<std::pair<Word, Rat>> entries;
};

StateDocument document_from_functional(const Functional& f,
                                       std::string name = "");
StateDocument document_from_series(const NcSeries& s, std::string name = "");
Functional functional_from_document(const StateDocument& doc);
NcSeries series_from_document(const StateDocument& doc);

nlohmann::json to_json(const StateDocument& doc);
StateDocument state_document_from_json(const nlohmann::json& j);

StateDocument load_state_document(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

/// One verification record: which identity ran, with what parameters, and
/// how it came out. Failing records carry a witness (first failing word or
/// degree); float checks carry a residual.
struct CheckRecord {
  std::string id;
  std::string anchor;  // the identity being checked, human readable
  nlohmann::json params;
  std::string verdict;  // "pass" | "fail" | "skipped"
  nlohmann::json witness;
  bool has_residual = false;
  double residual = 0;
  uint64_t seed = 0;
  double wall_ms = 0;
};

struct ReportDocument {
  std::string suite;
  std::vector<CheckRecord> records;

  bool all_pass() const;
};

nlohmann::json to_json(const ReportDocument& report);

}  // namespace cfree
