#include "cfree/io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace cfree {

namespace {

std::vector<std::pair<Word, Rat>> canonical_entries(const NcSeries& s,
                                                    bool with_unit) {
  std::vector<std::pair<Word, Rat>> out;
  for (const auto& [w, c] : s.terms()) {
    if (!with_unit && w.empty()) continue;
    out.emplace_back(w, c);
  }
  return out;
}

}  // namespace

StateDocument document_from_functional(const Functional& f, std::string name) {
  StateDocument doc;
  doc.name = std::move(name);
  doc.type = "functional";
  doc.d = f.alphabet();
  doc.truncation = f.truncation();
  doc.entries = canonical_entries(f.moments(), true);
  return doc;
}

StateDocument document_from_series(const NcSeries& s, std::string name) {
  if (s.constant_term() != 0)
    throw std::invalid_argument(
        "document_from_series: series documents need zero constant term");
  StateDocument doc;
  doc.name = std::move(name);
  doc.type = "series";
  doc.d = s.alphabet();
  doc.truncation = s.truncation();
  doc.entries = canonical_entries(s, false);
  return doc;
}

NcSeries series_from_document(const StateDocument& doc) {
  NcSeries s(doc.d, doc.truncation);
  for (const auto& [w, c] : doc.entries) {
    if (w.degree() > doc.truncation || w.max_letter() > doc.d)
      throw std::invalid_argument("state document: word out of range");
    s.set_coeff(w, c);
  }
  return s;
}

Functional functional_from_document(const StateDocument& doc) {
  if (doc.type != "functional")
    throw std::invalid_argument(
        "state document: expected a functional document");
  NcSeries s = series_from_document(doc);
  if (s.constant_term() != 1)
    throw std::invalid_argument(
        "state document: functional needs the empty-word entry 1/1");
  return Functional(std::move(s));
}

nlohmann::json to_json(const StateDocument& doc) {
  nlohmann::json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["type"] = doc.type;
  j["d"] = doc.d;
  j["N"] = doc.truncation;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [w, c] : doc.entries) {
    nlohmann::json entry;
    entry["word"] = w.letters();
    entry["value"] = rat_to_string(c);
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

StateDocument state_document_from_json(const nlohmann::json& j) {
  StateDocument doc;
  if (j.contains("name")) doc.name = j.at("name").get<std::string>();
  doc.type = j.value("type", std::string("functional"));
  if (doc.type != "functional" && doc.type != "series")
    throw std::invalid_argument("state document: unknown type");
  doc.d = j.at("d").get<int>();
  doc.truncation = j.at("N").get<int>();
  bool unit_seen = false;
  for (const auto& entry : j.at("entries")) {
    Word w(entry.at("word").get<std::vector<int>>());
    Rat value = rat_from_string(entry.at("value").get<std::string>());
    if (w.empty()) {
      unit_seen = true;
      if (doc.type == "functional" && value != 1)
        throw std::invalid_argument(
            "state document: functional needs the empty-word entry 1/1");
      if (doc.type == "series")
        throw std::invalid_argument(
            "state document: series documents carry no empty-word entry");
    }
    doc.entries.emplace_back(w, std::move(value));
  }
  if (doc.type == "functional" && !unit_seen)
    throw std::invalid_argument(
        "state document: functional needs the empty-word entry 1/1");
  std::sort(doc.entries.begin(), doc.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return doc;
}

StateDocument load_state_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return state_document_from_json(j);
}

void save_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

bool ReportDocument::all_pass() const {
  for (const auto& r : records)
    if (r.verdict == "fail") return false;
  return true;
}

nlohmann::json to_json(const ReportDocument& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json rec;
    rec["id"] = r.id;
    rec["anchor"] = r.anchor;
    rec["params"] = r.params;
    rec["verdict"] = r.verdict;
    if (!r.witness.is_null()) rec["witness"] = r.witness;
    if (r.has_residual) rec["residual"] = r.residual;
    rec["seed"] = r.seed;
    rec["wall_ms"] = r.wall_ms;
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  j["all_pass"] = report.all_pass();
  return j;
}

}  // namespace cfree
