// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include "lexlint/report.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "csv.h"
#include "json.hpp"
#include "lexlint/errors.h"
#include "lexlint/version.h"

namespace lexlint {

using ordered_json = nlohmann::ordered_json;

namespace {

// Column order of the CSV and of each JSON violation object.
const std::vector<std::string>& columns() {
  static const std::vector<std::string> kOrder = {
      "rule_id", "rule_name", "entity_kind", "identifier", "file",
      "line",    "column",    "type",        "evidence",   "recommendation"};
  return kOrder;
}

ordered_json evidence_json(const Evidence& evidence) {
  ordered_json out = ordered_json::object();
  for (const auto& [key, value] : evidence) {
    if (const auto* s = std::get_if<std::string>(&value)) {
      out[key] = *s;
    } else {
      out[key] = std::get<std::vector<std::string>>(value);
    }
  }
  return out;
}

Evidence evidence_of(const ordered_json& j, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": evidence is not an object");
  Evidence out;
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) {
      out[key] = value.get<std::string>();
    } else if (value.is_array()) {
      std::vector<std::string> items;
      for (const auto& item : value) {
        if (!item.is_string()) {
          throw FormatError(where + ": evidence." + key + " holds a non-string");
        }
        items.push_back(item.get<std::string>());
      }
      out[key] = std::move(items);
    } else {
      throw FormatError(where + ": evidence." + key + " must be a string or list");
    }
  }
  return out;
}

ordered_json violation_json(const Violation& v) {
  ordered_json o = ordered_json::object();
  o["rule_id"] = v.rule_id;
  o["rule_name"] = v.rule_name;
  o["entity_kind"] = std::string(to_string(v.entity_kind));
  o["identifier"] = v.identifier;
  o["file"] = v.location.file_path;
  o["line"] = v.location.line;
  o["column"] = v.location.column;
  o["type"] = v.type;
  o["evidence"] = evidence_json(v.evidence);
  o["recommendation"] = v.recommendation;
  return o;
}

EntityKind entity_kind_of(const std::string& s, const std::string& where) {
  auto kind = parse_entity_kind(s);
  if (!kind) throw FormatError(where + ": unknown entity_kind '" + s + "'");
  return *kind;
}

int int_of(const std::string& s, const std::string& where, const char* key) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw FormatError(where + ": " + key + " is not an integer: '" + s + "'");
}

Violation violation_of(const ordered_json& o, const std::string& where) {
  if (!o.is_object()) throw FormatError(where + ": violation is not an object");
  auto str = [&](const char* key) -> std::string {
    auto it = o.find(key);
    if (it == o.end() || !it->is_string()) {
      throw FormatError(where + ": missing string field '" + key + "'");
    }
    return it->get<std::string>();
  };
  auto num = [&](const char* key) -> int {
    auto it = o.find(key);
    if (it == o.end() || !it->is_number_integer()) {
      throw FormatError(where + ": missing integer field '" + key + "'");
    }
    return it->get<int>();
  };
  Violation v;
  v.rule_id = str("rule_id");
  v.rule_name = str("rule_name");
  v.entity_kind = entity_kind_of(str("entity_kind"), where);
  v.identifier = str("identifier");
  v.location.file_path = str("file");
  v.location.line = num("line");
  v.location.column = num("column");
  v.type = str("type");
  auto ev = o.find("evidence");
  if (ev == o.end()) throw FormatError(where + ": missing field 'evidence'");
  v.evidence = evidence_of(*ev, where);
  v.recommendation = str("recommendation");
  return v;
}

std::string evidence_text(const Evidence& evidence) {
  std::string out;
  for (const auto& [key, value] : evidence) {
    if (!out.empty()) out += ", ";
    out += key + "=";
    if (const auto* s = std::get_if<std::string>(&value)) {
      out += *s;
    } else {
      const auto& list = std::get<std::vector<std::string>>(value);
      out += "(";
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out += ", ";
        out += list[i];
      }
      out += ")";
    }
  }
  return out;
}

}  // namespace

std::map<std::string, int> tally(const std::vector<Violation>& violations) {
  std::map<std::string, int> out;
  for (const auto& v : violations) ++out[v.rule_id];
  return out;
}

AnalysisReport make_report(const AnalysisResult& result,
                           std::optional<std::int64_t> elapsed_ms) {
  AnalysisReport r;
  r.tool_version = std::string(kToolVersion);
  r.inputs = result.inputs;
  r.violations = result.violations;
  std::stable_sort(r.violations.begin(), r.violations.end(), violation_less);
  r.summary = tally(r.violations);
  r.elapsed_ms = elapsed_ms;
  return r;
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  return std::nullopt;
}

std::string render_report(const AnalysisReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kText:
      return render_text(report);
    case ReportFormat::kJson:
      return render_json(report);
    case ReportFormat::kCsv:
      return render_csv(report.violations);
  }
  return {};
}

std::string render_json(const AnalysisReport& report) {
  ordered_json doc = ordered_json::object();
  doc["version"] = std::string(kReportSchemaVersion);
  doc["tool_version"] = report.tool_version;
  ordered_json inputs = ordered_json::object();
  inputs["archives"] = report.inputs.archives;
  inputs["analyzed"] = report.inputs.analyzed;
  ordered_json skipped = ordered_json::array();
  for (const auto& s : report.inputs.skipped) {
    skipped.push_back({{"file", s.file}, {"reason", s.reason}});
  }
  inputs["skipped"] = skipped;
  doc["inputs"] = inputs;
  ordered_json summary = ordered_json::object();
  for (const auto& [id, n] : report.summary) summary[id] = n;
  doc["summary"] = summary;
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations) violations.push_back(violation_json(v));
  doc["violations"] = violations;
  if (report.elapsed_ms) doc["elapsed_ms"] = *report.elapsed_ms;
  return doc.dump(2) + "\n";
}

std::string render_csv(const std::vector<Violation>& violations) {
  std::string out;
  csv::append_row(out, columns());
  for (const auto& v : violations) {
    csv::append_row(out, {v.rule_id, v.rule_name,
                          std::string(to_string(v.entity_kind)), v.identifier,
                          v.location.file_path, std::to_string(v.location.line),
                          std::to_string(v.location.column), v.type,
                          evidence_to_json(v.evidence), v.recommendation});
  }
  return out;
}

std::string render_text(const AnalysisReport& report) {
  std::ostringstream out;
  std::string current_file;
  std::size_t files = 0;
  for (const auto& v : report.violations) {
    if (files == 0 || v.location.file_path != current_file) {
      if (files) out << '\n';
      current_file = v.location.file_path;
      ++files;
      out << current_file << '\n';
    }
    out << "  " << v.location.line << ':' << v.location.column << "  "
        << v.rule_id << "  " << to_string(v.entity_kind) << " '"
        << v.identifier << "'";
    if (!v.type.empty()) out << " : " << v.type;
    out << "  " << v.rule_name << '\n';
    if (!v.evidence.empty()) {
      out << "      evidence: " << evidence_text(v.evidence) << '\n';
    }
    out << "      fix: " << v.recommendation << '\n';
  }
  if (files) out << '\n';
  out << report.violations.size()
      << (report.violations.size() == 1 ? " violation" : " violations")
      << " in " << files << (files == 1 ? " file" : " files") << " ("
      << report.inputs.analyzed.size() << " analyzed, "
      << report.inputs.skipped.size() << " skipped)\n";
  if (!report.summary.empty()) {
    out << "by rule:";
    for (const auto& [id, n] : report.summary) out << ' ' << id << '=' << n;
    out << '\n';
  }
  for (const auto& s : report.inputs.skipped) {
    out << "skipped " << s.file << ": " << s.reason << '\n';
  }
  return out.str();
}

std::string evidence_to_json(const Evidence& evidence) {
  return evidence_json(evidence).dump();
}

Evidence evidence_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed evidence JSON: ") + e.what());
  }
  return evidence_of(j, "evidence");
}

AnalysisReport read_report_json(std::string_view text, std::string_view origin) {
  const std::string where(origin);
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(where + ": malformed JSON report: " + e.what());
  }
  if (!doc.is_object()) throw FormatError(where + ": report is not an object");
  auto version = doc.find("version");
  if (version == doc.end() || !version->is_string() ||
      version->get<std::string>() != kReportSchemaVersion) {
    throw FormatError(where + ": unsupported report version (expected \"" +
                      std::string(kReportSchemaVersion) + "\")");
  }
  AnalysisReport r;
  if (auto it = doc.find("tool_version"); it != doc.end() && it->is_string()) {
    r.tool_version = it->get<std::string>();
  }
  if (auto it = doc.find("inputs"); it != doc.end() && it->is_object()) {
    const auto list = [&](const char* key) {
      std::vector<std::string> out;
      if (auto l = it->find(key); l != it->end() && l->is_array()) {
        for (const auto& s : *l) {
          if (s.is_string()) out.push_back(s.get<std::string>());
        }
      }
      return out;
    };
    r.inputs.archives = list("archives");
    r.inputs.analyzed = list("analyzed");
    if (auto s = it->find("skipped"); s != it->end() && s->is_array()) {
      for (const auto& item : *s) {
        r.inputs.skipped.push_back({item.value("file", ""), item.value("reason", "")});
      }
    }
  }
  auto violations = doc.find("violations");
  if (violations == doc.end() || !violations->is_array()) {
    throw FormatError(where + ": report has no violations array");
  }
  for (std::size_t i = 0; i < violations->size(); ++i) {
    r.violations.push_back(violation_of(
        (*violations)[i], where + ": violations[" + std::to_string(i) + "]"));
  }
  if (auto it = doc.find("summary"); it != doc.end() && it->is_object()) {
    for (const auto& [id, n] : it->items()) {
      if (n.is_number_integer()) r.summary[id] = n.get<int>();
    }
  }
  if (auto it = doc.find("elapsed_ms"); it != doc.end() && it->is_number_integer()) {
    r.elapsed_ms = it->get<std::int64_t>();
  }
  return r;
}

std::vector<Violation> read_report_csv(std::string_view text,
                                       std::string_view origin) {
  const auto rows = csv::parse(text, origin);
  const std::string o(origin);
  if (rows.empty()) throw FormatError(o + ": empty CSV report");
  if (rows.front().fields != columns()) {
    throw FormatError(o + ":" + std::to_string(rows.front().line) +
                      ": unexpected CSV header");
  }
  std::vector<Violation> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string where = o + ":" + std::to_string(row.line);
    if (row.fields.size() != columns().size()) {
      throw FormatError(where + ": expected " + std::to_string(columns().size()) +
                        " fields, found " + std::to_string(row.fields.size()));
    }
    const auto& f = row.fields;
    Violation v;
    v.rule_id = f[0];
    v.rule_name = f[1];
    v.entity_kind = entity_kind_of(f[2], where);
    v.identifier = f[3];
    v.location.file_path = f[4];
    v.location.line = int_of(f[5], where, "line");
    v.location.column = int_of(f[6], where, "column");
    v.type = f[7];
    try {
      v.evidence = evidence_from_json(f[8]);
    } catch (const FormatError& e) {
      throw FormatError(where + ": " + e.what());
    }
    v.recommendation = f[9];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Violation> read_report_violations(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return read_report_json(text, path.string()).violations;
  }
  return read_report_csv(text, path.string());
}

}  // namespace lexlint
