// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include "lexlint/evaluation.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "csv.h"
#include "json.hpp"
#include "lexlint/errors.h"

namespace lexlint {

std::string_view to_string(Label label) {
  return label == Label::kTruePositive ? "TP" : "FP";
}

namespace {

using Key = std::tuple<std::string, int, std::string>;

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", fraction * 100.0);
  return buf;
}

}  // namespace

std::vector<GroundTruthEntry> parse_truth(std::string_view text,
                                          std::string_view origin) {
  const std::string o(origin);
  const auto rows = csv::parse(text, origin);
  if (rows.empty()) throw FormatError(o + ": empty truth file");
  std::vector<std::string> header;
  for (const auto& f : rows.front().fields) header.push_back(to_lower(trimmed(f)));
  if (header != std::vector<std::string>{"file", "line", "rule_id", "label"}) {
    throw FormatError(o + ": row 1: expected header file,line,rule_id,label");
  }
  std::vector<GroundTruthEntry> out;
  std::map<Key, std::size_t> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string where =
        o + ": row " + std::to_string(r + 1) + " (line " + std::to_string(row.line) + ")";
    if (row.fields.size() != 4) {
      throw FormatError(where + ": expected 4 fields, found " +
                        std::to_string(row.fields.size()));
    }
    GroundTruthEntry e;
    e.file = trimmed(row.fields[0]);
    if (e.file.empty()) throw FormatError(where + ": empty file");
    try {
      std::size_t used = 0;
      const std::string line = trimmed(row.fields[1]);
      e.line = std::stoi(line, &used);
      if (used != line.size() || e.line < 1) throw std::invalid_argument("line");
    } catch (const std::exception&) {
      throw FormatError(where + ": bad line number '" + row.fields[1] + "'");
    }
    e.rule_id = trimmed(row.fields[2]);
    if (!find_rule(e.rule_id)) {
      throw FormatError(where + ": unknown rule id '" + e.rule_id + "'");
    }
    const std::string label = to_lower(trimmed(row.fields[3]));
    if (label == "tp") {
      e.label = Label::kTruePositive;
    } else if (label == "fp") {
      e.label = Label::kFalsePositive;
    } else {
      throw FormatError(where + ": bad label '" + row.fields[3] +
                        "' (expected TP or FP)");
    }
    Key key{e.file, e.line, e.rule_id};
    if (auto it = seen.find(key); it != seen.end()) {
      throw FormatError(where + ": duplicate entry for " + e.file + ":" +
                        std::to_string(e.line) + " " + e.rule_id +
                        " (first seen in row " + std::to_string(it->second) + ")");
    }
    seen.emplace(std::move(key), r + 1);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<GroundTruthEntry> load_truth(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_truth(ss.str(), path.string());
}

PrecisionTable compute_precision(const std::vector<RuleTally>& tallies) {
  std::map<std::string, RuleTally> merged;
  for (const auto& t : tallies) {
    auto& m = merged[t.rule_id];
    m.rule_id = t.rule_id;
    m.detected += t.detected;
    m.tp += t.tp;
    m.fp += t.fp;
  }
  PrecisionTable table;
  double macro_sum = 0.0;
  int macro_rules = 0;
  for (const auto& [id, t] : merged) {
    PrecisionRow row;
    row.rule_id = id;
    row.detected = t.detected;
    row.tp = t.tp;
    row.fp = t.fp;
    row.validated = t.tp + t.fp;
    if (row.validated > 0) {
      row.precision = static_cast<double>(row.tp) / row.validated;
      macro_sum += row.precision;
      ++macro_rules;
    }
    table.detected += row.detected;
    table.validated += row.validated;
    table.tp += row.tp;
    table.fp += row.fp;
    table.rows.push_back(std::move(row));
  }
  if (table.validated == 0) throw EmptyTruthError();
  table.macro_precision = macro_sum / macro_rules;
  table.micro_precision = static_cast<double>(table.tp) / table.validated;
  return table;
}

PrecisionTable compute_precision(const std::vector<GroundTruthEntry>& truth) {
  std::vector<RuleTally> tallies;
  tallies.reserve(truth.size());
  for (const auto& e : truth) {
    const bool tp = e.label == Label::kTruePositive;
    tallies.push_back({e.rule_id, 1, tp ? 1 : 0, tp ? 0 : 1});
  }
  return compute_precision(tallies);
}

MatchResult match_report(const std::vector<Violation>& report,
                         const std::vector<GroundTruthEntry>& truth) {
  std::map<Key, const GroundTruthEntry*> labels;
  for (const auto& e : truth) labels.emplace(Key{e.file, e.line, e.rule_id}, &e);
  std::set<Key> detected;
  MatchResult out;
  for (const auto& v : report) {
    Key key{v.location.file_path, v.location.line, v.rule_id};
    detected.insert(key);
    if (auto it = labels.find(key); it != labels.end()) {
      out.joined.push_back({v, it->second->label});
    } else {
      out.unvalidated.push_back(v);
    }
  }
  for (const auto& e : truth) {
    if (!detected.count(Key{e.file, e.line, e.rule_id})) out.missed.push_back(e);
  }
  return out;
}

std::vector<RuleTally> tallies_from_match(const std::vector<Violation>& report,
                                          const MatchResult& match) {
  std::map<std::string, RuleTally> by_rule;
  for (const auto& v : report) {
    auto& t = by_rule[v.rule_id];
    t.rule_id = v.rule_id;
    ++t.detected;
  }
  std::set<Key> counted;
  for (const auto& j : match.joined) {
    const auto& v = j.violation;
    if (!counted.insert(Key{v.location.file_path, v.location.line, v.rule_id}).second) {
      continue;
    }
    auto& t = by_rule[v.rule_id];
    t.rule_id = v.rule_id;
    (j.label == Label::kTruePositive ? t.tp : t.fp) += 1;
  }
  std::vector<RuleTally> out;
  for (auto& [id, t] : by_rule) out.push_back(std::move(t));
  return out;
}

std::string render_precision_text(const PrecisionTable& table) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof line, "%-6s %9s %9s %7s %7s %10s\n", "Rule",
                "Detected", "Validated", "TP", "FP", "Precision");
  out << line;
  for (const auto& r : table.rows) {
    std::snprintf(line, sizeof line, "%-6s %9d %9d %7d %7d %10s\n",
                  r.rule_id.c_str(), r.detected, r.validated, r.tp, r.fp,
                  r.validated ? percent(r.precision).c_str() : "n/a");
    out << line;
  }
  std::snprintf(line, sizeof line, "%-6s %9d %9d %7d %7d %10s\n", "Total",
                table.detected, table.validated, table.tp, table.fp,
                percent(table.micro_precision).c_str());
  out << line;
  out << "macro precision: " << percent(table.macro_precision) << '\n'
      << "micro precision: " << percent(table.micro_precision) << '\n';
  return out.str();
}

std::string render_precision_json(const PrecisionTable& table,
                                  const MatchResult* match) {
  using ordered_json = nlohmann::ordered_json;
  ordered_json doc = ordered_json::object();
  ordered_json rows = ordered_json::array();
  for (const auto& r : table.rows) {
    ordered_json o = ordered_json::object();
    o["rule_id"] = r.rule_id;
    o["detected"] = r.detected;
    o["validated"] = r.validated;
    o["tp"] = r.tp;
    o["fp"] = r.fp;
    o["precision"] = r.precision;
    rows.push_back(o);
  }
  doc["rules"] = rows;
  doc["detected"] = table.detected;
  doc["validated"] = table.validated;
  doc["tp"] = table.tp;
  doc["fp"] = table.fp;
  doc["macro_precision"] = table.macro_precision;
  doc["micro_precision"] = table.micro_precision;
  if (match) {
    ordered_json missed = ordered_json::array();
    for (const auto& e : match->missed) {
      missed.push_back({{"file", e.file}, {"line", e.line}, {"rule_id", e.rule_id},
                        {"label", std::string(to_string(e.label))}});
    }
    ordered_json unvalidated = ordered_json::array();
    for (const auto& v : match->unvalidated) {
      unvalidated.push_back({{"file", v.location.file_path},
                             {"line", v.location.line},
                             {"rule_id", v.rule_id},
                             {"identifier", v.identifier}});
    }
    doc["joined"] = match->joined.size();
    doc["missed"] = missed;
    doc["unvalidated"] = unvalidated;
  }
  return doc.dump(2) + "\n";
}

}  // namespace lexlint
