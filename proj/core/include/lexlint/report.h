// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

// Analysis reports and their text, JSON and CSV renderings.
//
// JSON layout (schema version "1"):
//
//   {
//     "version": "1",
//     "tool_version": "0.1.0",
//     "inputs": {"archives": [...], "analyzed": [...],
//                "skipped": [{"file": ..., "reason": ...}]},
//     "summary": {"B.6": 1},
//     "violations": [{"rule_id", "rule_name", "entity_kind", "identifier",
//                     "file", "line", "column", "type", "evidence",
//                     "recommendation"}],
//     "elapsed_ms": 12          (omitted in deterministic mode)
//   }
//
// CSV has one row per violation with the violation keys above as columns;
// the evidence column holds the evidence object as compact JSON.

#ifndef LEXLINT_REPORT_H_
#define LEXLINT_REPORT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexlint/analysis.h"
#include "lexlint/rules.h"

namespace lexlint {

struct AnalysisReport {
  std::string tool_version;
  InputManifest inputs;
  std::map<std::string, int> summary;  // rule id -> count, non-zero only
  std::vector<Violation> violations;
  std::optional<std::int64_t> elapsed_ms;

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport make_report(const AnalysisResult& result,
                           std::optional<std::int64_t> elapsed_ms = {});

std::map<std::string, int> tally(const std::vector<Violation>& violations);

enum class ReportFormat { kText, kJson, kCsv };

std::optional<ReportFormat> parse_report_format(std::string_view name);

std::string render_report(const AnalysisReport& report, ReportFormat format);
std::string render_text(const AnalysisReport& report);
std::string render_json(const AnalysisReport& report);
std::string render_csv(const std::vector<Violation>& violations);

// Compact JSON for an evidence map, as used in the CSV column.
std::string evidence_to_json(const Evidence& evidence);
Evidence evidence_from_json(std::string_view text);

// Reading reports back. Throws FormatError on malformed content.
AnalysisReport read_report_json(std::string_view text, std::string_view origin);
std::vector<Violation> read_report_csv(std::string_view text,
                                       std::string_view origin);
// Detects JSON vs CSV by content. Throws IoError when unreadable.
std::vector<Violation> read_report_violations(const std::filesystem::path& path);

}  // namespace lexlint

#endif  // LEXLINT_REPORT_H_
