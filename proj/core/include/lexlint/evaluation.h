// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

// Precision of a report against manually labeled detections.

#ifndef LEXLINT_EVALUATION_H_
#define LEXLINT_EVALUATION_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lexlint/rules.h"

namespace lexlint {

enum class Label { kTruePositive, kFalsePositive };

std::string_view to_string(Label label);  // "TP" / "FP"

struct GroundTruthEntry {
  std::string file;
  int line = 0;
  std::string rule_id;
  Label label = Label::kTruePositive;

  bool operator==(const GroundTruthEntry&) const = default;
};

// CSV with header "file,line,rule_id,label"; labels are TP/FP in any case.
// Throws FormatError naming the row on bad labels, bad line numbers,
// missing columns or duplicate (file, line, rule_id) keys.
std::vector<GroundTruthEntry> parse_truth(std::string_view text,
                                          std::string_view origin);
std::vector<GroundTruthEntry> load_truth(const std::filesystem::path& path);

struct RuleTally {
  std::string rule_id;
  int detected = 0;  // may exceed tp + fp when only a sample was validated
  int tp = 0;
  int fp = 0;

  bool operator==(const RuleTally&) const = default;
};

struct PrecisionRow {
  std::string rule_id;
  int detected = 0;
  int validated = 0;
  int tp = 0;
  int fp = 0;
  double precision = 0.0;  // tp / validated, 0 when nothing was validated

  bool operator==(const PrecisionRow&) const = default;
};

struct PrecisionTable {
  std::vector<PrecisionRow> rows;  // by rule id
  int detected = 0;
  int validated = 0;
  int tp = 0;
  int fp = 0;
  // Unweighted mean over rules with validated > 0.
  double macro_precision = 0.0;
  // Pooled tp / validated.
  double micro_precision = 0.0;

  bool operator==(const PrecisionTable&) const = default;
};

// Throws EmptyTruthError when nothing was validated.
PrecisionTable compute_precision(const std::vector<RuleTally>& tallies);

// Each entry counts as one detection and one validation of its rule.
PrecisionTable compute_precision(const std::vector<GroundTruthEntry>& truth);

struct JoinedRow {
  Violation violation;
  Label label = Label::kTruePositive;

  bool operator==(const JoinedRow&) const = default;
};

struct MatchResult {
  std::vector<JoinedRow> joined;
  std::vector<GroundTruthEntry> missed;  // labels without a detection
  std::vector<Violation> unvalidated;    // detections without a label

  bool operator==(const MatchResult&) const = default;
};

// Joins on (file, line, rule_id).
MatchResult match_report(const std::vector<Violation>& report,
                         const std::vector<GroundTruthEntry>& truth);

// Detected counts from the whole report, tp/fp from its labeled part.
// Several detections sharing one key are one validated sample.
std::vector<RuleTally> tallies_from_match(const std::vector<Violation>& report,
                                          const MatchResult& match);

std::string render_precision_text(const PrecisionTable& table);
std::string render_precision_json(const PrecisionTable& table,
                                  const MatchResult* match = nullptr);

}  // namespace lexlint

#endif  // LEXLINT_EVALUATION_H_
