// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include "lexlint/lexlint.h"
#include "srcml_builder.h"

namespace lexlint {
namespace {

// Published per-rule (detected, TP, FP) counts of the original evaluation.
std::vector<RuleTally> published_table() {
  return {{"A.1", 53, 34, 0},   {"A.2", 45, 37, 0},     {"A.3", 129, 63, 1},
          {"A.4", 341, 102, 25}, {"B.1", 912, 73, 98},  {"B.2", 446, 165, 1},
          {"B.3", 260, 101, 0}, {"B.4", 18, 5, 11},     {"B.5", 271, 46, 61},
          {"B.6", 827, 128, 31}, {"C.1", 139, 54, 20},  {"C.2", 294, 13, 99},
          {"D.1", 3359, 261, 1}, {"D.2", 83, 53, 0},    {"E.1", 5506, 253, 15},
          {"F.1", 38, 19, 13},  {"F.2", 165, 15, 76},   {"G.1", 1, 1, 0},
          {"G.2", 853, 144, 0}};
}

TEST(Precision, PublishedTableArithmetic) {
  const auto t = compute_precision(published_table());
  EXPECT_NEAR(t.macro_precision * 100, 75.27, 0.01);
  EXPECT_NEAR(t.micro_precision * 100, 77.61, 0.01);
  EXPECT_EQ(t.tp, 1567);
  EXPECT_EQ(t.validated, 2019);
  EXPECT_EQ(t.detected, 13740);
  EXPECT_EQ(t.fp, 452);
  ASSERT_EQ(t.rows.size(), 19u);
  for (const auto& r : t.rows) {
    EXPECT_EQ(r.tp + r.fp, r.validated);
    EXPECT_GE(r.precision, 0.0);
    EXPECT_LE(r.precision, 1.0);
  }
}

TEST(Precision, SingleRuleAndEmpty) {
  const auto t = compute_precision(std::vector<GroundTruthEntry>{{"a.java", 1, "A.1", Label::kTruePositive}});
  EXPECT_DOUBLE_EQ(t.macro_precision, 1.0);
  EXPECT_DOUBLE_EQ(t.micro_precision, 1.0);
  EXPECT_THROW(compute_precision(std::vector<GroundTruthEntry>{}), EmptyTruthError);
  EXPECT_THROW(compute_precision(std::vector<RuleTally>{{"A.1", 5, 0, 0}}), EmptyTruthError);
}

TEST(Precision, MacroSkipsUnvalidatedRules) {
  const auto t = compute_precision(std::vector<RuleTally>{{"A.1", 4, 1, 1}, {"B.1", 9, 0, 0}});
  EXPECT_DOUBLE_EQ(t.macro_precision, 0.5);
  EXPECT_EQ(t.rows.size(), 2u);
}

TEST(Precision, PermutationInvariant) {
  testing::Generator gen(9);
  std::vector<GroundTruthEntry> truth;
  for (int i = 0; i < 500; ++i) {
    truth.push_back({"f" + std::to_string(i % 17) + ".java", i + 1,
                     std::string(rule_catalog()[static_cast<std::size_t>(gen.uniform(0, 18))].id),
                     gen.chance(0.7) ? Label::kTruePositive : Label::kFalsePositive});
  }
  const auto base = compute_precision(truth);
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(truth.begin(), truth.end(), rng);
    const auto t = compute_precision(truth);
    EXPECT_EQ(t.rows, base.rows);
    EXPECT_DOUBLE_EQ(t.macro_precision, base.macro_precision);
    EXPECT_DOUBLE_EQ(t.micro_precision, base.micro_precision);
  }
}

TEST(Precision, EqualPrecisionsGiveThatMacro) {
  testing::Generator gen(10);
  for (int i = 0; i < 100; ++i) {
    const int scale = gen.uniform(1, 4);
    std::vector<RuleTally> tallies;
    for (const auto& r : rule_catalog()) {
      const int k = gen.uniform(1, 5) * scale;
      tallies.push_back({std::string(r.id), 4 * k, 3 * k, k});
    }
    EXPECT_NEAR(compute_precision(tallies).macro_precision, 0.75, 1e-12);
  }
}

TEST(Truth, ParsesAndNormalizesLabels) {
  const auto t = parse_truth(
      "file,line,rule_id,label\n"
      "A.java,3,B.6,TP\n"
      "A.java,4,C.1,fp\n"
      "\"B, C.java\",9,A.1,tp\n",
      "t.csv");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[1].label, Label::kFalsePositive);
  EXPECT_EQ(t[2].label, Label::kTruePositive);
  EXPECT_EQ(t[2].file, "B, C.java");
}

std::string truth_error(const std::string& body) {
  try {
    parse_truth("file,line,rule_id,label\n" + body, "t.csv");
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

TEST(Truth, ErrorsNameTheRow) {
  EXPECT_NE(truth_error("A.java,3,B.6,TP\nA.java,3,B.6,FP\n").find("row 3"), std::string::npos);
  EXPECT_NE(truth_error("A.java,3,B.6,TP\nA.java,3,B.6,FP\n").find("duplicate"),
            std::string::npos);
  EXPECT_NE(truth_error("A.java,3,B.6,maybe\n").find("row 2"), std::string::npos);
  EXPECT_NE(truth_error("A.java,x,B.6,TP\n").find("bad line"), std::string::npos);
  EXPECT_NE(truth_error("A.java,3,Z.6,TP\n").find("unknown rule"), std::string::npos);
  EXPECT_NE(truth_error("A.java,3,B.6\n").find("expected 4 fields"), std::string::npos);
  EXPECT_THROW(parse_truth("", "t.csv"), FormatError);
  EXPECT_THROW(parse_truth("a,b,c,d\n", "t.csv"), FormatError);
}

Violation detection(const std::string& file, int line, const std::string& id) {
  Violation v;
  v.rule_id = id;
  v.location = {file, line, 1};
  v.identifier = "x";
  return v;
}

TEST(Match, JoinsMissesAndUnvalidated) {
  const std::vector<Violation> report = {detection("A.java", 3, "B.6"),
                                         detection("A.java", 5, "C.1"),
                                         detection("A.java", 7, "E.1")};
  const std::vector<GroundTruthEntry> truth = {{"A.java", 3, "B.6", Label::kTruePositive},
                                               {"A.java", 5, "C.1", Label::kFalsePositive},
                                               {"A.java", 9, "D.1", Label::kTruePositive}};
  const auto m = match_report(report, truth);
  ASSERT_EQ(m.joined.size(), 2u);
  EXPECT_EQ(m.joined[1].label, Label::kFalsePositive);
  ASSERT_EQ(m.missed.size(), 1u);
  EXPECT_EQ(m.missed[0].rule_id, "D.1");
  ASSERT_EQ(m.unvalidated.size(), 1u);
  EXPECT_EQ(m.unvalidated[0].rule_id, "E.1");

  const auto table = compute_precision(tallies_from_match(report, m));
  EXPECT_EQ(table.detected, 3);
  EXPECT_EQ(table.validated, 2);
  EXPECT_DOUBLE_EQ(table.micro_precision, 0.5);
  const auto text = render_precision_text(table);
  EXPECT_NE(text.find("macro precision: 50.00%"), std::string::npos);
  EXPECT_NE(text.find("n/a"), std::string::npos);  // E.1 detected but unvalidated
  EXPECT_NE(render_precision_json(table, &m).find("\"unvalidated\""), std::string::npos);
}

}  // namespace
}  // namespace lexlint
