// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

// The nineteen naming anti-pattern detectors and their orchestration.

#ifndef LEXLINT_RULES_H_
#define LEXLINT_RULES_H_

#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lexlint/code_model.h"
#include "lexlint/lexicon.h"

namespace lexlint {

// Evidence values are either a single string or a list (antonym pairs).
using EvidenceValue = std::variant<std::string, std::vector<std::string>>;
using Evidence = std::map<std::string, EvidenceValue>;

struct Violation {
  std::string rule_id;    // "B.6"
  std::string rule_name;  // "Expecting but not getting a collection"
  EntityKind entity_kind = EntityKind::kMethod;
  std::string identifier;
  Location location;
  std::string type;  // raw return or data type, empty when there is none
  Evidence evidence;
  std::string recommendation;

  bool operator==(const Violation&) const = default;
};

// Report order: file, line, column, rule id, then identifier and kind.
bool violation_less(const Violation& a, const Violation& b);

struct RuleInfo {
  std::string_view id;
  std::string_view name;
  std::string_view recommendation;
  bool excludes_tests;
};

// All rules in id order.
const std::vector<RuleInfo>& rule_catalog();
const RuleInfo* find_rule(std::string_view id);

class RuleSet {
 public:
  static RuleSet all();
  static RuleSet none();

  // `pattern` is a rule id or a glob such as "B.*". Throws ConfigError when
  // it matches no known rule.
  void enable(std::string_view pattern);
  void disable(std::string_view pattern);

  bool enabled(std::string_view id) const;
  std::vector<std::string> ids() const;

  bool operator==(const RuleSet&) const = default;

 private:
  std::set<std::string, std::less<>> enabled_;
};

// Ids matched by a comma-separated list of ids/globs ("A.1,B.*").
// Throws ConfigError for entries that match nothing.
std::vector<std::string> expand_rule_patterns(std::string_view list);

// Everything the detectors need for one language.
struct LanguageProfile {
  Language language = Language::kJava;
  TermLexicon terms;
  AntonymLexicon antonyms;
  TypeLexicon types;
  TestConventions tests;
  TermSet stopwords;
  RuleSet rules = RuleSet::all();

  static LanguageProfile defaults(Language language);

  bool operator==(const LanguageProfile&) const = default;
};

struct ProfileSet {
  LanguageProfile java = LanguageProfile::defaults(Language::kJava);
  LanguageProfile csharp = LanguageProfile::defaults(Language::kCSharp);

  const LanguageProfile& get(Language language) const;
  LanguageProfile& get(Language language);

  bool operator==(const ProfileSet&) const = default;
};

// Per-family detectors. They ignore the profile's RuleSet; check_unit and
// run_rules apply it. `ctx` may be null when the class is unknown.
std::vector<Violation> detect_accessor_rules(const MethodEntity& m,
                                             const ClassContext* ctx,
                                             const LanguageProfile& profile);
std::vector<Violation> detect_behavior_rules(const MethodEntity& m,
                                             const LanguageProfile& profile);
std::vector<Violation> detect_method_antonym_rules(
    const MethodEntity& m, const LanguageProfile& profile);
std::vector<Violation> detect_data_rules(const DataEntity& e,
                                         const LanguageProfile& profile);
std::vector<Violation> detect_data_antonym_rules(
    const DataEntity& e, const LanguageProfile& profile);
std::vector<Violation> detect_special_rules(const MethodEntity& m,
                                            const LanguageProfile& profile);
std::vector<Violation> detect_special_rules(const DataEntity& e,
                                            const LanguageProfile& profile);

// Every enabled rule over every entity of `unit`, sorted.
std::vector<Violation> check_unit(const SourceUnit& unit,
                                  const LanguageProfile& profile);

// check_unit over all units, using up to `jobs` worker threads. The result
// is sorted and does not depend on `jobs`.
std::vector<Violation> run_rules(const std::vector<SourceUnit>& units,
                                 const ProfileSet& profiles, int jobs = 1);

// Runs `fn(i)` for i in [0, count) on up to `jobs` threads. After all
// workers finish, the exception from the lowest failing index is rethrown.
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& fn);

}  // namespace lexlint

#endif  // LEXLINT_RULES_H_
