// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include "lexlint/rules.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "lexlint/errors.h"

namespace lexlint {

// ---------------------------------------------------------------------------
// Catalog

const std::vector<RuleInfo>& rule_catalog() {
  static const std::vector<RuleInfo> kRules = {
      {"A.1", "\"Get\" more than accessor",
       "Keep the getter a plain accessor, or rename it to say what the "
       "extra logic does.",
       true},
      {"A.2", "\"Is\" returns more than a Boolean",
       "Return a boolean, or drop the predicate term from the name.", true},
      {"A.3", "\"Set\" method returns",
       "Make the setter return void, or rename it to describe its result.",
       false},
      {"A.4", "Expecting but not getting single instance",
       "Use a plural or collection name, or return a single instance.", true},
      {"B.1", "Not implemented condition",
       "Implement the condition the name or comment announces, or drop the "
       "conditional term.",
       false},
      {"B.2", "Validation method does not confirm",
       "Throw an exception or return a result when validation fails.", true},
      {"B.3", "\"Get\" method does not return",
       "Return the value the name promises, or rename the method.", true},
      {"B.4", "Not answered question",
       "Return a boolean answer, or rename the method so it is not a "
       "question.",
       true},
      {"B.5", "Transform method does not return",
       "Return the transformed value, or rename the method.", true},
      {"B.6", "Expecting but not getting a collection",
       "Return a collection, register the return type as a collection type, "
       "or use a singular name.",
       true},
      {"C.1", "Method name and return type are opposite",
       "Rename the method or its return type so they no longer contradict "
       "each other.",
       true},
      {"C.2", "Method signature and comment are opposite",
       "Make the method name and its comment describe the same behavior.",
       true},
      {"D.1", "Says one but contains many",
       "Use a plural or collection name for a collection-typed value.", false},
      {"D.2", "Name suggests Boolean but type does not",
       "Make the type boolean, or drop the predicate term from the name.",
       false},
      {"E.1", "Says many but contains one",
       "Use a singular name, or change the type to a collection.", false},
      {"F.1", "Attribute name and type are opposite",
       "Rename the identifier or its type so they no longer contradict each "
       "other.",
       false},
      {"F.2", "Attribute signature and comment are opposite",
       "Make the identifier and its comment describe the same thing.", false},
      {"G.1", "Name contains only special characters",
       "Give the identifier a descriptive name.", false},
      {"G.2", "Redundant use of \"test\" in method name",
       "Drop the \"test\" term; the annotation already marks the method as a "
       "test.",
       false},
  };
  return kRules;
}

const RuleInfo* find_rule(std::string_view id) {
  for (const auto& r : rule_catalog()) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

bool violation_less(const Violation& a, const Violation& b) {
  return std::tie(a.location.file_path, a.location.line, a.location.column,
                  a.rule_id, a.identifier, a.entity_kind) <
         std::tie(b.location.file_path, b.location.line, b.location.column,
                  b.rule_id, b.identifier, b.entity_kind);
}

// ---------------------------------------------------------------------------
// RuleSet

namespace {

std::vector<std::string> matching_ids(std::string_view pattern) {
  std::vector<std::string> out;
  for (const auto& r : rule_catalog()) {
    if (glob_match(pattern, r.id)) out.emplace_back(r.id);
  }
  if (out.empty()) {
    throw ConfigError("unknown rule id or pattern '" + std::string(pattern) +
                      "'");
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

RuleSet RuleSet::all() {
  RuleSet set;
  for (const auto& r : rule_catalog()) set.enabled_.emplace(r.id);
  return set;
}

RuleSet RuleSet::none() { return RuleSet{}; }

void RuleSet::enable(std::string_view pattern) {
  for (auto& id : matching_ids(pattern)) enabled_.insert(std::move(id));
}

void RuleSet::disable(std::string_view pattern) {
  for (const auto& id : matching_ids(pattern)) enabled_.erase(id);
}

bool RuleSet::enabled(std::string_view id) const {
  return enabled_.find(id) != enabled_.end();
}

std::vector<std::string> RuleSet::ids() const {
  return {enabled_.begin(), enabled_.end()};
}

std::vector<std::string> expand_rule_patterns(std::string_view list) {
  std::set<std::string> ids;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    const auto item = trim(list.substr(start, comma - start));
    if (!item.empty()) {
      for (auto& id : matching_ids(item)) ids.insert(std::move(id));
    }
    start = comma + 1;
  }
  return {ids.begin(), ids.end()};
}

LanguageProfile LanguageProfile::defaults(Language language) {
  LanguageProfile p;
  p.language = language;
  p.terms = TermLexicon::defaults();
  p.antonyms = AntonymLexicon::defaults();
  p.types = TypeLexicon::defaults(language);
  p.tests = TestConventions::defaults(language);
  p.stopwords = default_stopwords();
  p.rules = RuleSet::all();
  return p;
}

const LanguageProfile& ProfileSet::get(Language language) const {
  return language == Language::kJava ? java : csharp;
}

LanguageProfile& ProfileSet::get(Language language) {
  return language == Language::kJava ? java : csharp;
}

// ---------------------------------------------------------------------------
// Helpers

namespace {

Violation make_violation(std::string_view rule_id, EntityKind kind,
                         const std::string& identifier, const Location& loc,
                         const TypeRef& type, Evidence evidence) {
  const RuleInfo* info = find_rule(rule_id);
  Violation v;
  v.rule_id = std::string(rule_id);
  v.rule_name = std::string(info->name);
  v.entity_kind = kind;
  v.identifier = identifier;
  v.location = loc;
  v.type = type.raw_text;
  v.evidence = std::move(evidence);
  v.recommendation = std::string(info->recommendation);
  return v;
}

Violation method_violation(std::string_view rule_id, const MethodEntity& m,
                           Evidence evidence) {
  return make_violation(rule_id, EntityKind::kMethod, m.name, m.location,
                        m.return_type, std::move(evidence));
}

Violation data_violation(std::string_view rule_id, const DataEntity& e,
                         Evidence evidence) {
  return make_violation(rule_id, e.entity_kind(), e.name, e.location,
                        e.data_type, std::move(evidence));
}

bool first_in(const SplitName& s, TermCategory c, const TermLexicon& lex) {
  return !s.empty() && lex.contains(c, s.front().lower);
}

// Acronyms only read as plural with a lowercase "s" ("IDs"), never "HTTPS".
bool term_is_plural(const Term& t, const TermLexicon& lex) {
  switch (t.kind) {
    case TermKind::kDigit:
      return false;
    case TermKind::kAcronym:
      return t.text.size() > 1 && t.text.back() == 's' &&
             !lex.plural_exceptions.count(t.lower);
    case TermKind::kWord:
      return is_plural(t.lower, lex);
  }
  return false;
}

bool has_collection_word(const SplitName& s, const TermLexicon& lex) {
  return std::any_of(s.terms.begin(), s.terms.end(), [&](const Term& t) {
    return lex.contains(TermCategory::kCollection, t.lower);
  });
}

// Lowercase word terms of every simple name in `type`.
std::vector<std::string> type_terms(const TypeRef& type) {
  std::vector<std::string> out;
  for (const auto& name : type_names(type)) {
    if (name.empty()) continue;
    for (const auto& t : split_identifier(name).terms) {
      if (t.kind != TermKind::kDigit) out.push_back(t.lower);
    }
  }
  return out;
}

std::vector<std::string> name_terms(const SplitName& s) {
  std::vector<std::string> out;
  for (const auto& t : s.terms) {
    if (t.kind != TermKind::kDigit) out.push_back(t.lower);
  }
  return out;
}

std::optional<std::pair<std::string, std::string>> first_antonym(
    const std::vector<std::string>& left, const std::vector<std::string>& right,
    const AntonymLexicon& lex) {
  for (const auto& a : left) {
    for (const auto& b : right) {
      if (auto pair = find_antonym(a, b, lex)) return pair;
    }
  }
  return std::nullopt;
}

std::vector<std::string> comment_words(const std::optional<CommentBlock>& c,
                                       const TermSet& stopwords) {
  std::vector<std::string> out;
  if (!c) return out;
  for (auto& w : word_tokens(c->text)) {
    if (!stopwords.count(w)) out.push_back(std::move(w));
  }
  return out;
}

EvidenceValue pair_value(const std::pair<std::string, std::string>& p) {
  return std::vector<std::string>{p.first, p.second};
}

}  // namespace

// ---------------------------------------------------------------------------
// Method rules

std::vector<Violation> detect_accessor_rules(const MethodEntity& m,
                                             const ClassContext* ctx,
                                             const LanguageProfile& profile) {
  std::vector<Violation> out;
  if (m.is_constructor || m.split.empty()) return out;
  const auto& lex = profile.terms;
  const TypeClass rc = m.return_type.classification;

  if (!m.is_test && first_in(m.split, TermCategory::kGet, lex) &&
      (m.access == Access::kPublic || m.access == Access::kProtected) &&
      m.body.has_conditional && ctx && !m.return_type.base_name.empty()) {
    for (const auto& attr : attributes_matching_term(*ctx, m.split)) {
      if (attr.data_type.base_name == m.return_type.base_name) {
        out.push_back(method_violation(
            "A.1", m,
            {{"attribute", attr.name},
             {"attribute_type", attr.data_type.raw_text},
             {"return_type", m.return_type.raw_text}}));
        break;
      }
    }
  }

  if (!m.is_test && first_in(m.split, TermCategory::kPredicate, lex) &&
      rc != TypeClass::kBoolean && rc != TypeClass::kUnknown &&
      rc != TypeClass::kVoid) {
    out.push_back(method_violation("A.2", m,
                                   {{"predicate_term", m.split.front().text},
                                    {"return_type", m.return_type.raw_text}}));
  }

  if (first_in(m.split, TermCategory::kSet, lex) && rc != TypeClass::kVoid) {
    out.push_back(
        method_violation("A.3", m, {{"return_type", m.return_type.raw_text}}));
  }

  if (!m.is_test && rc == TypeClass::kCollection &&
      !has_collection_word(m.split, lex)) {
    if (auto last = last_noun_term(m.split); last && !term_is_plural(*last, lex)) {
      out.push_back(method_violation("A.4", m,
                                     {{"singular_term", last->text},
                                      {"return_type", m.return_type.raw_text}}));
    }
  }
  return out;
}

std::vector<Violation> detect_behavior_rules(const MethodEntity& m,
                                             const LanguageProfile& profile) {
  std::vector<Violation> out;
  if (m.is_constructor || m.split.empty()) return out;
  const auto& lex = profile.terms;
  const TypeClass rc = m.return_type.classification;

  if (m.has_body && !m.body.has_conditional) {
    Evidence ev;
    for (const auto& t : m.split.terms) {
      if (lex.contains(TermCategory::kConditional, t.lower)) {
        ev = {{"conditional_term", t.text}, {"source", std::string("name")}};
        break;
      }
    }
    if (ev.empty() && m.comment) {
      for (const auto& w : word_tokens(m.comment->text)) {
        if (lex.contains(TermCategory::kConditional, w)) {
          ev = {{"conditional_term", w}, {"source", std::string("comment")}};
          break;
        }
      }
    }
    if (!ev.empty()) out.push_back(method_violation("B.1", m, std::move(ev)));
  }

  if (m.is_test) return out;

  if (m.has_body && first_in(m.split, TermCategory::kValidation, lex) &&
      rc == TypeClass::kVoid && !m.body.has_throw && !m.body.declares_throws) {
    out.push_back(method_violation(
        "B.2", m, {{"validation_term", m.split.front().text}}));
  }

  if (first_in(m.split, TermCategory::kGet, lex) && rc == TypeClass::kVoid) {
    out.push_back(method_violation("B.3", m, {{"get_term", m.split.front().text}}));
  }

  if (first_in(m.split, TermCategory::kPredicate, lex) && rc == TypeClass::kVoid) {
    out.push_back(
        method_violation("B.4", m, {{"predicate_term", m.split.front().text}}));
  }

  if (rc == TypeClass::kVoid) {
    // First or inner position; a trailing "To" ("applyTo") names a target.
    const std::size_t n = m.split.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && i + 1 == n) break;
      const Term& t = m.split.terms[i];
      if (lex.contains(TermCategory::kTransformation, t.lower)) {
        out.push_back(method_violation("B.5", m,
                                       {{"transformation_term", t.text},
                                        {"return_type", m.return_type.raw_text}}));
        break;
      }
    }
  }

  if (first_in(m.split, TermCategory::kGet, lex) && rc != TypeClass::kCollection &&
      rc != TypeClass::kUnknown && rc != TypeClass::kVoid) {
    for (std::size_t i = 1; i < m.split.size(); ++i) {
      const Term& t = m.split.terms[i];
      const bool collection = lex.contains(TermCategory::kCollection, t.lower);
      if (collection || term_is_plural(t, lex)) {
        out.push_back(method_violation(
            "B.6", m,
            {{"get_term", m.split.front().text},
             {collection ? "collection_term" : "plural_term", t.text},
             {"return_type", m.return_type.raw_text}}));
        break;
      }
    }
  }
  return out;
}

std::vector<Violation> detect_method_antonym_rules(
    const MethodEntity& m, const LanguageProfile& profile) {
  std::vector<Violation> out;
  if (m.is_constructor || m.is_test || m.split.empty()) return out;
  const auto names = name_terms(m.split);
  const auto types = type_terms(m.return_type);

  if (auto pair = first_antonym(names, types, profile.antonyms)) {
    out.push_back(method_violation(
        "C.1", m, {{"antonym_pair", pair_value(*pair)},
                   {"return_type", m.return_type.raw_text}}));
  }

  if (m.comment) {
    auto signature = names;
    signature.insert(signature.end(), types.begin(), types.end());
    const auto words = comment_words(m.comment, profile.stopwords);
    if (auto pair = first_antonym(signature, words, profile.antonyms)) {
      out.push_back(
          method_violation("C.2", m, {{"antonym_pair", pair_value(*pair)}}));
    }
  }
  return out;
}

std::vector<Violation> detect_special_rules(const MethodEntity& m,
                                            const LanguageProfile&) {
  std::vector<Violation> out;
  if (!m.name.empty() && m.split.empty()) {
    out.push_back(method_violation("G.1", m, {}));
  }
  if (m.is_test && !m.split.empty() && m.split.front().lower == "test") {
    out.push_back(
        method_violation("G.2", m, {{"test_term", m.split.front().text}}));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Data rules

std::vector<Violation> detect_data_rules(const DataEntity& e,
                                         const LanguageProfile& profile) {
  std::vector<Violation> out;
  if (e.split.empty()) return out;
  const auto& lex = profile.terms;
  const TypeClass tc = e.data_type.classification;
  const auto last = last_noun_term(e.split);

  // A trailing collection word ("itemList") already says "many".
  if (tc == TypeClass::kCollection && last && !term_is_plural(*last, lex) &&
      !lex.contains(TermCategory::kCollection, last->lower)) {
    out.push_back(data_violation("D.1", e,
                                 {{"singular_term", last->text},
                                  {"data_type", e.data_type.raw_text}}));
  }

  const bool predicate = first_in(e.split, TermCategory::kPredicate, lex);
  if (predicate && tc != TypeClass::kBoolean && tc != TypeClass::kUnknown) {
    out.push_back(data_violation("D.2", e,
                                 {{"predicate_term", e.split.front().text},
                                  {"data_type", e.data_type.raw_text}}));
  }

  // "hasItems" as a boolean is a question about many, not a value.
  if (last && term_is_plural(*last, lex) && tc != TypeClass::kCollection &&
      tc != TypeClass::kUnknown && !(predicate && tc == TypeClass::kBoolean)) {
    out.push_back(data_violation("E.1", e,
                                 {{"plural_term", last->text},
                                  {"data_type", e.data_type.raw_text}}));
  }
  return out;
}

std::vector<Violation> detect_data_antonym_rules(
    const DataEntity& e, const LanguageProfile& profile) {
  std::vector<Violation> out;
  if (e.split.empty()) return out;
  const auto names = name_terms(e.split);
  const auto types = type_terms(e.data_type);

  if (auto pair = first_antonym(names, types, profile.antonyms)) {
    out.push_back(data_violation("F.1", e,
                                 {{"antonym_pair", pair_value(*pair)},
                                  {"data_type", e.data_type.raw_text}}));
  }
  if (e.comment) {
    auto signature = names;
    signature.insert(signature.end(), types.begin(), types.end());
    const auto words = comment_words(e.comment, profile.stopwords);
    if (auto pair = first_antonym(signature, words, profile.antonyms)) {
      out.push_back(data_violation("F.2", e, {{"antonym_pair", pair_value(*pair)}}));
    }
  }
  return out;
}

std::vector<Violation> detect_special_rules(const DataEntity& e,
                                            const LanguageProfile&) {
  std::vector<Violation> out;
  if (!e.name.empty() && e.split.empty()) {
    out.push_back(data_violation("G.1", e, {}));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orchestration

namespace {

void append(std::vector<Violation>& out, std::vector<Violation>&& more) {
  for (auto& v : more) out.push_back(std::move(v));
}

void check_data(const DataEntity& e, const LanguageProfile& p,
                std::vector<Violation>& out) {
  append(out, detect_data_rules(e, p));
  append(out, detect_data_antonym_rules(e, p));
  append(out, detect_special_rules(e, p));
}

}  // namespace

std::vector<Violation> check_unit(const SourceUnit& unit,
                                  const LanguageProfile& profile) {
  std::vector<Violation> all;
  for (const auto& cls : unit.classes) {
    for (const auto& attr : cls.attributes) check_data(attr, profile, all);
  }
  for (const auto& m : unit.methods) {
    const ClassContext* ctx = unit.find_class(m.enclosing_class);
    append(all, detect_accessor_rules(m, ctx, profile));
    append(all, detect_behavior_rules(m, profile));
    append(all, detect_method_antonym_rules(m, profile));
    append(all, detect_special_rules(m, profile));
    for (const auto& p : m.parameters) check_data(p, profile, all);
  }
  for (const auto& v : unit.free_variables) check_data(v, profile, all);

  std::vector<Violation> out;
  out.reserve(all.size());
  for (auto& v : all) {
    if (profile.rules.enabled(v.rule_id)) out.push_back(std::move(v));
  }
  std::stable_sort(out.begin(), out.end(), violation_less);
  return out;
}

std::vector<Violation> run_rules(const std::vector<SourceUnit>& units,
                                 const ProfileSet& profiles, int jobs) {
  std::vector<std::vector<Violation>> per_unit(units.size());
  parallel_for(units.size(), jobs, [&](std::size_t i) {
    per_unit[i] = check_unit(units[i], profiles.get(units[i].language));
  });
  std::vector<Violation> out;
  for (auto& part : per_unit) append(out, std::move(part));
  std::stable_sort(out.begin(), out.end(), violation_less);
  return out;
}

void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::size_t error_index = count;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (i < error_index) {
          error = std::current_exception();
          error_index = i;
        }
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace lexlint
