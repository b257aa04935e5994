// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

// Linguistic primitives: term categories, plural detection, antonyms,
// type classification and test-method recognition.

#ifndef LEXLINT_LEXICON_H_
#define LEXLINT_LEXICON_H_

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexlint/code_model.h"
#include "lexlint/identifier.h"
#include "lexlint/type_ref.h"

namespace lexlint {

using TermSet = std::set<std::string, std::less<>>;

enum class TermCategory {
  kGet,
  kSet,
  kPredicate,
  kValidation,
  kTransformation,
  kConditional,
  kCollection,
};

inline constexpr TermCategory kAllCategories[] = {
    TermCategory::kGet,        TermCategory::kSet,
    TermCategory::kPredicate,  TermCategory::kValidation,
    TermCategory::kTransformation, TermCategory::kConditional,
    TermCategory::kCollection,
};

std::string_view to_string(TermCategory category);
// Throws UnknownCategoryError.
TermCategory parse_category(std::string_view name);

enum class TermPosition { kFirst, kAny, kInner, kLast };

struct TermLexicon {
  std::map<TermCategory, TermSet> categories;
  TermSet plural_exceptions;
  std::map<std::string, std::string, std::less<>> irregular_plurals;  // plural -> singular

  const TermSet& terms(TermCategory category) const;
  bool contains(TermCategory category, std::string_view lower_term) const;

  static TermLexicon defaults();

  bool operator==(const TermLexicon&) const = default;
};

// The first term at `position` whose lowercase form is in `category`.
// kInner means neither first nor last.
std::optional<Term> find_category_term(const SplitName& split,
                                       TermCategory category,
                                       TermPosition position,
                                       const TermLexicon& lexicon);

bool has_category(const SplitName& split, TermCategory category,
                  TermPosition position, const TermLexicon& lexicon);

// String-keyed variant; throws UnknownCategoryError for unknown names.
bool has_category(const SplitName& split, std::string_view category,
                  TermPosition position, const TermLexicon& lexicon);

// `term` is lowercase. Plural when listed as an irregular plural, or when it
// ends in "s" but not "ss", "us" or "is". Exceptions always win.
bool is_plural(std::string_view term, const TermLexicon& lexicon);
bool is_plural(std::string_view term);

// Unordered pair of lowercase lemmas, stored with first <= second.
struct TermPair {
  std::string first;
  std::string second;

  static TermPair make(std::string_view a, std::string_view b);
  auto operator<=>(const TermPair&) const = default;
};

struct AntonymLexicon {
  std::set<TermPair> pairs;
  std::set<TermPair> ignore_pairs;
  std::map<std::string, std::string, std::less<>> lemma_exceptions;

  void add(std::string_view a, std::string_view b);
  void ignore(std::string_view a, std::string_view b);
  bool known_term(std::string_view lemma) const;

  // Built-in pair list plus the irregular-form table.
  static AntonymLexicon defaults();

  bool operator==(const AntonymLexicon&) const = default;
};

// Parses `term<TAB>term` lines; '#' starts a comment, blank lines skipped.
// Throws FormatError naming `origin` and the line number on malformed rows.
std::vector<TermPair> parse_pair_lines(std::string_view text,
                                       std::string_view origin);
std::vector<TermPair> load_pair_file(const std::filesystem::path& path);

// One word per line, '#' comments. Words are lowercased.
TermSet parse_word_lines(std::string_view text);

// Possible dictionary forms of `word`, most specific first: the irregular
// form table, the word itself, then "-s", "-es", "-ies", "-ed", "-d" and
// "-ing" strippings.
std::vector<std::string> lemma_candidates(std::string_view word,
                                          const AntonymLexicon& lexicon);

// Matching lemma pair for (a, b) in argument order, if any.
std::optional<std::pair<std::string, std::string>> find_antonym(
    std::string_view a, std::string_view b, const AntonymLexicon& lexicon);

bool are_antonyms(std::string_view a, std::string_view b,
                  const AntonymLexicon& lexicon);

const TermSet& default_stopwords();

// Lowercased alphabetic words of free text, in order.
std::vector<std::string> word_tokens(std::string_view text);

struct TypeLexicon {
  Language language = Language::kJava;
  TermSet collection_base_names;
  TermSet boolean_names;
  TermSet void_names;
  TermSet unknown_names;  // "var", "dynamic", "object": says nothing about the data

  static TypeLexicon defaults(Language language);

  bool operator==(const TypeLexicon&) const = default;
};

// Classification of the outermost type. `generic_parameters` are type
// variables in scope ("T"), which classify as unknown.
TypeClass classify_type(const TypeRef& type, const TypeLexicon& lexicon,
                        const std::set<std::string, std::less<>>& generic_parameters = {});

// Sets `classification` on `type` and every nested type argument.
void classify_in_place(TypeRef& type, const TypeLexicon& lexicon,
                       const std::set<std::string, std::less<>>& generic_parameters = {});

struct TestConventions {
  TermSet annotations;                     // simple names: "Test", "Fact"
  std::vector<std::string> name_patterns;  // globs over the method name
  TermSet class_annotations;               // "TestClass", "TestFixture"

  static TestConventions defaults(Language language);

  bool operator==(const TestConventions&) const = default;
};

// Glob match supporting '*' and '?'.
bool glob_match(std::string_view pattern, std::string_view text);

// Simple name of an annotation or attribute as written: drops arguments,
// qualification, a leading '@' and a C# "Attribute" suffix.
std::string annotation_simple_name(std::string_view raw);

bool classify_test_method(const MethodEntity& method, const ClassContext& ctx,
                          const TestConventions& conventions);

}  // namespace lexlint

#endif  // LEXLINT_LEXICON_H_
