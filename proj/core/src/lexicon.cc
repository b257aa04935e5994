// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include "lexlint/lexicon.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "builtin_data.h"
#include "lexlint/errors.h"

namespace lexlint {

namespace {

TermSet make_set(std::initializer_list<std::string_view> words) {
  TermSet out;
  for (auto w : words) out.emplace(w);
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Irregular inflections mapped to the lemma used in the pair list.
constexpr std::pair<std::string_view, std::string_view> kLemmaExceptions[] = {
    {"got", "get"},          {"gotten", "get"},       {"getting", "get"},
    {"began", "begin"},      {"begun", "begin"},      {"beginning", "begin"},
    {"wrote", "write"},      {"written", "write"},    {"writing", "write"},
    {"shown", "show"},       {"hid", "hide"},         {"hidden", "hide"},
    {"stopped", "stop"},     {"stopping", "stop"},    {"lost", "lose"},
    {"won", "win"},          {"winning", "win"},      {"sent", "send"},
    {"sold", "sell"},        {"bought", "buy"},       {"gave", "give"},
    {"given", "give"},       {"took", "take"},        {"taken", "take"},
    {"maximum", "max"},      {"minimum", "min"},      {"maxima", "max"},
    {"minima", "min"},       {"maximal", "max"},      {"minimal", "min"},
    {"larger", "large"},     {"largest", "large"},    {"smaller", "small"},
    {"smallest", "small"},   {"bigger", "big"},       {"biggest", "big"},
    {"higher", "high"},      {"highest", "high"},     {"lowest", "low"},
    {"faster", "fast"},      {"slower", "slow"},      {"longer", "long"},
    {"shorter", "short"},    {"older", "old"},        {"oldest", "old"},
    {"newer", "new"},        {"newest", "new"},       {"children", "child"},
    {"popped", "pop"},       {"pushed", "push"},
};

}  // namespace

std::string_view to_string(TermCategory category) {
  switch (category) {
    case TermCategory::kGet:
      return "get";
    case TermCategory::kSet:
      return "set";
    case TermCategory::kPredicate:
      return "predicate";
    case TermCategory::kValidation:
      return "validation";
    case TermCategory::kTransformation:
      return "transformation";
    case TermCategory::kConditional:
      return "conditional";
    case TermCategory::kCollection:
      return "collection";
  }
  return "get";
}

TermCategory parse_category(std::string_view name) {
  for (auto c : kAllCategories) {
    if (to_string(c) == name) return c;
  }
  throw UnknownCategoryError(std::string(name));
}

// ---------------------------------------------------------------------------
// TermLexicon

TermLexicon TermLexicon::defaults() {
  TermLexicon lex;
  lex.categories[TermCategory::kGet] =
      make_set({"get", "fetch", "retrieve", "obtain", "find", "return"});
  lex.categories[TermCategory::kSet] = make_set({"set"});
  lex.categories[TermCategory::kPredicate] =
      make_set({"is", "has", "have", "can", "could", "should", "was", "were",
                "are", "will", "contains", "supports", "exists"});
  lex.categories[TermCategory::kValidation] =
      make_set({"validate", "check", "ensure", "verify", "assert"});
  lex.categories[TermCategory::kTransformation] =
      make_set({"to", "convert", "transform", "translate", "adapt", "encode",
                "decode", "parse", "format"});
  lex.categories[TermCategory::kConditional] =
      make_set({"if", "when", "whether", "unless", "case"});
  lex.categories[TermCategory::kCollection] =
      make_set({"list", "set", "map", "array", "collection", "queue", "stack",
                "vector", "table", "dictionary", "batch", "group"});

  lex.plural_exceptions = make_set({
      "status", "bus", "alias", "news", "series", "species", "bias", "canvas",
      "atlas", "lens", "gas", "chaos", "kudos", "this", "has", "was", "is",
      "does", "goes", "yes", "its", "always", "perhaps", "whereas", "thus",
      "plus", "minus", "bonus", "campus", "corpus", "focus", "radius",
      "virus", "consensus", "census", "os", "ios", "dns", "https", "sms",
      "aws", "js", "gps", "tls", "cors", "jms", "ts",
  });

  lex.irregular_plurals = {
      {"children", "child"},     {"people", "person"},
      {"men", "man"},            {"women", "woman"},
      {"mice", "mouse"},         {"geese", "goose"},
      {"feet", "foot"},          {"teeth", "tooth"},
      {"data", "datum"},         {"criteria", "criterion"},
      {"phenomena", "phenomenon"}, {"media", "medium"},
      {"schemata", "schema"},    {"alumni", "alumnus"},
      {"cacti", "cactus"},       {"fungi", "fungus"},
      {"radii", "radius"},       {"stimuli", "stimulus"},
      {"oxen", "ox"},            {"dice", "die"},
      {"indices", "index"},      {"vertices", "vertex"},
      {"matrices", "matrix"},    {"analyses", "analysis"},
      {"axes", "axis"},          {"appendices", "appendix"},
  };
  return lex;
}

const TermSet& TermLexicon::terms(TermCategory category) const {
  static const TermSet kEmpty;
  const auto it = categories.find(category);
  return it == categories.end() ? kEmpty : it->second;
}

bool TermLexicon::contains(TermCategory category,
                           std::string_view lower_term) const {
  const auto& set = terms(category);
  return set.find(lower_term) != set.end();
}

std::optional<Term> find_category_term(const SplitName& split,
                                       TermCategory category,
                                       TermPosition position,
                                       const TermLexicon& lexicon) {
  const auto& terms = split.terms;
  if (terms.empty()) return std::nullopt;
  auto check = [&](std::size_t i) -> std::optional<Term> {
    if (lexicon.contains(category, terms[i].lower)) return terms[i];
    return std::nullopt;
  };
  switch (position) {
    case TermPosition::kFirst:
      return check(0);
    case TermPosition::kLast:
      return check(terms.size() - 1);
    case TermPosition::kAny:
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (auto t = check(i)) return t;
      }
      return std::nullopt;
    case TermPosition::kInner:
      for (std::size_t i = 1; i + 1 < terms.size(); ++i) {
        if (auto t = check(i)) return t;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

bool has_category(const SplitName& split, TermCategory category,
                  TermPosition position, const TermLexicon& lexicon) {
  return find_category_term(split, category, position, lexicon).has_value();
}

bool has_category(const SplitName& split, std::string_view category,
                  TermPosition position, const TermLexicon& lexicon) {
  return has_category(split, parse_category(category), position, lexicon);
}

bool is_plural(std::string_view term, const TermLexicon& lexicon) {
  if (term.empty()) return false;
  if (lexicon.plural_exceptions.count(term)) return false;
  if (lexicon.irregular_plurals.count(term)) return true;
  if (!ends_with(term, "s") || term.size() < 2) return false;
  return !ends_with(term, "ss") && !ends_with(term, "us") &&
         !ends_with(term, "is");
}

bool is_plural(std::string_view term) {
  static const TermLexicon kDefaults = TermLexicon::defaults();
  return is_plural(term, kDefaults);
}

// ---------------------------------------------------------------------------
// Antonyms

TermPair TermPair::make(std::string_view a, std::string_view b) {
  std::string x = to_lower(a);
  std::string y = to_lower(b);
  if (y < x) std::swap(x, y);
  return TermPair{std::move(x), std::move(y)};
}

void AntonymLexicon::add(std::string_view a, std::string_view b) {
  pairs.insert(TermPair::make(a, b));
}

void AntonymLexicon::ignore(std::string_view a, std::string_view b) {
  ignore_pairs.insert(TermPair::make(a, b));
}

bool AntonymLexicon::known_term(std::string_view lemma) const {
  return std::any_of(pairs.begin(), pairs.end(), [&](const TermPair& p) {
    return p.first == lemma || p.second == lemma;
  });
}

AntonymLexicon AntonymLexicon::defaults() {
  static const AntonymLexicon kDefaults = [] {
    AntonymLexicon lex;
    for (const auto& p : parse_pair_lines(builtin::antonyms_tsv(),
                                          "builtin:antonyms.tsv")) {
      lex.pairs.insert(p);
    }
    for (const auto& [form, lemma] : kLemmaExceptions) {
      lex.lemma_exceptions.emplace(form, lemma);
    }
    return lex;
  }();
  return kDefaults;
}

std::vector<TermPair> parse_pair_lines(std::string_view text,
                                       std::string_view origin) {
  std::vector<TermPair> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw FormatError(std::string(origin) + ":" + std::to_string(line_no) +
                        ": expected 'term<TAB>term'");
    }
    const auto a = trim(line.substr(0, tab));
    const auto b = trim(line.substr(tab + 1));
    if (a.empty() || b.empty() || b.find('\t') != std::string_view::npos) {
      throw FormatError(std::string(origin) + ":" + std::to_string(line_no) +
                        ": expected exactly two terms");
    }
    out.push_back(TermPair::make(a, b));
  }
  return out;
}

std::vector<TermPair> load_pair_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pair_lines(ss.str(), path.string());
}

TermSet parse_word_lines(std::string_view text) {
  TermSet out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) out.insert(to_lower(line));
  }
  return out;
}

std::vector<std::string> lemma_candidates(std::string_view word,
                                          const AntonymLexicon& lexicon) {
  const std::string w = to_lower(word);
  std::vector<std::string> out;
  auto add = [&](std::string c) {
    if (c.size() < 2) return;
    if (std::find(out.begin(), out.end(), c) == out.end()) {
      out.push_back(std::move(c));
    }
  };
  if (auto it = lexicon.lemma_exceptions.find(w);
      it != lexicon.lemma_exceptions.end()) {
    add(it->second);
  }
  add(w);
  const auto n = w.size();
  auto doubled = [&](std::size_t stem_len) {
    // "stopped" -> "stop": stem ends in a doubled consonant
    return stem_len >= 3 && w[stem_len - 1] == w[stem_len - 2] &&
           !is_vowel(w[stem_len - 1]);
  };
  if (ends_with(w, "ies")) add(w.substr(0, n - 3) + "y");
  if (ends_with(w, "es")) add(w.substr(0, n - 2));
  if (ends_with(w, "s") && !ends_with(w, "ss")) add(w.substr(0, n - 1));
  if (ends_with(w, "ed")) {
    add(w.substr(0, n - 2));
    if (doubled(n - 2)) add(w.substr(0, n - 3));
  }
  if (ends_with(w, "d")) add(w.substr(0, n - 1));
  if (ends_with(w, "ing")) {
    add(w.substr(0, n - 3));
    add(w.substr(0, n - 3) + "e");
    if (doubled(n - 3)) add(w.substr(0, n - 4));
  }
  return out;
}

std::optional<std::pair<std::string, std::string>> find_antonym(
    std::string_view a, std::string_view b, const AntonymLexicon& lexicon) {
  const auto ca = lemma_candidates(a, lexicon);
  const auto cb = lemma_candidates(b, lexicon);
  for (const auto& x : ca) {
    for (const auto& y : cb) {
      if (x == y) continue;
      const auto pair = TermPair::make(x, y);
      if (lexicon.pairs.count(pair) && !lexicon.ignore_pairs.count(pair)) {
        return std::make_pair(x, y);
      }
    }
  }
  return std::nullopt;
}

bool are_antonyms(std::string_view a, std::string_view b,
                  const AntonymLexicon& lexicon) {
  return find_antonym(a, b, lexicon).has_value();
}

const TermSet& default_stopwords() {
  static const TermSet kWords = parse_word_lines(builtin::stopwords_txt());
  return kWords;
}

std::vector<std::string> word_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      cur += c;
    } else if (!cur.empty()) {
      out.push_back(to_lower(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(to_lower(cur));
  return out;
}

// ---------------------------------------------------------------------------
// Types

TypeLexicon TypeLexicon::defaults(Language language) {
  TypeLexicon lex;
  lex.language = language;
  if (language == Language::kJava) {
    lex.collection_base_names = make_set({
        "List", "ArrayList", "LinkedList", "Set", "HashSet", "TreeSet", "Map",
        "HashMap", "TreeMap", "Collection", "Iterable", "Iterator", "Queue",
        "Deque", "Vector", "Stack",
        // further java.util / java.util.concurrent containers
        "LinkedHashMap", "LinkedHashSet", "SortedMap", "SortedSet",
        "NavigableMap", "NavigableSet", "ConcurrentMap", "ConcurrentHashMap",
        "CopyOnWriteArrayList", "PriorityQueue", "ArrayDeque", "EnumSet",
        "EnumMap", "Hashtable", "Enumeration", "BlockingQueue",
    });
    lex.boolean_names = make_set({"boolean", "Boolean"});
    lex.void_names = make_set({"void"});
    lex.unknown_names = make_set({"var", "Object"});
  } else {
    lex.collection_base_names = make_set({
        "IEnumerable", "ICollection", "IList", "List", "Dictionary",
        "IDictionary", "HashSet", "ISet", "Queue", "Stack", "Array",
        // further System.Collections.* containers
        "IReadOnlyList", "IReadOnlyCollection", "IReadOnlyDictionary",
        "SortedDictionary", "SortedList", "SortedSet", "LinkedList",
        "ConcurrentDictionary", "ConcurrentBag", "ConcurrentQueue",
        "ImmutableArray", "ImmutableList", "ImmutableDictionary",
        "ObservableCollection", "Collection", "ArrayList", "Hashtable",
        "IQueryable", "IEnumerator",
    });
    // C# keyword lookups are case-insensitive; stored lowercase.
    lex.boolean_names = make_set({"bool", "boolean"});
    lex.void_names = make_set({"void"});
    lex.unknown_names = make_set({"var", "dynamic", "object"});
  }
  return lex;
}

namespace {

bool keyword_lookup(const TypeLexicon& lex, const TermSet& set,
                    std::string_view name) {
  if (lex.language == Language::kCSharp) return set.count(to_lower(name)) > 0;
  return set.count(name) > 0;
}

}  // namespace

TypeClass classify_type(const TypeRef& type, const TypeLexicon& lexicon,
                        const std::set<std::string, std::less<>>& generic_parameters) {
  if (type.array_dimensions > 0) return TypeClass::kCollection;
  const std::string& name = type.base_name;
  if (name.empty()) return TypeClass::kUnknown;
  if (keyword_lookup(lexicon, lexicon.void_names, name)) {
    return type.type_arguments.empty() ? TypeClass::kVoid : TypeClass::kUnknown;
  }
  if (keyword_lookup(lexicon, lexicon.boolean_names, name)) {
    return TypeClass::kBoolean;
  }
  if (lexicon.collection_base_names.count(name)) return TypeClass::kCollection;
  if (keyword_lookup(lexicon, lexicon.unknown_names, name) ||
      generic_parameters.count(name)) {
    return TypeClass::kUnknown;
  }
  return TypeClass::kScalar;
}

void classify_in_place(TypeRef& type, const TypeLexicon& lexicon,
                       const std::set<std::string, std::less<>>& generic_parameters) {
  type.classification = classify_type(type, lexicon, generic_parameters);
  for (auto& arg : type.type_arguments) {
    classify_in_place(arg, lexicon, generic_parameters);
  }
}

// ---------------------------------------------------------------------------
// Tests

TestConventions TestConventions::defaults(Language language) {
  TestConventions tc;
  if (language == Language::kJava) {
    tc.annotations = make_set({"Test", "ParameterizedTest", "RepeatedTest"});
  } else {
    tc.annotations = make_set({"Test", "TestMethod", "Fact", "Theory"});
    tc.class_annotations = make_set({"TestClass", "TestFixture"});
  }
  return tc;
}

bool glob_match(std::string_view pattern, std::string_view text) {
  std::size_t p = 0, t = 0;
  std::size_t star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::string annotation_simple_name(std::string_view raw) {
  std::string_view s = trim(raw);
  while (!s.empty() && (s.front() == '@' || s.front() == '[')) {
    s.remove_prefix(1);
    s = trim(s);
  }
  std::size_t end = 0;
  while (end < s.size() &&
         (is_alnum_ascii(s[end]) || s[end] == '_' || s[end] == '.' ||
          s[end] == '$' || s[end] == ':')) {
    ++end;
  }
  s = s.substr(0, end);
  if (auto dot = s.find_last_of(".:"); dot != std::string_view::npos) {
    s = s.substr(dot + 1);
  }
  std::string out(s);
  constexpr std::string_view kSuffix = "Attribute";
  if (out.size() > kSuffix.size() && ends_with(out, kSuffix)) {
    out.erase(out.size() - kSuffix.size());
  }
  return out;
}

bool classify_test_method(const MethodEntity& method, const ClassContext& /*ctx*/,
                          const TestConventions& conventions) {
  for (const auto& a : method.annotations) {
    if (conventions.annotations.count(annotation_simple_name(a))) return true;
  }
  for (const auto& pattern : conventions.name_patterns) {
    if (glob_match(pattern, method.name)) return true;
  }
  return false;
}

}  // namespace lexlint
