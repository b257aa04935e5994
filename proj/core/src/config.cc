// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include "lexlint/config.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lexlint/errors.h"

namespace lexlint {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

class Parser {
 public:
  explicit Parser(std::string_view origin) : origin_(origin) {}

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    throw ConfigError(origin_ + ": " + key + ": " + msg);
  }

  std::vector<std::string> strings(const json& v, const std::string& key) const {
    if (!v.is_array()) fail(key, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_string()) {
        fail(key + "[" + std::to_string(i) + "]", "expected a string");
      }
      out.push_back(v[i].get<std::string>());
    }
    return out;
  }

  std::vector<std::string> words(const json& v, const std::string& key) const {
    auto out = strings(v, key);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].empty()) {
        fail(key + "[" + std::to_string(i) + "]", "empty string");
      }
      out[i] = to_lower(out[i]);
    }
    return out;
  }

  std::vector<TermPair> pairs(const json& v, const std::string& key) const {
    if (!v.is_array()) fail(key, "expected an array of [term, term] pairs");
    std::vector<TermPair> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string item_key = key + "[" + std::to_string(i) + "]";
      const json& p = v[i];
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() ||
          !p[1].is_string()) {
        fail(item_key, "malformed pair; expected [\"term\", \"term\"]");
      }
      const auto a = p[0].get<std::string>();
      const auto b = p[1].get<std::string>();
      if (a.empty() || b.empty()) fail(item_key, "malformed pair; empty term");
      if (to_lower(a) == to_lower(b)) {
        fail(item_key, "malformed pair; a term cannot be its own antonym");
      }
      out.push_back(TermPair::make(a, b));
    }
    return out;
  }

  std::vector<std::string> rule_ids(const json& v, const std::string& key) const {
    auto out = strings(v, key);
    for (std::size_t i = 0; i < out.size(); ++i) {
      try {
        expand_rule_patterns(out[i]);
      } catch (const ConfigError& e) {
        fail(key + "[" + std::to_string(i) + "]", e.what());
      }
    }
    return out;
  }

  ConfigSection section(const json& obj, const std::string& prefix,
                        bool top_level) const {
    if (!obj.is_object()) fail(prefix.empty() ? "<root>" : prefix, "expected an object");
    ConfigSection s;
    for (const auto& [key, value] : obj.items()) {
      const std::string path = prefix.empty() ? key : prefix + "." + key;
      if (key == "collection_types") {
        s.collection_types = strings(value, path);
      } else if (key == "term_overrides") {
        if (!value.is_object()) fail(path, "expected an object keyed by category");
        for (const auto& [cat_name, ov] : value.items()) {
          const std::string cat_path = path + "." + cat_name;
          TermCategory cat;
          try {
            cat = parse_category(cat_name);
          } catch (const UnknownCategoryError& e) {
            fail(cat_path, e.what());
          }
          if (!ov.is_object()) fail(cat_path, "expected {\"add\": [...], \"remove\": [...]}");
          TermOverride t;
          for (const auto& [op, list] : ov.items()) {
            if (op == "add") {
              t.add = words(list, cat_path + ".add");
            } else if (op == "remove") {
              t.remove = words(list, cat_path + ".remove");
            } else {
              fail(cat_path + "." + op, "unknown key");
            }
          }
          s.term_overrides[cat] = std::move(t);
        }
      } else if (key == "antonym_extra_pairs") {
        s.antonym_extra_pairs = pairs(value, path);
      } else if (key == "antonym_ignore_pairs") {
        s.antonym_ignore_pairs = pairs(value, path);
      } else if (key == "plural_exceptions") {
        s.plural_exceptions = words(value, path);
      } else if (key == "test_annotations") {
        s.test_annotations = strings(value, path);
      } else if (key == "test_name_patterns") {
        s.test_name_patterns = strings(value, path);
      } else if (key == "rules") {
        if (!value.is_object()) fail(path, "expected {\"enable\": [...], \"disable\": [...]}");
        for (const auto& [op, list] : value.items()) {
          if (op == "enable") {
            s.rules_enable = rule_ids(list, path + ".enable");
          } else if (op == "disable") {
            s.rules_disable = rule_ids(list, path + ".disable");
          } else {
            fail(path + "." + op, "unknown key");
          }
        }
      } else if (top_level && (key == "config_version" || key == "language_overrides")) {
        continue;  // handled by the caller
      } else {
        fail(path, "unknown key");
      }
    }
    return s;
  }

 private:
  std::string origin_;
};

ordered_json pairs_json(const std::vector<TermPair>& pairs) {
  ordered_json out = ordered_json::array();
  for (const auto& p : pairs) out.push_back({p.first, p.second});
  return out;
}

ordered_json section_json(const ConfigSection& s) {
  ordered_json out = ordered_json::object();
  if (!s.collection_types.empty()) out["collection_types"] = s.collection_types;
  if (!s.term_overrides.empty()) {
    ordered_json terms = ordered_json::object();
    for (const auto& [cat, ov] : s.term_overrides) {
      ordered_json o = ordered_json::object();
      if (!ov.add.empty()) o["add"] = ov.add;
      if (!ov.remove.empty()) o["remove"] = ov.remove;
      terms[std::string(to_string(cat))] = o;
    }
    out["term_overrides"] = terms;
  }
  if (!s.antonym_extra_pairs.empty()) {
    out["antonym_extra_pairs"] = pairs_json(s.antonym_extra_pairs);
  }
  if (!s.antonym_ignore_pairs.empty()) {
    out["antonym_ignore_pairs"] = pairs_json(s.antonym_ignore_pairs);
  }
  if (!s.plural_exceptions.empty()) out["plural_exceptions"] = s.plural_exceptions;
  if (!s.test_annotations.empty()) out["test_annotations"] = s.test_annotations;
  if (!s.test_name_patterns.empty()) out["test_name_patterns"] = s.test_name_patterns;
  if (s.rules_enable || !s.rules_disable.empty()) {
    ordered_json rules = ordered_json::object();
    if (s.rules_enable) rules["enable"] = *s.rules_enable;
    if (!s.rules_disable.empty()) rules["disable"] = s.rules_disable;
    out["rules"] = rules;
  }
  return out;
}

void warn(std::vector<std::string>* warnings, std::string msg) {
  if (warnings) warnings->push_back(std::move(msg));
}

}  // namespace

ProjectConfig parse_config(std::string_view text, std::string_view origin) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string(origin) + ": <root>: malformed JSON (" +
                      e.what() + ")");
  }
  Parser p(origin);
  if (!doc.is_object()) p.fail("<root>", "expected a JSON object");

  ProjectConfig config;
  if (auto it = doc.find("config_version"); it != doc.end()) {
    if (!it->is_number_integer()) p.fail("config_version", "expected an integer");
    config.config_version = it->get<int>();
    if (config.config_version != kConfigVersion) {
      p.fail("config_version", "unsupported version " +
                                   std::to_string(config.config_version) +
                                   " (expected " + std::to_string(kConfigVersion) + ")");
    }
  }
  config.base = p.section(doc, "", true);
  if (auto it = doc.find("language_overrides"); it != doc.end()) {
    if (!it->is_object()) p.fail("language_overrides", "expected an object");
    for (const auto& [lang_name, sub] : it->items()) {
      const std::string path = "language_overrides." + lang_name;
      const auto lang = parse_language(lang_name);
      if (!lang) p.fail(path, "unknown language (expected java or csharp)");
      config.language_overrides[*lang] = p.section(sub, path, false);
    }
  }
  return config;
}

ProjectConfig load_config(const std::optional<std::filesystem::path>& path) {
  if (!path) return ProjectConfig{};
  std::ifstream in(*path, std::ios::binary);
  if (!in) throw ConfigError(path->string() + ": cannot read configuration file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path->string());
}

std::string serialize_config(const ProjectConfig& config) {
  ordered_json out = ordered_json::object();
  out["config_version"] = config.config_version;
  const ordered_json base = section_json(config.base);
  for (const auto& [k, v] : base.items()) out[k] = v;
  if (!config.language_overrides.empty()) {
    ordered_json langs = ordered_json::object();
    for (const auto& [lang, section] : config.language_overrides) {
      langs[lang == Language::kJava ? "java" : "csharp"] = section_json(section);
    }
    out["language_overrides"] = langs;
  }
  return out.dump(2) + "\n";
}

void apply_section(const ConfigSection& s, LanguageProfile& profile,
                   std::vector<std::string>* warnings) {
  for (const auto& t : s.collection_types) {
    profile.types.collection_base_names.insert(t);
  }
  for (const auto& [cat, ov] : s.term_overrides) {
    auto& set = profile.terms.categories[cat];
    for (const auto& t : ov.add) set.insert(t);
    for (const auto& t : ov.remove) {
      if (!set.erase(t)) {
        warn(warnings, "term_overrides." + std::string(to_string(cat)) +
                           ".remove: '" + t + "' is not in the term list; ignored");
      }
    }
  }
  for (const auto& p : s.antonym_extra_pairs) profile.antonyms.add(p.first, p.second);
  for (const auto& p : s.antonym_ignore_pairs) profile.antonyms.ignore(p.first, p.second);
  for (const auto& w : s.plural_exceptions) profile.terms.plural_exceptions.insert(w);
  for (const auto& a : s.test_annotations) {
    const auto name = annotation_simple_name(a);
    if (!name.empty()) profile.tests.annotations.insert(name);
  }
  for (const auto& p : s.test_name_patterns) profile.tests.name_patterns.push_back(p);
  if (s.rules_enable) {
    profile.rules = RuleSet::none();
    for (const auto& id : *s.rules_enable) profile.rules.enable(id);
  }
  for (const auto& id : s.rules_disable) profile.rules.disable(id);
}

ProfileSet resolve_profiles(const ProjectConfig& config,
                            std::vector<std::string>* warnings) {
  ProfileSet profiles;
  for (Language lang : {Language::kJava, Language::kCSharp}) {
    auto& profile = profiles.get(lang);
    apply_section(config.base, profile, warnings);
    if (auto it = config.language_overrides.find(lang);
        it != config.language_overrides.end()) {
      apply_section(it->second, profile, warnings);
    }
  }
  if (warnings) {
    // Top-level removals are checked once per language; report them once.
    std::vector<std::string> unique;
    for (auto& w : *warnings) {
      if (std::find(unique.begin(), unique.end(), w) == unique.end()) {
        unique.push_back(std::move(w));
      }
    }
    *warnings = std::move(unique);
  }
  return profiles;
}

}  // namespace lexlint
