// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

// Project configuration: a JSON object merged over the built-in lexicons.
//
//   {
//     "config_version": 1,
//     "collection_types": ["EnvVars"],
//     "term_overrides": {"get": {"add": ["load"], "remove": ["return"]}},
//     "antonym_extra_pairs": [["push", "pull"]],
//     "antonym_ignore_pairs": [["get", "result"]],
//     "plural_exceptions": ["canvas"],
//     "test_annotations": ["IntegrationTest"],
//     "test_name_patterns": ["test*"],
//     "rules": {"enable": ["A.*", "B.*"], "disable": ["C.2"]},
//     "language_overrides": {"csharp": {"collection_types": ["Bag"]}}
//   }
//
// Every key is optional. List values add to the defaults; "remove" lists
// take terms away. A language override is applied after the top-level
// settings for units in that language. When "rules.enable" is present only
// the listed rules run; "rules.disable" is applied afterwards.

#ifndef LEXLINT_CONFIG_H_
#define LEXLINT_CONFIG_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexlint/lexicon.h"
#include "lexlint/rules.h"

namespace lexlint {

inline constexpr int kConfigVersion = 1;
inline constexpr std::string_view kDefaultConfigFile = ".lexlint.json";

struct TermOverride {
  std::vector<std::string> add;
  std::vector<std::string> remove;

  bool operator==(const TermOverride&) const = default;
};

struct ConfigSection {
  std::vector<std::string> collection_types;
  std::map<TermCategory, TermOverride> term_overrides;
  std::vector<TermPair> antonym_extra_pairs;
  std::vector<TermPair> antonym_ignore_pairs;
  std::vector<std::string> plural_exceptions;
  std::vector<std::string> test_annotations;
  std::vector<std::string> test_name_patterns;
  std::optional<std::vector<std::string>> rules_enable;
  std::vector<std::string> rules_disable;

  bool operator==(const ConfigSection&) const = default;
};

struct ProjectConfig {
  int config_version = kConfigVersion;
  ConfigSection base;
  std::map<Language, ConfigSection> language_overrides;

  bool operator==(const ProjectConfig&) const = default;
};

// Parses configuration text. `origin` names the source in error messages,
// which read "<origin>: <key path>: <problem>". Throws ConfigError on
// malformed JSON, unknown keys, wrong value types, bad rule ids or
// malformed pairs.
ProjectConfig parse_config(std::string_view text, std::string_view origin);

// No path: the empty configuration. Throws ConfigError when the file cannot
// be read or is invalid.
ProjectConfig load_config(const std::optional<std::filesystem::path>& path);

// Canonical JSON; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ProjectConfig& config);

// Applies `config` over the built-in defaults. Removing a term that the
// defaults do not contain is not an error; it is reported in `warnings`.
ProfileSet resolve_profiles(const ProjectConfig& config,
                            std::vector<std::string>* warnings = nullptr);

void apply_section(const ConfigSection& section, LanguageProfile& profile,
                   std::vector<std::string>* warnings = nullptr);

}  // namespace lexlint

#endif  // LEXLINT_CONFIG_H_
