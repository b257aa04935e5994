// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include "lexlint/code_model.h"

#include <algorithm>

namespace lexlint {

std::string_view to_string(Language language) {
  return language == Language::kJava ? "java" : "csharp";
}

std::optional<Language> parse_language(std::string_view name) {
  const std::string lower = to_lower(name);
  if (lower == "java") return Language::kJava;
  if (lower == "csharp" || lower == "c#" || lower == "cs") {
    return Language::kCSharp;
  }
  return std::nullopt;
}

std::string_view to_string(Access access) {
  switch (access) {
    case Access::kPublic:
      return "public";
    case Access::kProtected:
      return "protected";
    case Access::kPrivate:
      return "private";
    case Access::kPackage:
      return "package";
    case Access::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::kMethod:
      return "method";
    case EntityKind::kAttribute:
      return "attribute";
    case EntityKind::kVariable:
      return "variable";
    case EntityKind::kParameter:
      return "parameter";
  }
  return "method";
}

std::optional<EntityKind> parse_entity_kind(std::string_view name) {
  if (name == "method") return EntityKind::kMethod;
  if (name == "attribute") return EntityKind::kAttribute;
  if (name == "variable") return EntityKind::kVariable;
  if (name == "parameter") return EntityKind::kParameter;
  return std::nullopt;
}

EntityKind DataEntity::entity_kind() const {
  switch (kind) {
    case Kind::kAttribute:
      return EntityKind::kAttribute;
    case Kind::kLocal:
      return EntityKind::kVariable;
    case Kind::kParameter:
      return EntityKind::kParameter;
  }
  return EntityKind::kVariable;
}

const ClassContext* SourceUnit::find_class(std::string_view name) const {
  for (const auto& c : classes) {
    if (c.class_name == name) return &c;
  }
  return nullptr;
}

std::vector<AttributeEntity> attributes_matching_term(const ClassContext& ctx,
                                                      const SplitName& terms) {
  std::vector<AttributeEntity> out;
  for (const auto& attr : ctx.attributes) {
    const auto& needle = attr.split.terms;
    if (needle.empty() || needle.size() > terms.terms.size()) continue;
    const auto it = std::search(
        terms.terms.begin(), terms.terms.end(), needle.begin(), needle.end(),
        [](const Term& a, const Term& b) { return a.lower == b.lower; });
    if (it != terms.terms.end()) out.push_back(attr);
  }
  return out;
}

}  // namespace lexlint
