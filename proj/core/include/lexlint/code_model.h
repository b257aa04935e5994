// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

// Language-neutral facts about declarations, as consumed by the naming
// rules. Values are built once by the srcML reader and never mutated.

#ifndef LEXLINT_CODE_MODEL_H_
#define LEXLINT_CODE_MODEL_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexlint/identifier.h"
#include "lexlint/type_ref.h"

namespace lexlint {

enum class Language { kJava, kCSharp };

std::string_view to_string(Language language);
// Accepts "java", "Java", "csharp", "C#", "cs" (case-insensitive).
std::optional<Language> parse_language(std::string_view name);

struct Location {
  std::string file_path;
  int line = 1;    // 1-based
  int column = 1;  // 1-based

  auto operator<=>(const Location&) const = default;
};

enum class CommentKind { kLine, kBlock, kDoc };

struct CommentBlock {
  std::string text;  // comment delimiters removed
  CommentKind kind = CommentKind::kLine;
  Location location;

  bool operator==(const CommentBlock&) const = default;
};

struct BodyFacts {
  bool has_conditional = false;  // if, switch or ternary; loops do not count
  bool has_throw = false;
  bool declares_throws = false;  // throws clause on the signature
  bool returns_value = false;    // a return statement with an expression
  std::set<std::string> referenced_names;

  bool operator==(const BodyFacts&) const = default;
};

enum class Access { kPublic, kProtected, kPrivate, kPackage, kUnknown };

std::string_view to_string(Access access);

enum class EntityKind { kMethod, kAttribute, kVariable, kParameter };

std::string_view to_string(EntityKind kind);
std::optional<EntityKind> parse_entity_kind(std::string_view name);

// Attributes (fields, C# properties), locals and parameters.
struct DataEntity {
  enum class Kind { kAttribute, kLocal, kParameter };

  std::string name;
  SplitName split;
  Location location;
  TypeRef data_type;
  std::optional<CommentBlock> comment;
  Kind kind = Kind::kAttribute;
  std::optional<std::string> enclosing_method;  // set for locals/parameters

  EntityKind entity_kind() const;
  bool operator==(const DataEntity&) const = default;
};

using AttributeEntity = DataEntity;
using VariableEntity = DataEntity;
using ParameterEntity = DataEntity;

struct MethodEntity {
  std::string name;
  SplitName split;
  Location location;
  Access access = Access::kUnknown;
  TypeRef return_type;  // classification kUnknown for constructors
  bool is_constructor = false;
  bool has_body = false;  // false for abstract and interface declarations
  std::vector<ParameterEntity> parameters;
  BodyFacts body;
  std::optional<CommentBlock> comment;
  bool is_test = false;
  std::string enclosing_class;
  std::vector<std::string> annotations;  // simple names, e.g. "Test", "Fact"

  bool operator==(const MethodEntity&) const = default;
};

struct ClassContext {
  std::string class_name;
  std::vector<AttributeEntity> attributes;
  bool is_test_class = false;

  bool operator==(const ClassContext&) const = default;
};

struct SourceUnit {
  std::string file_path;
  Language language = Language::kJava;
  std::vector<ClassContext> classes;
  std::vector<MethodEntity> methods;
  std::vector<VariableEntity> free_variables;  // locals, in document order

  const ClassContext* find_class(std::string_view name) const;
  bool operator==(const SourceUnit&) const = default;
};

// Attributes of `ctx` whose split terms occur, case-insensitively, as a
// contiguous run inside `terms`. Attributes without terms never match.
std::vector<AttributeEntity> attributes_matching_term(const ClassContext& ctx,
                                                      const SplitName& terms);

}  // namespace lexlint

#endif  // LEXLINT_CODE_MODEL_H_
