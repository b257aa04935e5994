// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LEXLINT_TYPE_REF_H_
#define LEXLINT_TYPE_REF_H_

#include <string>
#include <string_view>
#include <vector>

namespace lexlint {

enum class TypeClass { kVoid, kBoolean, kCollection, kScalar, kUnknown };

std::string_view to_string(TypeClass c);

// A type as written at a declaration site.
struct TypeRef {
  std::string raw_text;   // exact source spelling, whitespace collapsed
  std::string base_name;  // last segment of the outermost name, no generics
  std::string qualifier;  // "java.util" for "java.util.List<T>"
  std::vector<TypeRef> type_arguments;
  int array_dimensions = 0;
  bool nullable = false;  // C# "T?"
  TypeClass classification = TypeClass::kUnknown;

  bool operator==(const TypeRef&) const = default;
};

// Parses a Java or C# type spelling such as "Map<String, List<Integer>>",
// "int[][]", "string[,]" or "bool?". Leading modifiers and annotations must
// already be stripped. An empty or unparseable spelling yields a TypeRef
// with empty base_name. The result is unclassified (kUnknown).
TypeRef parse_type(std::string_view text);

// Every simple type name mentioned in `type`, outermost first.
std::vector<std::string> type_names(const TypeRef& type);

}  // namespace lexlint

#endif  // LEXLINT_TYPE_REF_H_
