// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "lexlint/type_ref.h"

namespace lexlint {
namespace {

TEST(ParseType, GenericsNestAndQualify) {
  const auto t = parse_type("java.util.Map<String, List<Integer>>");
  EXPECT_EQ(t.base_name, "Map");
  EXPECT_EQ(t.qualifier, "java.util");
  ASSERT_EQ(t.type_arguments.size(), 2u);
  EXPECT_EQ(t.type_arguments[1].base_name, "List");
  EXPECT_EQ(t.type_arguments[1].type_arguments[0].base_name, "Integer");
  EXPECT_EQ(t.raw_text, "java.util.Map<String, List<Integer>>");
  EXPECT_EQ(type_names(t), (std::vector<std::string>{"Map", "String", "List", "Integer"}));
}

TEST(ParseType, ArraysNullableAndVarargs) {
  EXPECT_EQ(parse_type("int[][]").array_dimensions, 2);
  EXPECT_EQ(parse_type("string[,]").array_dimensions, 1);
  EXPECT_EQ(parse_type("String...").array_dimensions, 1);
  const auto b = parse_type("bool?");
  EXPECT_TRUE(b.nullable);
  EXPECT_EQ(b.base_name, "bool");
  EXPECT_EQ(parse_type("global::System.String").base_name, "String");
}

TEST(ParseType, WildcardsAndDegenerateInput) {
  const auto t = parse_type("List<? extends Number>");
  ASSERT_EQ(t.type_arguments.size(), 1u);
  EXPECT_EQ(t.type_arguments[0].base_name, "Number");
  EXPECT_TRUE(parse_type("").base_name.empty());
  EXPECT_TRUE(parse_type("<>").base_name.empty());
  EXPECT_EQ(parse_type("  Foo  ").raw_text, "Foo");
  EXPECT_EQ(parse_type("Foo").classification, TypeClass::kUnknown);
}

}  // namespace
}  // namespace lexlint
