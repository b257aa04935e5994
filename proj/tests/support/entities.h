// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

// Hand-built code-model entities for rule tests.

#ifndef LEXLINT_TESTS_ENTITIES_H_
#define LEXLINT_TESTS_ENTITIES_H_

#include <string>
#include <vector>

#include "lexlint/lexlint.h"

namespace lexlint::testing {

inline TypeRef typed(const std::string& spelling, Language lang = Language::kJava) {
  TypeRef t = parse_type(spelling);
  classify_in_place(t, TypeLexicon::defaults(lang));
  return t;
}

inline MethodEntity method(const std::string& name, const std::string& ret,
                           Language lang = Language::kJava) {
  MethodEntity m;
  m.name = name;
  m.split = split_identifier(name);
  m.location = {"Subject.java", 3, 5};
  m.access = Access::kPublic;
  m.return_type = typed(ret, lang);
  m.has_body = true;
  m.enclosing_class = "Subject";
  return m;
}

inline MethodEntity test_method(const std::string& name, const std::string& ret,
                                Language lang = Language::kJava) {
  MethodEntity m = method(name, ret, lang);
  m.annotations = {lang == Language::kJava ? "Test" : "Fact"};
  m.is_test = true;
  return m;
}

inline DataEntity data(const std::string& name, const std::string& type,
                       DataEntity::Kind kind = DataEntity::Kind::kAttribute,
                       Language lang = Language::kJava) {
  DataEntity e;
  e.name = name;
  e.split = split_identifier(name);
  e.location = {"Subject.java", 2, 5};
  e.data_type = typed(type, lang);
  e.kind = kind;
  if (kind != DataEntity::Kind::kAttribute) e.enclosing_method = "run";
  return e;
}

inline CommentBlock doc(const std::string& text) {
  return {text, CommentKind::kDoc, {"Subject.java", 1, 5}};
}

inline std::vector<std::string> rule_ids(const std::vector<Violation>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.rule_id);
  return out;
}

}  // namespace lexlint::testing

#endif  // LEXLINT_TESTS_ENTITIES_H_
