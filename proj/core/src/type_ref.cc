// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include "lexlint/type_ref.h"

#include <cctype>

namespace lexlint {

std::string_view to_string(TypeClass c) {
  switch (c) {
    case TypeClass::kVoid:
      return "void";
    case TypeClass::kBoolean:
      return "boolean";
    case TypeClass::kCollection:
      return "collection";
    case TypeClass::kScalar:
      return "scalar";
    case TypeClass::kUnknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
         c == '@' || static_cast<unsigned char>(c) >= 0x80;
}

class TypeParser {
 public:
  explicit TypeParser(std::string_view text) : text_(text) {}

  TypeRef parse() {
    TypeRef t = parse_one();
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string read_name() {
    skip_ws();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  TypeRef parse_one() {
    TypeRef t;
    const std::size_t begin = pos_;
    // Qualified name, generic arguments may appear on any segment
    // ("Outer<K>.Inner<V>"); the last segment's arguments are kept.
    std::string qualified;
    while (true) {
      std::string seg = read_name();
      if (seg.empty()) break;
      if (!t.base_name.empty()) {
        if (!qualified.empty()) qualified += '.';
        qualified += t.base_name;
      }
      t.base_name = seg;
      t.type_arguments.clear();
      if (peek('<')) {
        ++pos_;
        parse_arguments(t);
      }
      if (peek('.') && text_.substr(pos_, 3) != "...") {
        ++pos_;
        continue;
      }
      if (peek(':') && pos_ + 1 < text_.size() && text_[pos_ + 1] == ':') {
        pos_ += 2;  // C# "global::System.String"
        continue;
      }
      break;
    }
    if (t.base_name.size() > 1 && t.base_name.front() == '@') {
      t.base_name.erase(0, 1);
    }
    t.qualifier = qualified;
    while (true) {
      if (peek('?')) {
        ++pos_;
        t.nullable = true;
        continue;
      }
      if (peek('[')) {
        ++pos_;
        while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
        if (pos_ < text_.size()) ++pos_;
        ++t.array_dimensions;
        continue;
      }
      if (peek('.') && text_.substr(pos_, 3) == "...") {
        pos_ += 3;  // Java varargs
        ++t.array_dimensions;
        continue;
      }
      if (peek('*') || peek('&')) {
        ++pos_;
        continue;
      }
      break;
    }
    t.raw_text = collapse(text_.substr(begin, pos_ - begin));
    return t;
  }

  void parse_arguments(TypeRef& t) {
    while (pos_ < text_.size()) {
      if (peek('>')) {
        ++pos_;
        return;
      }
      if (peek(',')) {
        ++pos_;
        continue;
      }
      if (peek('?')) {
        // Java wildcard: "? extends T", "? super T", "?"
        ++pos_;
        const std::size_t save = pos_;
        std::string kw = read_name();
        if (kw != "extends" && kw != "super") pos_ = save;
        if (peek(',') || peek('>')) continue;
      }
      const std::size_t before = pos_;
      TypeRef arg = parse_one();
      if (pos_ == before) {
        ++pos_;  // unexpected character; skip it
        continue;
      }
      if (!arg.base_name.empty()) t.type_arguments.push_back(std::move(arg));
    }
  }

  static std::string collapse(std::string_view s) {
    std::string out;
    bool space = false;
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        space = !out.empty();
        continue;
      }
      if (space) {
        // Keep a single space only between two name characters
        // ("? extends T"); drop it around punctuation.
        if (is_name_char(out.back()) && is_name_char(c)) out += ' ';
        else if (out.back() == ',') out += ' ';
        space = false;
      }
      out += c;
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_names(const TypeRef& t, std::vector<std::string>& out) {
  if (!t.base_name.empty()) out.push_back(t.base_name);
  for (const auto& a : t.type_arguments) collect_names(a, out);
}

}  // namespace

TypeRef parse_type(std::string_view text) {
  return TypeParser(text).parse();
}

std::vector<std::string> type_names(const TypeRef& type) {
  std::vector<std::string> out;
  collect_names(type, out);
  return out;
}

}  // namespace lexlint
