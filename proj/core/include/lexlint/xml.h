// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

// A small read-only XML tree built on expat, with the source-text position
// of every element. srcML keeps all of the original program text as
// character data, so counting newlines in the character data that precedes
// an element inside its <unit> gives that element's source line.

#ifndef LEXLINT_XML_H_
#define LEXLINT_XML_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lexlint::xml {

struct TextPosition {
  int line = 1;
  int column = 1;
};

struct Node {
  enum class Kind { kElement, kText };

  Kind kind = Kind::kElement;
  std::string ns;    // namespace URI, empty when unqualified
  std::string name;  // local name; empty for text nodes
  std::string text;  // character data for text nodes
  // Attributes as ("uri|local" or "local", value).
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Node> children;
  TextPosition start;  // position of the first character of the element
  TextPosition end;    // position just past its last character
  int xml_line = 0;    // line in the XML document itself

  bool is_element() const { return kind == Kind::kElement; }
  bool is_text() const { return kind == Kind::kText; }
  bool is(std::string_view local) const {
    return is_element() && name == local;
  }

  // Attribute value by local name and optional namespace URI.
  std::optional<std::string_view> attribute(std::string_view local,
                                            std::string_view ns = {}) const;

  // First direct child element with this local name.
  const Node* child(std::string_view local) const;

  // All direct child elements with this local name.
  std::vector<const Node*> children_named(std::string_view local) const;

  // Concatenated character data of the subtree.
  std::string text_content() const;
  void append_text(std::string& out) const;
};

// Parses a whole document. Namespaces are resolved; `counter_reset` names
// elements (by local name) at which the source line/column counters restart,
// which for srcML is "unit". Throws FormatError on malformed XML.
Node parse_document(std::string_view content, std::string_view origin,
                    std::string_view counter_reset = "unit");

Node parse_file(const std::filesystem::path& path,
                std::string_view counter_reset = "unit");

}  // namespace lexlint::xml

#endif  // LEXLINT_XML_H_
