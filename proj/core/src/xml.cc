// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include "lexlint/xml.h"

#include <expat.h>

#include <fstream>
#include <memory>
#include <sstream>

#include "lexlint/errors.h"

namespace lexlint::xml {

std::optional<std::string_view> Node::attribute(std::string_view local,
                                                std::string_view ns) const {
  for (const auto& [key, value] : attributes) {
    const auto bar = key.rfind('|');
    const std::string_view k = key;
    const std::string_view key_ns =
        bar == std::string::npos ? std::string_view{} : k.substr(0, bar);
    const std::string_view key_local =
        bar == std::string::npos ? k : k.substr(bar + 1);
    if (key_local == local && key_ns == ns) return std::string_view(value);
  }
  return std::nullopt;
}

const Node* Node::child(std::string_view local) const {
  for (const auto& c : children) {
    if (c.is(local)) return &c;
  }
  return nullptr;
}

std::vector<const Node*> Node::children_named(std::string_view local) const {
  std::vector<const Node*> out;
  for (const auto& c : children) {
    if (c.is(local)) out.push_back(&c);
  }
  return out;
}

void Node::append_text(std::string& out) const {
  if (is_text()) {
    out += text;
    return;
  }
  for (const auto& c : children) c.append_text(out);
}

std::string Node::text_content() const {
  std::string out;
  append_text(out);
  return out;
}

namespace {

class TreeBuilder {
 public:
  TreeBuilder(std::string_view origin, std::string_view counter_reset)
      : origin_(origin), counter_reset_(counter_reset) {
    parser_ = XML_ParserCreateNS(nullptr, '|');
    if (!parser_) throw Error("cannot allocate XML parser");
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &TreeBuilder::on_start, &TreeBuilder::on_end);
    XML_SetCharacterDataHandler(parser_, &TreeBuilder::on_text);
  }
  ~TreeBuilder() { XML_ParserFree(parser_); }
  TreeBuilder(const TreeBuilder&) = delete;
  TreeBuilder& operator=(const TreeBuilder&) = delete;

  Node parse(std::string_view content) {
    if (content.find_first_not_of(" \t\r\n") == std::string_view::npos) {
      throw FormatError(origin_ + ": empty document");
    }
    // Feed in chunks so documents larger than INT_MAX still work.
    constexpr std::size_t kChunk = 1 << 20;
    std::size_t pos = 0;
    while (true) {
      const std::size_t n = std::min(kChunk, content.size() - pos);
      const bool last = pos + n == content.size();
      if (XML_Parse(parser_, content.data() + pos, static_cast<int>(n),
                    last ? XML_TRUE : XML_FALSE) == XML_STATUS_ERROR) {
        std::ostringstream msg;
        msg << origin_ << ":" << XML_GetCurrentLineNumber(parser_) << ":"
            << XML_GetCurrentColumnNumber(parser_) + 1
            << ": malformed XML: " << XML_ErrorString(XML_GetErrorCode(parser_));
        throw FormatError(msg.str());
      }
      pos += n;
      if (last) break;
    }
    if (!root_) throw FormatError(origin_ + ": no root element");
    return std::move(*root_);
  }

 private:
  static void on_start(void* data, const XML_Char* name, const XML_Char** attrs) {
    auto* self = static_cast<TreeBuilder*>(data);
    Node node;
    const std::string_view full(name);
    if (auto bar = full.rfind('|'); bar != std::string_view::npos) {
      node.ns = std::string(full.substr(0, bar));
      node.name = std::string(full.substr(bar + 1));
    } else {
      node.name = std::string(full);
    }
    for (int i = 0; attrs[i]; i += 2) {
      node.attributes.emplace_back(attrs[i], attrs[i + 1]);
    }
    if (node.name == self->counter_reset_) self->pos_ = TextPosition{};
    node.start = self->pos_;
    node.xml_line = static_cast<int>(XML_GetCurrentLineNumber(self->parser_));
    self->stack_.push_back(std::move(node));
  }

  static void on_end(void* data, const XML_Char* /*name*/) {
    auto* self = static_cast<TreeBuilder*>(data);
    Node node = std::move(self->stack_.back());
    self->stack_.pop_back();
    node.end = self->pos_;
    if (self->stack_.empty()) {
      self->root_ = std::make_unique<Node>(std::move(node));
    } else {
      self->stack_.back().children.push_back(std::move(node));
    }
  }

  static void on_text(void* data, const XML_Char* s, int len) {
    auto* self = static_cast<TreeBuilder*>(data);
    if (self->stack_.empty()) return;
    const std::string_view text(s, static_cast<std::size_t>(len));
    for (char c : text) {
      if (c == '\n') {
        ++self->pos_.line;
        self->pos_.column = 1;
      } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
        ++self->pos_.column;  // count code points, not UTF-8 bytes
      }
    }
    auto& children = self->stack_.back().children;
    if (!children.empty() && children.back().is_text()) {
      children.back().text.append(text);
      return;
    }
    Node t;
    t.kind = Node::Kind::kText;
    t.text = std::string(text);
    children.push_back(std::move(t));
  }

  XML_Parser parser_ = nullptr;
  std::string origin_;
  std::string counter_reset_;
  std::vector<Node> stack_;
  std::unique_ptr<Node> root_;
  TextPosition pos_;
};

}  // namespace

Node parse_document(std::string_view content, std::string_view origin,
                    std::string_view counter_reset) {
  TreeBuilder builder(origin, counter_reset);
  return builder.parse(content);
}

Node parse_file(const std::filesystem::path& path,
                std::string_view counter_reset) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return parse_document(ss.str(), path.string(), counter_reset);
}

}  // namespace lexlint::xml
