// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include "lexlint/srcml.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "lexlint/errors.h"

namespace lexlint {

using xml::Node;

// ---------------------------------------------------------------------------
// Archives

namespace {

void collect_units(Node& node, std::vector<Node*>& out) {
  bool has_nested = false;
  for (auto& c : node.children) {
    if (c.is("unit") && c.ns == kSrcmlNamespace) {
      has_nested = true;
      collect_units(c, out);
    }
  }
  if (!has_nested) out.push_back(&node);
}

}  // namespace

SrcmlArchive parse_archive(std::string_view content, std::string_view origin,
                           std::optional<Language> language_override) {
  Node root = xml::parse_document(content, origin, "unit");
  if (!root.is("unit") || root.ns != kSrcmlNamespace) {
    throw FormatError(std::string(origin) +
                      ": root element is not a srcML unit (expected <unit "
                      "xmlns=\"" + std::string(kSrcmlNamespace) + "\">)");
  }
  SrcmlArchive archive;
  archive.path = std::string(origin);

  std::vector<Node*> units;
  collect_units(root, units);
  // An outer archive with no code units at all (only whitespace) is valid
  // and empty.
  if (units.size() == 1 && units.front() == &root && !root.attribute("language") &&
      root.text_content().find_first_not_of(" \t\r\n") == std::string::npos) {
    return archive;
  }
  for (Node* node : units) {
    RawUnit unit;
    unit.language_tag = std::string(node->attribute("language").value_or(""));
    if (auto fn = node->attribute("filename"); fn && !fn->empty()) {
      unit.filename = std::string(*fn);
    } else {
      unit.filename = std::string(origin);
      archive.warnings.push_back(std::string(origin) +
                                 ": unit without a filename attribute; using "
                                 "the archive path");
    }
    if (language_override) {
      unit.language = *language_override;
    } else if (auto lang = parse_language(unit.language_tag)) {
      unit.language = *lang;
    } else {
      const std::string tag =
          unit.language_tag.empty() ? "<none>" : unit.language_tag;
      archive.warnings.push_back(unit.filename + ": unsupported language '" +
                                 tag + "', unit skipped");
      archive.skipped.push_back({unit.filename, "unsupported language: " + tag});
      continue;
    }
    unit.element = std::move(*node);
    archive.units.push_back(std::move(unit));
  }
  return archive;
}

SrcmlArchive load_archive(const std::filesystem::path& path,
                          std::optional<Language> language_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return parse_archive(ss.str(), path.string(), language_override);
}

ExtractionSettings ExtractionSettings::defaults(Language language) {
  return ExtractionSettings{TypeLexicon::defaults(language),
                            TestConventions::defaults(language)};
}

// ---------------------------------------------------------------------------
// Extraction

namespace {

using NameSet = std::set<std::string, std::less<>>;

bool is_type_declaration(const Node& n) {
  return n.is("class") || n.is("struct") || n.is("interface") ||
         n.is("enum") || n.is("record");
}

bool is_function_like(const Node& n) {
  return n.is("function") || n.is("function_decl") || n.is("constructor") ||
         n.is("constructor_decl") || n.is("destructor") ||
         n.is("destructor_decl") || n.is("lambda");
}

bool is_blank(const Node& n) {
  return n.is_text() &&
         n.text.find_first_not_of(" \t\r\n") == std::string::npos;
}

int first_line(const Node& n) { return n.start.line; }

int last_line(const Node& n) {
  // `end` is just past the last character; a trailing newline inside the
  // element belongs to the previous line.
  std::string text;
  n.append_text(text);
  int line = n.end.line;
  if (!text.empty() && text.back() == '\n') --line;
  return line;
}

std::optional<std::pair<int, int>> parse_pos_pair(std::string_view v) {
  const auto colon = v.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  int line = 0, col = 0;
  auto r1 = std::from_chars(v.data(), v.data() + colon, line);
  auto r2 = std::from_chars(v.data() + colon + 1, v.data() + v.size(), col);
  if (r1.ec != std::errc{} || r2.ec != std::errc{}) return std::nullopt;
  return std::make_pair(line, col);
}

// Element position, preferring srcML position attributes when present.
std::pair<int, int> position_of(const Node& n) {
  if (auto start = n.attribute("start", kSrcmlPositionNamespace)) {
    if (auto p = parse_pos_pair(*start)) return *p;
  }
  auto line = n.attribute("line", kSrcmlPositionNamespace);
  auto col = n.attribute("column", kSrcmlPositionNamespace);
  if (line) {
    int l = 0, c = 1;
    std::from_chars(line->data(), line->data() + line->size(), l);
    if (col) std::from_chars(col->data(), col->data() + col->size(), c);
    if (l >= 1) return {l, std::max(c, 1)};
  }
  return {std::max(n.start.line, 1), std::max(n.start.column, 1)};
}

// Simple name of a declaration's <name> element: "Foo" for "Foo<T>",
// "Bar" for "IFoo.Bar".
std::string simple_name(const Node& name) {
  const Node* last = nullptr;
  for (const auto& c : name.children) {
    if (c.is("name")) last = &c;
  }
  if (!last) {
    std::string text = name.text_content();
    text.erase(std::remove_if(text.begin(), text.end(),
                              [](char c) { return c == ' ' || c == '\n' ||
                                                  c == '\t' || c == '\r'; }),
               text.end());
    return text;
  }
  return simple_name(*last);
}

// Node holding the simple name (for its position).
const Node& simple_name_node(const Node& name) {
  const Node* last = nullptr;
  for (const auto& c : name.children) {
    if (c.is("name")) last = &c;
  }
  return last ? simple_name_node(*last) : name;
}

void append_type_text(const Node& n, std::string& out) {
  for (const auto& c : n.children) {
    if (c.is_text()) {
      out += c.text;
      continue;
    }
    if (c.is("specifier") || c.is("annotation") || c.is("attribute") ||
        c.is("comment") || c.is("parameter_list")) {
      continue;
    }
    if (c.is("modifier")) {
      const std::string t = c.text_content();
      if (t == "..." || t == "?") out += t;
      continue;
    }
    append_type_text(c, out);
  }
}

std::string strip_java_modifiers(std::string text) {
  // Keywords srcML sometimes leaves as plain text inside <type>.
  static const char* const kWords[] = {"final", "static", "volatile",
                                       "transient", "ref", "out", "in",
                                       "params", "readonly", "const"};
  bool changed = true;
  while (changed) {
    changed = false;
    const auto b = text.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    text.erase(0, b);
    for (const char* w : kWords) {
      const std::string_view word(w);
      if (text.size() > word.size() && text.compare(0, word.size(), word) == 0 &&
          (text[word.size()] == ' ' || text[word.size()] == '\t' ||
           text[word.size()] == '\n')) {
        text.erase(0, word.size());
        changed = true;
      }
    }
  }
  return text;
}

std::string type_text(const Node& type) {
  std::string out;
  append_type_text(type, out);
  return strip_java_modifiers(out);
}

void collect_generic_parameters(const Node& n, NameSet& out) {
  for (const auto& c : n.children) {
    if (!c.is_element()) continue;
    if (c.is("parameter_list") && c.attribute("type") == std::optional<std::string_view>("generic")) {
      for (const auto* p : c.children_named("parameter")) {
        const Node* name = p->child("name");
        if (!name) {
          if (const Node* decl = p->child("decl")) name = decl->child("name");
          if (!name) {
            if (const Node* type = p->child("type")) name = type->child("name");
          }
        }
        if (name) out.insert(simple_name(*name));
      }
      continue;
    }
    if (c.is("name") || c.is("type")) collect_generic_parameters(c, out);
  }
}

CommentKind comment_kind(const Node& c, std::string_view text) {
  if (c.attribute("format")) return CommentKind::kDoc;
  if (text.substr(0, 3) == "/**" && text.substr(0, 4) != "/**/") {
    return CommentKind::kDoc;
  }
  if (text.substr(0, 3) == "///") return CommentKind::kDoc;
  if (c.attribute("type") == std::optional<std::string_view>("line")) {
    return CommentKind::kLine;
  }
  if (text.substr(0, 2) == "//") return CommentKind::kLine;
  return CommentKind::kBlock;
}

std::string strip_comment_delimiters(std::string_view raw) {
  std::string_view s = raw;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.substr(0, 2) == "//") {
    s.remove_prefix(2);
    while (!s.empty() && (s.front() == '/' || s.front() == '!')) s.remove_prefix(1);
    const auto b = s.find_first_not_of(" \t");
    return b == std::string_view::npos ? std::string{} : std::string(s.substr(b));
  }
  if (s.substr(0, 2) == "/*") {
    s.remove_prefix(2);
    while (!s.empty() && (s.front() == '*' || s.front() == '!')) s.remove_prefix(1);
    if (s.size() >= 2 && s.substr(s.size() - 2) == "*/") s.remove_suffix(2);
    while (!s.empty() && s.back() == '*') s.remove_suffix(1);
  }
  // Drop the leading " * " decoration of continuation lines.
  std::string out;
  std::size_t pos = 0;
  bool first = true;
  while (pos <= s.size()) {
    auto nl = s.find('\n', pos);
    if (nl == std::string_view::npos) nl = s.size();
    std::string_view line = s.substr(pos, nl - pos);
    pos = nl + 1;
    auto b = line.find_first_not_of(" \t\r");
    line = b == std::string_view::npos ? std::string_view{} : line.substr(b);
    if (!line.empty() && line.front() == '*') {
      line.remove_prefix(1);
      b = line.find_first_not_of(" \t");
      line = b == std::string_view::npos ? std::string_view{} : line.substr(b);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r')) {
      line.remove_suffix(1);
    }
    if (line.empty() && first) continue;
    if (!first) out += '\n';
    out += line;
    first = false;
  }
  while (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

struct ScopeState {
  std::string class_name;  // qualified, "Outer.Inner"
  bool is_interface = false;
  NameSet generics;
};

class UnitExtractor {
 public:
  UnitExtractor(const RawUnit& unit, const ExtractionSettings& settings)
      : unit_(unit), settings_(settings) {
    result_.unit.file_path = unit.filename;
    result_.unit.language = unit.language;
  }

  ExtractionResult run() {
    walk_container(unit_.element, nullptr);
    finish_classes();
    return std::move(result_);
  }

 private:
  Location location_of(const Node& n) const {
    const auto [line, col] = position_of(n);
    return Location{unit_.filename, line, col};
  }

  void warn(const Node& n, const std::string& what) {
    const auto [line, col] = position_of(n);
    result_.warnings.push_back(unit_.filename + ":" + std::to_string(line) +
                               ":" + std::to_string(col) + ": " + what);
  }

  SplitName split(const std::string& name) const {
    if (name.empty()) return SplitName{};
    return split_identifier(name);
  }

  TypeRef make_type(const std::string& text, const NameSet& generics) const {
    TypeRef t = parse_type(text);
    classify_in_place(t, settings_.types, generics);
    return t;
  }

  // --- comments --------------------------------------------------------

  std::optional<CommentBlock> comment_from_nodes(
      const std::vector<const Node*>& nodes) const {
    if (nodes.empty()) return std::nullopt;
    CommentBlock block;
    block.location = location_of(*nodes.front());
    std::string raw_first;
    nodes.front()->append_text(raw_first);
    block.kind = comment_kind(*nodes.front(), raw_first);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      std::string raw;
      nodes[i]->append_text(raw);
      if (i) block.text += '\n';
      block.text += strip_comment_delimiters(raw);
    }
    return block;
  }

  // Comment for siblings[index]: the run of comments ending on the line just
  // above the declaration (leading attributes included), else a comment
  // trailing on the declaration's own line. Doc comments win.
  std::optional<CommentBlock> associated_comment(
      const std::vector<Node>& siblings, std::size_t index) const {
    int decl_line = first_line(siblings[index]);
    std::size_t i = index;
    // Leading C# attributes / annotations are part of the declaration.
    while (i > 0) {
      const Node& prev = siblings[i - 1];
      if (is_blank(prev)) {
        --i;
        continue;
      }
      if (prev.is("attribute") || prev.is("annotation")) {
        decl_line = first_line(prev);
        --i;
        continue;
      }
      break;
    }
    // Chain of adjacent comments above the declaration, nearest first.
    std::vector<const Node*> chain;
    int expect_end = decl_line - 1;
    while (i > 0) {
      const Node& prev = siblings[i - 1];
      if (is_blank(prev)) {
        --i;
        continue;
      }
      if (!prev.is("comment") || last_line(prev) != expect_end) break;
      chain.push_back(&prev);
      expect_end = first_line(prev) - 1;
      --i;
    }
    if (!chain.empty()) {
      for (const Node* c : chain) {
        std::string raw;
        c->append_text(raw);
        if (comment_kind(*c, raw) == CommentKind::kDoc) {
          // A "///" doc block spans several line comments.
          std::vector<const Node*> run{c};
          auto it = std::find(chain.begin(), chain.end(), c);
          for (++it; it != chain.end(); ++it) {
            std::string r;
            (*it)->append_text(r);
            if (comment_kind(**it, r) != CommentKind::kDoc ||
                r.substr(0, 2) != "//") {
              break;
            }
            run.push_back(*it);
          }
          std::reverse(run.begin(), run.end());
          return comment_from_nodes(run);
        }
      }
      std::string raw;
      chain.front()->append_text(raw);
      if (comment_kind(*chain.front(), raw) == CommentKind::kLine) {
        std::vector<const Node*> run;
        for (const Node* c : chain) {
          std::string r;
          c->append_text(r);
          if (comment_kind(*c, r) != CommentKind::kLine) break;
          run.push_back(c);
        }
        std::reverse(run.begin(), run.end());
        return comment_from_nodes(run);
      }
      return comment_from_nodes({chain.front()});
    }
    // Trailing comment on the declaration's line.
    const int line = last_line(siblings[index]);
    for (std::size_t j = index + 1; j < siblings.size(); ++j) {
      const Node& next = siblings[j];
      if (next.is_text()) {
        if (next.text.find('\n') != std::string::npos) break;
        continue;
      }
      if (next.is("comment") && first_line(next) == line) {
        return comment_from_nodes({&next});
      }
      break;
    }
    return std::nullopt;
  }

  // --- annotations -----------------------------------------------------

  static void add_annotation_names(const Node& n, std::vector<std::string>& out) {
    std::string raw = n.text_content();
    if (n.is("annotation")) {
      const auto name = annotation_simple_name(raw);
      if (!name.empty()) out.push_back(name);
      return;
    }
    // C# "[A, B(1)]": split at top-level commas inside the brackets.
    std::string_view s = raw;
    auto b = s.find('[');
    auto e = s.rfind(']');
    if (b != std::string_view::npos) s = s.substr(b + 1, e == std::string_view::npos ? s.npos : e - b - 1);
    // Skip an attribute target such as "assembly:" / "method:".
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
      const char c = i < s.size() ? s[i] : ',';
      if (c == '(' || c == '<') ++depth;
      if (c == ')' || c == '>') --depth;
      if (c == ',' && depth == 0) {
        std::string_view item = s.substr(start, i - start);
        if (auto colon = item.find(':');
            colon != std::string_view::npos &&
            (colon + 1 >= item.size() || item[colon + 1] != ':')) {
          item = item.substr(colon + 1);
        }
        const auto name = annotation_simple_name(item);
        if (!name.empty()) out.push_back(name);
        start = i + 1;
      }
    }
  }

  static std::vector<std::string> leading_annotations(
      const std::vector<Node>& siblings, std::size_t index) {
    std::vector<std::string> out;
    std::size_t i = index;
    std::vector<const Node*> found;
    while (i > 0) {
      const Node& prev = siblings[i - 1];
      if (is_blank(prev)) {
        --i;
        continue;
      }
      if (prev.is("attribute") || prev.is("annotation")) {
        found.push_back(&prev);
        --i;
        continue;
      }
      break;
    }
    std::reverse(found.begin(), found.end());
    for (const Node* n : found) add_annotation_names(*n, out);
    return out;
  }

  static void own_annotations(const Node& decl, std::vector<std::string>& out) {
    for (const auto& c : decl.children) {
      if (c.is("annotation") || c.is("attribute")) add_annotation_names(c, out);
      if (c.is("type")) {
        for (const auto& t : c.children) {
          if (t.is("annotation") || t.is("attribute")) add_annotation_names(t, out);
        }
      }
    }
  }

  static std::vector<std::string> specifiers(const Node& decl) {
    std::vector<std::string> out;
    for (const auto& c : decl.children) {
      if (c.is("specifier")) out.push_back(c.text_content());
      if (c.is("type")) {
        for (const auto& t : c.children) {
          if (t.is("specifier")) out.push_back(t.text_content());
        }
      }
    }
    return out;
  }

  Access access_of(const Node& decl, const ScopeState& scope) const {
    for (const auto& s : specifiers(decl)) {
      if (s == "public") return Access::kPublic;
      if (s == "protected") return Access::kProtected;
      if (s == "private") return Access::kPrivate;
      if (s == "internal") return Access::kPackage;
    }
    if (scope.is_interface) return Access::kPublic;
    return unit_.language == Language::kJava ? Access::kPackage
                                              : Access::kPrivate;
  }

  // --- traversal -------------------------------------------------------

  void walk_container(const Node& node, const ScopeState* outer) {
    for (const auto& c : node.children) {
      if (!c.is_element()) continue;
      if (is_type_declaration(c)) {
        visit_type(c, outer);
      } else if (c.is("namespace") || c.is("block") || c.is("block_content") ||
                 c.is("package") || c.is("extern")) {
        walk_container(c, outer);
      }
    }
  }

  void visit_type(const Node& decl, const ScopeState* outer) {
    const Node* name_node = decl.child("name");
    if (!name_node) {
      warn(decl, "type declaration without a name skipped");
      return;
    }
    ScopeState scope;
    const std::string name = simple_name(*name_node);
    scope.class_name = outer ? outer->class_name + "." + name : name;
    scope.is_interface = decl.is("interface");
    if (outer) scope.generics = outer->generics;
    collect_generic_parameters(decl, scope.generics);

    ClassContext& ctx = class_context(scope.class_name);
    std::vector<std::string> class_annotations;
    own_annotations(decl, class_annotations);
    for (const auto& a : class_annotations) {
      if (settings_.tests.class_annotations.count(a)) ctx.is_test_class = true;
    }

    if (const Node* block = decl.child("block")) visit_members(*block, scope);
  }

  ClassContext& class_context(const std::string& name) {
    auto it = class_index_.find(name);
    if (it != class_index_.end()) return result_.unit.classes[it->second];
    class_index_.emplace(name, result_.unit.classes.size());
    result_.unit.classes.push_back(ClassContext{name, {}, false});
    return result_.unit.classes.back();
  }

  void visit_members(const Node& block, const ScopeState& scope) {
    const auto& kids = block.children;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const Node& m = kids[i];
      if (!m.is_element()) continue;
      if (is_type_declaration(m)) {
        visit_type(m, &scope);
      } else if (m.is("decl_stmt")) {
        visit_field_stmt(m, associated_comment(kids, i), scope);
      } else if (m.is("property")) {
        visit_property(m, associated_comment(kids, i), scope);
      } else if (m.is("function") || m.is("function_decl") ||
                 m.is("constructor") || m.is("constructor_decl")) {
        visit_function(m, leading_annotations(kids, i),
                       associated_comment(kids, i), scope);
      } else if (m.is("block") || m.is("block_content")) {
        visit_members(m, scope);
      }
    }
  }

  std::vector<DataEntity> decls_of(const Node& stmt, DataEntity::Kind kind,
                                   const NameSet& generics,
                                   const std::optional<CommentBlock>& comment,
                                   const std::optional<std::string>& method) {
    std::vector<DataEntity> out;
    std::string previous_type;
    for (const auto* decl : stmt.children_named("decl")) {
      if (auto e = data_entity(*decl, kind, generics, previous_type, comment, method)) {
        out.push_back(std::move(*e));
      }
    }
    return out;
  }

  std::optional<DataEntity> data_entity(const Node& decl, DataEntity::Kind kind,
                                        const NameSet& generics,
                                        std::string& previous_type,
                                        const std::optional<CommentBlock>& comment,
                                        const std::optional<std::string>& method) {
    const Node* type = decl.child("type");
    std::string spelled;
    if (type && type->attribute("ref") == std::optional<std::string_view>("prev")) {
      spelled = previous_type;
    } else if (type) {
      spelled = type_text(*type);
      previous_type = spelled;
    }
    const Node* name_node = decl.child("name");
    if (!name_node) {
      warn(decl, "declaration without a name skipped");
      return std::nullopt;
    }
    DataEntity e;
    e.name = simple_name(*name_node);
    if (e.name.empty()) {
      warn(decl, "declaration without a name skipped");
      return std::nullopt;
    }
    // "int x[]" puts the array marker on the name.
    std::string name_text = name_node->text_content();
    for (char c : name_text) {
      if (c == '[') spelled += "[]";
    }
    e.split = split(e.name);
    e.location = location_of(simple_name_node(*name_node));
    e.data_type = make_type(spelled, generics);
    e.comment = comment;
    e.kind = kind;
    e.enclosing_method = method;
    return e;
  }

  void add_attribute(ClassContext& ctx, DataEntity e) {
    const auto dup = std::find_if(
        ctx.attributes.begin(), ctx.attributes.end(), [&](const DataEntity& a) {
          return a.name == e.name && a.data_type.base_name == e.data_type.base_name;
        });
    if (dup != ctx.attributes.end()) return;  // partial class re-declaration
    ctx.attributes.push_back(std::move(e));
  }

  void visit_field_stmt(const Node& stmt, const std::optional<CommentBlock>& comment,
                        const ScopeState& scope) {
    for (auto& e : decls_of(stmt, DataEntity::Kind::kAttribute, scope.generics,
                            comment, std::nullopt)) {
      add_attribute(class_context(scope.class_name), std::move(e));
    }
  }

  void visit_property(const Node& prop, const std::optional<CommentBlock>& comment,
                      const ScopeState& scope) {
    std::string previous;
    if (auto e = data_entity(prop, DataEntity::Kind::kAttribute, scope.generics,
                             previous, comment, std::nullopt)) {
      add_attribute(class_context(scope.class_name), std::move(*e));
    }
  }

  void visit_function(const Node& fn, std::vector<std::string> annotations,
                      std::optional<CommentBlock> comment, const ScopeState& scope) {
    const Node* name_node = fn.child("name");
    if (!name_node) {
      warn(fn, "method declaration without a name skipped");
      return;
    }
    MethodEntity m;
    m.name = simple_name(*name_node);
    if (m.name.empty()) {
      warn(fn, "method declaration without a name skipped");
      return;
    }
    m.split = split(m.name);
    m.location = location_of(simple_name_node(*name_node));
    m.is_constructor = fn.is("constructor") || fn.is("constructor_decl");
    m.access = access_of(fn, scope);
    m.enclosing_class = scope.class_name;
    m.comment = std::move(comment);

    own_annotations(fn, annotations);
    m.annotations = std::move(annotations);

    NameSet generics = scope.generics;
    collect_generic_parameters(fn, generics);

    if (!m.is_constructor) {
      if (const Node* type = fn.child("type")) {
        m.return_type = make_type(type_text(*type), generics);
      }
    }

    for (const auto& c : fn.children) {
      if (c.is("parameter_list") &&
          c.attribute("type") != std::optional<std::string_view>("generic")) {
        std::string previous;
        for (const auto* p : c.children_named("parameter")) {
          const Node* decl = p->child("decl");
          if (!decl) decl = p;
          if (auto e = data_entity(*decl, DataEntity::Kind::kParameter, generics,
                                   previous, std::nullopt, m.name)) {
            m.parameters.push_back(std::move(*e));
          }
        }
      }
      if (c.is("throws")) m.body.declares_throws = true;
    }

    if (const Node* body = fn.child("block")) {
      m.has_body = true;
      scan_body(*body, m, generics);
    }

    const ClassContext& ctx = class_context(scope.class_name);
    m.is_test = classify_test_method(m, ctx, settings_.tests);
    result_.unit.methods.push_back(std::move(m));
  }

  void scan_body(const Node& node, MethodEntity& m, const NameSet& generics) {
    const auto& kids = node.children;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const Node& c = kids[i];
      if (!c.is_element()) continue;
      if (is_type_declaration(c) || (is_function_like(c) && !c.is("lambda"))) {
        continue;  // nested declarations have their own facts
      }
      if (c.is("if_stmt") || c.is("if") || c.is("switch") || c.is("ternary")) {
        m.body.has_conditional = true;
      } else if (c.is("throw")) {
        m.body.has_throw = true;
      } else if (c.is("return")) {
        if (c.child("expr")) m.body.returns_value = true;
      } else if (c.is("name") &&
                 std::none_of(c.children.begin(), c.children.end(),
                              [](const Node& k) { return k.is_element(); })) {
        std::string text = c.text_content();
        if (!text.empty()) m.body.referenced_names.insert(std::move(text));
      }
      if (c.is("decl_stmt")) {
        for (auto& e : decls_of(c, DataEntity::Kind::kLocal, generics,
                                associated_comment(kids, i), m.name)) {
          result_.unit.free_variables.push_back(std::move(e));
        }
      } else if (c.is("init") && node.is("control")) {
        for (auto& e : decls_of(c, DataEntity::Kind::kLocal, generics,
                                std::nullopt, m.name)) {
          result_.unit.free_variables.push_back(std::move(e));
        }
      }
      scan_body(c, m, generics);
    }
  }

  void finish_classes() {
    for (auto& ctx : result_.unit.classes) {
      for (const auto& m : result_.unit.methods) {
        if (m.enclosing_class == ctx.class_name && m.is_test) {
          ctx.is_test_class = true;
        }
      }
    }
  }

  const RawUnit& unit_;
  const ExtractionSettings& settings_;
  ExtractionResult result_;
  std::map<std::string, std::size_t> class_index_;
};

}  // namespace

ExtractionResult extract_unit(const RawUnit& unit,
                              const ExtractionSettings& settings) {
  return UnitExtractor(unit, settings).run();
}

}  // namespace lexlint
