// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include "lexlint/identifier.h"

#include "lexlint/errors.h"

namespace lexlint {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

TermKind classify_term(std::string_view text) {
  bool all_digits = true;
  std::size_t uppers = 0;
  for (char c : text) {
    if (!is_digit(c)) all_digits = false;
    if (is_upper(c)) ++uppers;
  }
  if (all_digits) return TermKind::kDigit;
  if (uppers >= 2) return TermKind::kAcronym;
  return TermKind::kWord;
}

// True when a split is wanted between chunk[i - 1] and chunk[i].
bool boundary_before(std::string_view chunk, std::size_t i) {
  const char prev = chunk[i - 1];
  const char cur = chunk[i];
  if (is_digit(prev) != is_digit(cur)) return true;
  if (is_lower(prev) && is_upper(cur)) return true;
  if (is_upper(prev) && is_upper(cur) && i + 1 < chunk.size() &&
      is_lower(chunk[i + 1])) {
    // "XMLDocument": split before 'D'. A trailing plural "s" on an acronym
    // ("IDs", "URLsFor") is not a new word.
    const bool plural_acronym =
        chunk[i + 1] == 's' &&
        (i + 2 == chunk.size() || !is_lower(chunk[i + 2]));
    return !plural_acronym;
  }
  return false;
}

void append_term(SplitName& out, std::string_view chunk, std::size_t begin,
                 std::size_t end, std::size_t chunk_offset) {
  Term term;
  term.text = std::string(chunk.substr(begin, end - begin));
  term.lower = to_lower(term.text);
  term.kind = classify_term(term.text);
  term.offset = chunk_offset + begin;
  out.terms.push_back(std::move(term));
}

}  // namespace

bool is_alnum_ascii(char c) { return is_upper(c) || is_lower(c) || is_digit(c); }

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (is_upper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string SplitName::joined_lower(std::string_view separator) const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += separator;
    out += terms[i].lower;
  }
  return out;
}

SplitName split_identifier(std::string_view name) {
  if (name.empty()) throw EmptyNameError();
  SplitName out;
  out.raw = std::string(name);

  std::size_t pos = 0;
  while (pos < name.size()) {
    if (!is_alnum_ascii(name[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < name.size() && is_alnum_ascii(name[end])) ++end;
    const std::string_view chunk = name.substr(pos, end - pos);
    std::size_t start = 0;
    for (std::size_t i = 1; i < chunk.size(); ++i) {
      if (boundary_before(chunk, i)) {
        append_term(out, chunk, start, i, pos);
        start = i;
      }
    }
    append_term(out, chunk, start, chunk.size(), pos);
    pos = end;
  }
  return out;
}

std::optional<Term> last_noun_term(const SplitName& split) {
  for (auto it = split.terms.rbegin(); it != split.terms.rend(); ++it) {
    if (it->kind != TermKind::kDigit) return *it;
  }
  return std::nullopt;
}

}  // namespace lexlint
