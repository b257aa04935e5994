// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LEXLINT_IDENTIFIER_H_
#define LEXLINT_IDENTIFIER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexlint {

enum class TermKind { kWord, kAcronym, kDigit };

struct Term {
  std::string text;   // original case
  std::string lower;  // ASCII-lowercased text
  TermKind kind = TermKind::kWord;
  std::size_t offset = 0;  // byte offset of the term inside the raw name

  bool operator==(const Term&) const = default;
};

// An identifier decomposed into ordered terms.
//
// Concatenating the term texts gives the raw identifier with every
// non-alphanumeric character ('_', '$', '@', ...) removed. A name made only
// of separators ("_", "$$") has no terms at all.
struct SplitName {
  std::string raw;
  std::vector<Term> terms;

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  const Term& front() const { return terms.front(); }
  const Term& back() const { return terms.back(); }

  // Lowercased terms joined by `separator`, e.g. "get environment variables 2".
  std::string joined_lower(std::string_view separator = " ") const;

  bool operator==(const SplitName&) const = default;
};

// Splits an identifier at separators, lower-to-upper case changes,
// letter/digit changes and acronym boundaries ("parseXMLDocument" ->
// parse|XML|Document). An uppercase run followed by a lone plural "s"
// stays together ("getIDs" -> get|IDs).
//
// Throws EmptyNameError when `name` is empty.
SplitName split_identifier(std::string_view name);

// Last word or acronym term, skipping trailing digit terms.
std::optional<Term> last_noun_term(const SplitName& split);

std::string to_lower(std::string_view text);

bool is_alnum_ascii(char c);

}  // namespace lexlint

#endif  // LEXLINT_IDENTIFIER_H_
