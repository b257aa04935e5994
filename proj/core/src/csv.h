// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

// RFC 4180 CSV with LF line endings.

#ifndef LEXLINT_SRC_CSV_H_
#define LEXLINT_SRC_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace lexlint::csv {

struct Row {
  int line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// Appends one record, quoting fields that contain ',', '"', CR or LF.
void append_row(std::string& out, const std::vector<std::string>& fields);

// Splits `text` into records; blank lines are skipped. Throws FormatError
// naming `origin` on an unterminated quoted field.
std::vector<Row> parse(std::string_view text, std::string_view origin);

}  // namespace lexlint::csv

#endif  // LEXLINT_SRC_CSV_H_
