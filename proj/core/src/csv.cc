// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include "csv.h"

#include "lexlint/errors.h"

namespace lexlint::csv {

void append_row(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char c : f) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  out += '\n';
}

std::vector<Row> parse(std::string_view text, std::string_view origin) {
  std::vector<Row> rows;
  std::size_t i = 0;
  int line = 1;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;  // UTF-8 BOM
  while (i < text.size()) {
    Row row;
    row.line = line;
    std::string field;
    bool record_done = false;
    bool any = false;
    while (!record_done) {
      if (i < text.size() && text[i] == '"') {
        const int start_line = line;
        ++i;
        while (true) {
          if (i >= text.size()) {
            throw FormatError(std::string(origin) + ":" +
                              std::to_string(start_line) +
                              ": unterminated quoted field");
          }
          const char c = text[i++];
          if (c == '"') {
            if (i < text.size() && text[i] == '"') {
              field += '"';
              ++i;
              continue;
            }
            break;
          }
          if (c == '\n') ++line;
          field += c;
        }
        any = true;
      }
      while (i < text.size() && text[i] != ',' && text[i] != '\n') {
        if (text[i] != '\r' || (i + 1 < text.size() && text[i + 1] != '\n')) {
          field += text[i];
        }
        ++i;
        any = true;
      }
      row.fields.push_back(std::move(field));
      field.clear();
      if (i >= text.size()) {
        record_done = true;
      } else if (text[i] == ',') {
        ++i;
        any = true;
      } else {  // '\n'
        ++i;
        ++line;
        record_done = true;
      }
    }
    if (any) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lexlint::csv
