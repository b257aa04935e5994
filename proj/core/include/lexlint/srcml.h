// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

// Reading srcML archives and turning their units into SourceUnits.

#ifndef LEXLINT_SRCML_H_
#define LEXLINT_SRCML_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexlint/code_model.h"
#include "lexlint/lexicon.h"
#include "lexlint/xml.h"

namespace lexlint {

inline constexpr std::string_view kSrcmlNamespace =
    "http://www.srcML.org/srcML/src";
inline constexpr std::string_view kSrcmlPositionNamespace =
    "http://www.srcML.org/srcML/position";

struct RawUnit {
  std::string filename;
  std::string language_tag;  // as written in the archive
  Language language = Language::kJava;
  xml::Node element;
};

struct SkippedUnit {
  std::string file;
  std::string reason;

  bool operator==(const SkippedUnit&) const = default;
};

struct SrcmlArchive {
  std::string path;
  std::vector<RawUnit> units;
  std::vector<SkippedUnit> skipped;
  std::vector<std::string> warnings;
};

// Parses srcML text. Nested archive units are flattened in document order.
// Units in a language other than Java or C# are skipped with a warning
// unless `language_override` is given, which replaces every unit's tag.
// Throws FormatError on malformed XML or a root that is not a srcML unit.
SrcmlArchive parse_archive(std::string_view content, std::string_view origin,
                           std::optional<Language> language_override = {});

// Throws IoError when `path` cannot be read, plus parse_archive's errors.
SrcmlArchive load_archive(const std::filesystem::path& path,
                          std::optional<Language> language_override = {});

// Language-specific knowledge needed while extracting entities.
struct ExtractionSettings {
  TypeLexicon types;
  TestConventions tests;

  static ExtractionSettings defaults(Language language);
};

struct ExtractionResult {
  SourceUnit unit;
  std::vector<std::string> warnings;  // e.g. declarations without a name
};

// Maps classes, methods, constructors, fields, properties, locals,
// parameters and their comments into the code model. Pure: the same unit
// always yields the same result.
ExtractionResult extract_unit(const RawUnit& unit,
                              const ExtractionSettings& settings);

}  // namespace lexlint

#endif  // LEXLINT_SRCML_H_
