// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

// End-to-end analysis: srcML files in, sorted violations out.

#ifndef LEXLINT_ANALYSIS_H_
#define LEXLINT_ANALYSIS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lexlint/code_model.h"
#include "lexlint/rules.h"
#include "lexlint/srcml.h"

namespace lexlint {

struct InputManifest {
  std::vector<std::string> archives;  // srcML files read, in order
  std::vector<std::string> analyzed;  // unit filenames, in order
  std::vector<SkippedUnit> skipped;

  bool operator==(const InputManifest&) const = default;
};

struct AnalysisOptions {
  int jobs = 1;
  std::optional<Language> language_override;
};

struct AnalysisResult {
  InputManifest inputs;
  std::vector<SourceUnit> units;
  std::vector<Violation> violations;
  std::vector<std::string> warnings;  // for the diagnostic stream only
};

// A srcML file, or every "*.xml" file below a directory in path order.
// Throws IoError when `input` does not exist.
std::vector<std::filesystem::path> collect_archives(
    const std::filesystem::path& input);

// Extracts every unit and runs the rules. Units are processed on up to
// `options.jobs` threads; the result does not depend on the thread count.
AnalysisResult analyze_archives(const std::vector<SrcmlArchive>& archives,
                                const ProfileSet& profiles,
                                const AnalysisOptions& options = {});

// Loads each path with load_archive, then analyze_archives. Throws IoError
// or FormatError from loading.
AnalysisResult analyze_paths(const std::vector<std::filesystem::path>& paths,
                             const ProfileSet& profiles,
                             const AnalysisOptions& options = {});

}  // namespace lexlint

#endif  // LEXLINT_ANALYSIS_H_
