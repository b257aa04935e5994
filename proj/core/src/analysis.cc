// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include "lexlint/analysis.h"

#include <algorithm>

#include "lexlint/errors.h"

namespace lexlint {

namespace fs = std::filesystem;

std::vector<fs::path> collect_archives(const fs::path& input) {
  std::error_code ec;
  const auto status = fs::status(input, ec);
  if (ec || !fs::exists(status)) {
    throw IoError(input.string() + ": no such file or directory");
  }
  if (!fs::is_directory(status)) return {input};
  std::vector<fs::path> out;
  for (auto it = fs::recursive_directory_iterator(input, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == ".xml") {
      out.push_back(it->path());
    }
  }
  if (ec) throw IoError(input.string() + ": " + ec.message());
  std::sort(out.begin(), out.end());
  return out;
}

AnalysisResult analyze_archives(const std::vector<SrcmlArchive>& archives,
                                const ProfileSet& profiles,
                                const AnalysisOptions& options) {
  AnalysisResult result;
  std::vector<const RawUnit*> raw;
  for (const auto& a : archives) {
    result.inputs.archives.push_back(a.path);
    for (const auto& w : a.warnings) result.warnings.push_back(w);
    for (const auto& s : a.skipped) result.inputs.skipped.push_back(s);
    for (const auto& u : a.units) {
      raw.push_back(&u);
      result.inputs.analyzed.push_back(u.filename);
    }
  }

  const ExtractionSettings java{profiles.java.types, profiles.java.tests};
  const ExtractionSettings csharp{profiles.csharp.types, profiles.csharp.tests};
  std::vector<ExtractionResult> extracted(raw.size());
  parallel_for(raw.size(), options.jobs, [&](std::size_t i) {
    const RawUnit& unit = *raw[i];
    extracted[i] =
        extract_unit(unit, unit.language == Language::kJava ? java : csharp);
  });

  result.units.reserve(extracted.size());
  for (auto& e : extracted) {
    for (auto& w : e.warnings) result.warnings.push_back(std::move(w));
    result.units.push_back(std::move(e.unit));
  }
  result.violations = run_rules(result.units, profiles, options.jobs);
  return result;
}

AnalysisResult analyze_paths(const std::vector<fs::path>& paths,
                             const ProfileSet& profiles,
                             const AnalysisOptions& options) {
  std::vector<SrcmlArchive> archives(paths.size());
  parallel_for(paths.size(), options.jobs, [&](std::size_t i) {
    archives[i] = load_archive(paths[i], options.language_override);
  });
  return analyze_archives(archives, profiles, options);
}

}  // namespace lexlint
