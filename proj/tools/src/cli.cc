// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include "lexlint_cli/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "lexlint/lexlint.h"

namespace lexlint::cli {

namespace fs = std::filesystem;

namespace {

struct AnalyzeArgs {
  std::vector<std::string> inputs;
  std::string config;
  std::string format = "text";
  std::string output;
  std::string rules;
  int jobs = 0;
  bool fail_on_violation = false;
  bool deterministic = false;
  std::string language;
};

struct EvaluateArgs {
  std::string report;
  std::string truth;
  std::string format = "text";
  std::string output;
};

bool is_source_file(const fs::path& p) {
  const auto ext = p.extension().string();
  return ext == ".java" || ext == ".cs";
}

bool directory_has_sources(const fs::path& dir) {
  std::error_code ec;
  for (auto it = fs::recursive_directory_iterator(dir, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (it->is_regular_file() && is_source_file(it->path())) return true;
  }
  return false;
}

std::optional<fs::path> find_on_path(const std::string& exe) {
  const char* path = std::getenv("PATH");
  if (!path) return std::nullopt;
  std::string_view rest(path);
  while (!rest.empty()) {
    const auto colon = rest.find(':');
    const std::string dir(rest.substr(0, colon));
    rest = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
    if (dir.empty()) continue;
    const fs::path candidate = fs::path(dir) / exe;
    std::error_code ec;
    if (fs::is_regular_file(candidate, ec)) return candidate;
  }
  return std::nullopt;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

// Converts Java/C# sources with an external srcml executable.
fs::path convert_sources(const fs::path& input, const fs::path& srcml,
                         std::vector<fs::path>& cleanup) {
  const fs::path out = fs::temp_directory_path() /
                       ("lexlint-" + std::to_string(std::hash<std::string>{}(
                                         input.string())) +
                        "-" + std::to_string(cleanup.size()) + ".xml");
  cleanup.push_back(out);
  const std::string cmd = shell_quote(srcml.string()) + " --position " +
                          shell_quote(input.string()) + " -o " +
                          shell_quote(out.string());
  if (std::system(cmd.c_str()) != 0) {
    throw IoError("srcml failed to convert " + input.string());
  }
  return out;
}

std::vector<fs::path> resolve_inputs(const std::vector<std::string>& inputs,
                                     std::vector<fs::path>& cleanup) {
  std::vector<fs::path> archives;
  for (const auto& raw : inputs) {
    const fs::path input(raw);
    std::error_code ec;
    if (!fs::exists(input, ec)) {
      throw IoError(raw + ": no such file or directory");
    }
    const bool dir = fs::is_directory(input, ec);
    std::vector<fs::path> xml;
    if (dir) {
      xml = collect_archives(input);
    } else if (!is_source_file(input)) {
      xml.push_back(input);
    }
    if (!xml.empty() || (dir && !directory_has_sources(input))) {
      archives.insert(archives.end(), xml.begin(), xml.end());
      continue;
    }
    const auto srcml = find_on_path("srcml");
    if (!srcml) {
      throw IoError(raw +
                    ": Java/C# source input needs the srcml converter on PATH; "
                    "lexlint reads srcML XML archives (convert with "
                    "`srcml --position <src> -o <archive>.xml`)");
    }
    archives.push_back(convert_sources(input, *srcml, cleanup));
  }
  return archives;
}

std::optional<fs::path> config_path(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  std::error_code ec;
  if (fs::is_regular_file(fs::path(kDefaultConfigFile), ec)) {
    return fs::path(kDefaultConfigFile);
  }
  return std::nullopt;
}

void write_output(const std::string& text, const std::string& path,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("error writing " + path);
}

int analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  const auto format = parse_report_format(a.format);
  if (!format) {
    err << "lexlint: unknown format '" << a.format << "' (text, json, csv)\n";
    return kExitUsage;
  }
  std::optional<Language> language;
  if (!a.language.empty()) {
    language = parse_language(a.language);
    if (!language) {
      err << "lexlint: unknown language '" << a.language << "' (java, csharp)\n";
      return kExitUsage;
    }
  }

  ProfileSet profiles;
  try {
    std::vector<std::string> warnings;
    profiles = resolve_profiles(load_config(config_path(a.config)), &warnings);
    for (const auto& w : warnings) err << "lexlint: warning: " << w << '\n';
    if (!a.rules.empty()) {
      const auto ids = expand_rule_patterns(a.rules);
      for (Language lang : {Language::kJava, Language::kCSharp}) {
        auto& set = profiles.get(lang).rules;
        set = RuleSet::none();
        for (const auto& id : ids) set.enable(id);
      }
    }
  } catch (const ConfigError& e) {
    err << "lexlint: " << e.what() << '\n';
    return kExitUsage;
  }

  const int jobs =
      a.jobs > 0 ? a.jobs
                 : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const auto start = std::chrono::steady_clock::now();
  std::vector<fs::path> cleanup;
  AnalysisResult result;
  try {
    const auto archives = resolve_inputs(a.inputs, cleanup);
    result = analyze_paths(archives, profiles, {jobs, language});
  } catch (const Error& e) {
    for (const auto& p : cleanup) fs::remove(p);
    err << "lexlint: " << e.what() << '\n';
    return kExitInput;
  }
  for (const auto& p : cleanup) fs::remove(p);
  for (const auto& w : result.warnings) err << "lexlint: warning: " << w << '\n';

  std::optional<std::int64_t> elapsed;
  if (!a.deterministic) {
    elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  }
  const auto report = make_report(result, elapsed);
  try {
    write_output(render_report(report, *format), a.output, out);
  } catch (const IoError& e) {
    err << "lexlint: " << e.what() << '\n';
    return kExitInput;
  }
  if (a.fail_on_violation && !report.violations.empty()) return kExitViolations;
  return kExitClean;
}

int evaluate(const EvaluateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.format != "text" && a.format != "json") {
    err << "lexlint: unknown format '" << a.format << "' (text, json)\n";
    return kExitUsage;
  }
  try {
    const auto report = read_report_violations(a.report);
    const auto truth = load_truth(a.truth);
    const auto match = match_report(report, truth);
    const auto table = compute_precision(tallies_from_match(report, match));
    std::string text;
    if (a.format == "json") {
      text = render_precision_json(table, &match);
    } else {
      text = render_precision_text(table);
      text += std::to_string(match.joined.size()) + " joined, " +
              std::to_string(match.missed.size()) + " missed, " +
              std::to_string(match.unvalidated.size()) + " unvalidated\n";
    }
    write_output(text, a.output, out);
  } catch (const Error& e) {
    err << "lexlint: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitClean;
}

int list_rules(std::ostream& out) {
  for (const auto& r : rule_catalog()) {
    out << r.id << "  " << r.name << (r.excludes_tests ? "  (excludes test methods)" : "")
        << '\n';
  }
  return kExitClean;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Detects linguistic anti-patterns in identifier names of Java "
               "and C# code (srcML input).",
               "lexlint"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* an = app.add_subcommand("analyze", "Analyze srcML archives");
  an->add_option("--input,-i", analyze_args.inputs,
                 "srcML archive, directory of archives, or source directory "
                 "(needs srcml on PATH)")
      ->required();
  an->add_option("--config,-c", analyze_args.config,
                 "Configuration file (default: ./.lexlint.json when present)");
  an->add_option("--format,-f", analyze_args.format, "text, json or csv")
      ->capture_default_str();
  an->add_option("--output,-o", analyze_args.output, "Write the report here");
  an->add_option("--rules", analyze_args.rules,
                 "Only run these rules: ids or globs, comma separated (B.*,C.1)");
  an->add_option("--jobs,-j", analyze_args.jobs,
                 "Worker threads (default: hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  an->add_flag("--fail-on-violation", analyze_args.fail_on_violation,
               "Exit with 1 when violations are found");
  an->add_flag("--deterministic", analyze_args.deterministic,
               "Omit timing so reports are byte-identical across runs");
  an->add_option("--language", analyze_args.language,
                 "Treat every unit as java or csharp");

  EvaluateArgs eval_args;
  auto* ev = app.add_subcommand("evaluate", "Precision of a report against labels");
  ev->add_option("--report,-r", eval_args.report, "JSON or CSV report")->required();
  ev->add_option("--truth,-t", eval_args.truth,
                 "Labels: CSV with file,line,rule_id,label")
      ->required();
  ev->add_option("--format,-f", eval_args.format, "text or json")
      ->capture_default_str();
  ev->add_option("--output,-o", eval_args.output, "Write the table here");

  auto* rules = app.add_subcommand("rules", "List the detection rules");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitClean;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "lexlint: " << e.what() << '\n';
    const CLI::App* failing = app.get_subcommands().empty()
                                  ? &app
                                  : app.get_subcommands().front();
    err << failing->help();
    return kExitUsage;
  }

  if (an->parsed()) return analyze(analyze_args, out, err);
  if (ev->parsed()) return evaluate(eval_args, out, err);
  if (rules->parsed()) return list_rules(out);
  return kExitUsage;
}

}  // namespace lexlint::cli
