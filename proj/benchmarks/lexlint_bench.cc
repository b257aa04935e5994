// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "lexlint/lexlint.h"
#include "srcml_builder.h"

namespace {

using namespace lexlint;

std::string corpus(int units) {
  testing::Generator gen(42);
  std::vector<std::string> rendered;
  for (int i = 0; i < units; ++i) {
    const Language lang = i % 2 ? Language::kCSharp : Language::kJava;
    rendered.push_back(testing::render_unit(
        {gen.klass(lang, 12), gen.klass(lang, 12)}, lang,
        "U" + std::to_string(i) + (i % 2 ? ".cs" : ".java")));
  }
  return testing::render_archive(rendered);
}

void BM_SplitIdentifier(benchmark::State& state) {
  testing::Generator gen(1);
  std::vector<std::string> names;
  for (int i = 0; i < 1024; ++i) names.push_back(gen.method_name(i % 2));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(split_identifier(names[i++ & 1023]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SplitIdentifier);

void BM_ParseArchive(benchmark::State& state) {
  const auto xml = corpus(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_archive(xml, "bench.xml"));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(xml.size()));
}
BENCHMARK(BM_ParseArchive)->Arg(10)->Arg(100);

void BM_ExtractUnits(benchmark::State& state) {
  const auto archive = parse_archive(corpus(static_cast<int>(state.range(0))), "bench.xml");
  const auto java = ExtractionSettings::defaults(Language::kJava);
  const auto csharp = ExtractionSettings::defaults(Language::kCSharp);
  for (auto _ : state) {
    for (const auto& u : archive.units) {
      benchmark::DoNotOptimize(
          extract_unit(u, u.language == Language::kJava ? java : csharp));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ExtractUnits)->Arg(100);

void BM_RunRules(benchmark::State& state) {
  const auto archive = parse_archive(corpus(100), "bench.xml");
  const auto result = analyze_archives({archive}, ProfileSet{});
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_rules(result.units, ProfileSet{}, jobs));
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_RunRules)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
