// Compares the serial reference kernels against the OpenMP ones on a
// generated lexicon and a batch of interface terms.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "semdb/catalog.hpp"
#include "semdb/demo.hpp"
#include "semdb/exec.hpp"
#include "semdb/generator.hpp"
#include "semdb/lexicon.hpp"
#include "semdb/trafo.hpp"
#include "semdb/validator.hpp"
#include "semdb/vit.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double timed(int repeat, F&& body) {
  double best = 1e100;
  for (int r = 0; r < repeat; ++r) {
    auto start = Clock::now();
    body();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-24s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx\n",
              name, serial * 1e3, parallel * 1e3,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semdb benchmark: serial reference vs OpenMP kernels"};
  std::size_t bases = 20000;
  std::size_t vits = 2000;
  int repeat = 3;
  app.add_option("--bases", bases, "Generated lexicon size");
  app.add_option("--vits", vits, "Validation batch size");
  app.add_option("--repeat", repeat, "Repetitions (best time wins)");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: not available, parallel falls back to serial\n");
#endif
  std::printf("lexicon: %zu bases, batch: %zu terms, repeat: %d\n\n", bases,
              vits, repeat);

  semdb::Lexicon lexicon = semdb::parse_lexicon_source(
      semdb::make_synthetic_lexicon_source(bases));
  semdb::RuleSet semlex = semdb::parse_rules(semdb::demo::semlex_rules_source());
  semdb::RuleSet table = semdb::parse_rules(semdb::demo::table_rules_source());

  std::string emitted_serial;
  std::string emitted_parallel;
  double semlex_serial = timed(repeat, [&] {
    emitted_serial =
        semdb::emit_outputs(lexicon, semlex, semdb::ExecMode::Serial).text;
  });
  double semlex_parallel = timed(repeat, [&] {
    emitted_parallel =
        semdb::emit_outputs(lexicon, semlex, semdb::ExecMode::Parallel).text;
  });
  report("compile (semlex)", semlex_serial, semlex_parallel);
  if (emitted_serial != emitted_parallel) {
    std::fprintf(stderr, "MISMATCH between serial and parallel compile\n");
    return 1;
  }

  double table_serial = timed(repeat, [&] {
    emitted_serial =
        semdb::emit_outputs(lexicon, table, semdb::ExecMode::Serial).text;
  });
  double table_parallel = timed(repeat, [&] {
    emitted_parallel =
        semdb::emit_outputs(lexicon, table, semdb::ExecMode::Parallel).text;
  });
  report("table", table_serial, table_parallel);
  if (emitted_serial != emitted_parallel) {
    std::fprintf(stderr, "MISMATCH between serial and parallel table\n");
    return 1;
  }

  semdb::PatternIndex index =
      semdb::build_pattern_index(lexicon, semdb::builtin_catalog());
  semdb::SortAliasTable aliases =
      semdb::parse_sort_aliases(semdb::demo::sort_aliases_source());
  std::vector<semdb::Vit> batch(
      vits, semdb::parse_vit(semdb::demo::example_vit_source()));

  std::size_t violations_serial = 0;
  std::size_t violations_parallel = 0;
  double check_serial = timed(repeat, [&] {
    violations_serial = 0;
    for (const auto& report_ : semdb::validate_batch(
             batch, index, aliases, {}, semdb::ExecMode::Serial))
      violations_serial += report_.size();
  });
  double check_parallel = timed(repeat, [&] {
    violations_parallel = 0;
    for (const auto& report_ : semdb::validate_batch(
             batch, index, aliases, {}, semdb::ExecMode::Parallel))
      violations_parallel += report_.size();
  });
  report("check (batch)", check_serial, check_parallel);
  if (violations_serial != violations_parallel) {
    std::fprintf(stderr, "MISMATCH between serial and parallel check\n");
    return 1;
  }

  return 0;
}
