// Command line front end: compile semantic lexica, emit lemma tables,
// validate interface terms, enumerate scope readings.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "semdb/catalog.hpp"
#include "semdb/demo.hpp"
#include "semdb/error.hpp"
#include "semdb/exec.hpp"
#include "semdb/lexicon.hpp"
#include "semdb/scope.hpp"
#include "semdb/trafo.hpp"
#include "semdb/validator.hpp"
#include "semdb/vit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitStrictFailure = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw semdb::Error(semdb::ErrorCode::IoError,
                              "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Options {
  std::string lexicon_path;
  std::string rules_path;
  std::string vits_path;
  std::string aliases_path;
  std::string out_path;
  bool strict = false;
  bool serial = false;
  bool json = false;
  bool trees = false;

  semdb::ExecMode mode() const {
    return serial ? semdb::ExecMode::Serial : semdb::ExecMode::Parallel;
  }

  semdb::Lexicon load_lexicon() const {
    std::string source = lexicon_path.empty() ? semdb::demo::lexicon_source()
                                              : read_file(lexicon_path);
    semdb::Lexicon lexicon = semdb::parse_lexicon_source(source);
    auto diagnostics = semdb::check_hierarchy(lexicon);
    if (!diagnostics.empty()) {
      std::string detail;
      for (const auto& d : diagnostics)
        detail += std::string(semdb::diag_code_name(d.code)) + "(" +
                  d.name.text() + ") ";
      throw semdb::Error(semdb::ErrorCode::UnknownClass,
                         "lexicon hierarchy is not well formed: " + detail);
    }
    return lexicon;
  }

  semdb::SortAliasTable load_aliases() const {
    std::string source = aliases_path.empty()
                             ? semdb::demo::sort_aliases_source()
                             : read_file(aliases_path);
    return semdb::parse_sort_aliases(source);
  }

  void write_output(const std::string& text) const {
    if (out_path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw semdb::Error(semdb::ErrorCode::IoError,
                                 "cannot write '" + path() + "'");
    out << text;
  }

  const std::string& path() const { return out_path; }
};

int run_emit(const Options& opts, const std::string& default_rules) {
  semdb::Lexicon lexicon = opts.load_lexicon();
  std::string rules_source =
      opts.rules_path.empty() ? default_rules : read_file(opts.rules_path);
  semdb::RuleSet rules = semdb::parse_rules(rules_source);

  semdb::EmitResult result = semdb::emit_outputs(lexicon, rules, opts.mode());
  for (const auto& base : result.unmatched_bases)
    std::cerr << "warning: no rule matched base " << base.print() << "\n";
  opts.write_output(result.text);
  if (opts.strict && !result.unmatched_bases.empty()) return kExitStrictFailure;
  return kExitOk;
}

int run_check(const Options& opts) {
  semdb::Lexicon lexicon = opts.load_lexicon();
  const semdb::Catalog& catalog = semdb::builtin_catalog();
  semdb::PatternIndex index = semdb::build_pattern_index(lexicon, catalog);
  semdb::SortAliasTable aliases = opts.load_aliases();

  std::vector<semdb::Term> terms = semdb::parse_terms(read_file(opts.vits_path));

  semdb::ValidateOptions validate_opts;
  validate_opts.strict_unknown = opts.strict;

  // Terms that fail the shape check are reported without aborting the rest.
  std::vector<semdb::Vit> vits;
  std::vector<std::size_t> vit_term_index;
  bool had_errors = false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    try {
      vits.push_back(semdb::vit_from_term(terms[i]));
      vit_term_index.push_back(i);
    } catch (const semdb::Error& e) {
      std::cerr << "error: term " << (i + 1) << ": " << e.what() << "\n";
      had_errors = true;
    }
  }

  auto reports =
      semdb::validate_batch(vits, index, aliases, validate_opts, opts.mode());

  std::string output;
  std::size_t total_violations = 0;
  if (opts.json) {
    nlohmann::json records = nlohmann::json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      total_violations += reports[i].size();
      for (const auto& v : reports[i])
        records.push_back(
            {{"vit", vit_term_index[i] + 1},
             {"code", std::string(semdb::violation_code_name(v.code))},
             {"location", v.location},
             {"detail", v.detail}});
    }
    output = records.dump(2) + "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      total_violations += reports[i].size();
      if (reports[i].empty()) continue;
      if (terms.size() > 1)
        output += "% vit " + std::to_string(vit_term_index[i] + 1) + "\n";
      output += semdb::render_report(reports[i]);
    }
  }
  opts.write_output(output);

  if (had_errors) return kExitError;
  if (opts.strict && total_violations > 0) return kExitStrictFailure;
  return kExitOk;
}

int run_readings(const Options& opts) {
  const semdb::Catalog& catalog = semdb::builtin_catalog();
  std::vector<semdb::Term> terms = semdb::parse_terms(read_file(opts.vits_path));

  std::string output;
  bool had_errors = false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    try {
      semdb::Vit vit = semdb::vit_from_term(terms[i]);
      semdb::ScopeGraph graph = semdb::build_scope_graph(vit, catalog);
      auto pluggings = semdb::enumerate_pluggings(graph);
      auto fallback = semdb::default_plugging(vit, graph);

      if (terms.size() > 1)
        output += "% vit " + std::to_string(i + 1) + " (" +
                  vit.segment.utterance_id + ")\n";
      output += "readings: " + std::to_string(pluggings.size()) + "\n";
      for (const auto& plugging : pluggings) {
        output += semdb::print_plugging(plugging) + "\n";
        if (opts.trees)
          output += semdb::render_scoped_tree(
              semdb::build_scoped_tree(vit, graph, plugging));
      }
      output += "default: " + semdb::print_plugging(fallback.plugging) +
                (fallback.admissible ? " admissible" : " inadmissible") + "\n";
    } catch (const semdb::Error& e) {
      std::cerr << "error: term " << (i + 1) << ": " << e.what() << "\n";
      had_errors = true;
    }
  }
  opts.write_output(output);
  return had_errors ? kExitError : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semantic database toolchain"};
  app.require_subcommand(1);

  Options opts;

  auto add_common = [&](CLI::App* cmd, bool wants_lexicon, bool wants_rules,
                        bool wants_vits, bool wants_aliases) {
    if (wants_lexicon)
      cmd->add_option("--lexicon", opts.lexicon_path,
                      "Lexicon source file (defaults to the builtin demo)");
    if (wants_rules)
      cmd->add_option("--rules", opts.rules_path,
                      "Rule file (defaults to the builtin rule set)");
    if (wants_vits)
      cmd->add_option("--vits", opts.vits_path, "Interface term file")
          ->required();
    if (wants_aliases)
      cmd->add_option("--aliases", opts.aliases_path,
                      "Sort alias table (defaults to the builtin table)");
    cmd->add_option("--out", opts.out_path,
                    "Write output here instead of standard output");
    cmd->add_flag("--strict", opts.strict,
                  "Exit 1 on violations or unmatched bases; flag unknown "
                  "predicates");
    cmd->add_flag("--serial", opts.serial, "Disable the parallel kernels");
  };

  CLI::App* compile =
      app.add_subcommand("compile", "Compile the semantic lexicon");
  add_common(compile, true, true, false, false);

  CLI::App* table = app.add_subcommand("table", "Emit the lemma table");
  add_common(table, true, true, false, false);

  CLI::App* check =
      app.add_subcommand("check", "Validate interface terms against the database");
  add_common(check, true, false, true, true);
  check->add_flag("--json", opts.json, "Emit violations as JSON records");

  CLI::App* readings =
      app.add_subcommand("readings", "Enumerate admissible scope readings");
  add_common(readings, false, false, true, false);
  readings->add_flag("--trees", opts.trees, "Print each reading as a tree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (compile->parsed()) return run_emit(opts, semdb::demo::semlex_rules_source());
    if (table->parsed()) return run_emit(opts, semdb::demo::table_rules_source());
    if (check->parsed()) return run_check(opts);
    if (readings->parsed()) return run_readings(opts);
  } catch (const semdb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}
