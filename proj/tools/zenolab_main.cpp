// Command-line front end: probability tables, model-comparison documents and
// measurement-history dumps for the pulsed two-level protocol.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zenolab/report.hpp"

namespace {

void write_document(const std::string& document, const std::string& path) {
  if (path.empty()) {
    std::cout << document;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out << document;
}

zenolab::OutputFormat to_format(const std::string& name) {
  if (name == "csv") return zenolab::OutputFormat::csv;
  if (name == "json") return zenolab::OutputFormat::json;
  throw std::runtime_error("unknown format: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pulsed-measurement dynamics of a resonantly driven two-level system"};
  app.require_subcommand(1);

  // table1
  std::vector<int> table_n = {1, 2, 4, 8, 16, 32, 64};
  int decimals = 4;
  std::string table_output;
  CLI::App* table1 = app.add_subcommand(
      "table1", "Occupation vs survival probabilities for a list of N");
  table1->add_option("--n", table_n, "Measurement counts")
      ->delimiter(',')
      ->expected(-1);
  table1->add_option("--decimals", decimals, "Digits after the decimal point");
  table1->add_option("--output", table_output, "Write to file instead of stdout");

  // compare
  int n_min = 1;
  int n_max = 64;
  std::optional<std::uint64_t> mc_trials;
  std::uint64_t seed = zenolab::kDefaultSeed;
  std::string compare_format = "csv";
  std::string compare_output;
  CLI::App* compare = app.add_subcommand(
      "compare", "Closed forms, rate model and optional Monte Carlo, per N");
  compare->add_option("--n-min", n_min, "Smallest N");
  compare->add_option("--n-max", n_max, "Largest N");
  compare->add_option("--mc-trials", mc_trials,
                      "Monte Carlo trials per N (omit to skip MC columns)");
  compare->add_option("--seed", seed, "Monte Carlo seed");
  compare->add_option("--format", compare_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  compare->add_option("--output", compare_output,
                      "Write to file instead of stdout");

  // histories
  int histories_n = 0;
  std::string histories_format = "csv";
  std::string histories_output;
  CLI::App* histories = app.add_subcommand(
      "histories", "Every measurement record of length N with its probability");
  histories->add_option("--n", histories_n, "Measurement count (<= 12)")
      ->required();
  histories->add_option("--format", histories_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  histories->add_option("--output", histories_output,
                        "Write to file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (table1->parsed()) {
      write_document(zenolab::render_table1(table_n, decimals), table_output);
    } else if (compare->parsed()) {
      zenolab::CompareOptions options;
      options.n_min = n_min;
      options.n_max = n_max;
      options.mc_trials = mc_trials;
      options.seed = seed;
      const auto rows = zenolab::build_comparison(options);
      write_document(zenolab::render_comparison(rows, to_format(compare_format)),
                     compare_output);
    } else if (histories->parsed()) {
      write_document(
          zenolab::render_histories(histories_n, to_format(histories_format)),
          histories_output);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
  return 0;
}
