#include "zenolab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "zenolab/cook.hpp"
#include "zenolab/protocol.hpp"

namespace zenolab {

namespace {

// Step count for the rate-equation column; comfortably below 1e-12 error
// for every N >= 1.
constexpr int kRateOdeSteps = 4000;

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string format_fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals,
                round_half_away(value, decimals));
  return buffer;
}

std::string levels_string(const TrajectoryHistory& history) {
  std::string text;
  text.reserve(history.levels.size());
  for (std::uint8_t level : history.levels) {
    text.push_back(static_cast<char>('0' + level));
  }
  return text;
}

}  // namespace

double round_half_away(double value, int decimals) {
  if (decimals < 0 || decimals > 17) {
    throw std::invalid_argument("round_half_away: decimals outside [0, 17]");
  }
  const double scale = std::pow(10.0, decimals);
  const double scaled = value * scale;
  return (value >= 0.0 ? std::floor(scaled + 0.5) : std::ceil(scaled - 0.5)) /
         scale;
}

std::string render_table1(const std::vector<int>& n_values, int decimals) {
  if (n_values.empty()) {
    throw std::invalid_argument("render_table1: need at least one N");
  }
  for (int n : n_values) {
    if (n < 1) {
      throw std::invalid_argument("render_table1: N must be >= 1");
    }
  }
  if (decimals < 0 || decimals > 17) {
    throw std::invalid_argument("render_table1: decimals outside [0, 17]");
  }

  const int cell_width = std::max(decimals + 4, 7);
  const int label_width = 14;
  std::ostringstream out;

  auto put_label = [&](const std::string& label) {
    out << label;
    for (int pad = static_cast<int>(label.size()); pad < label_width; ++pad) {
      out << ' ';
    }
  };
  auto put_cell = [&](const std::string& cell) {
    for (int pad = static_cast<int>(cell.size()); pad < cell_width; ++pad) {
      out << ' ';
    }
    out << cell;
  };

  put_label("N");
  for (int n : n_values) put_cell(std::to_string(n));
  out << '\n';

  put_label("P2_occupation");
  for (int n : n_values) {
    put_cell(format_fixed(occupation_closed_form(n).p2, decimals));
  }
  out << '\n';

  put_label("P2_survival");
  for (int n : n_values) {
    put_cell(format_fixed(survival_closed_form(n).surv2_complement, decimals));
  }
  out << '\n';

  return out.str();
}

std::vector<ComparisonRow> build_comparison(const CompareOptions& options) {
  if (options.n_min < 1 || options.n_min > options.n_max ||
      options.n_max > kMaxCompareN) {
    throw std::invalid_argument("build_comparison: invalid N range");
  }
  if (options.mc_trials) {
    if (*options.mc_trials == 0) {
      throw std::invalid_argument("build_comparison: need at least one trial");
    }
    if (*options.mc_trials > kMaxTrials) {
      throw std::invalid_argument("build_comparison: trial count over cap");
    }
  }

  std::vector<ComparisonRow> rows;
  rows.reserve(options.n_max - options.n_min + 1);
  for (int n = options.n_min; n <= options.n_max; ++n) {
    ComparisonRow row;
    row.n_measurements = n;
    row.p2_occupation = occupation_closed_form(n).p2;
    row.p2_survival_complement = survival_closed_form(n).surv2_complement;
    row.p2_cook = cook_closed_form(n);
    const PulseProtocol protocol(1.0, n);
    row.p2_cook_ode = integrate_rate_equations(CookModel::for_protocol(protocol),
                                               protocol.total_time(),
                                               kRateOdeSteps)
                          .p2;
    if (options.mc_trials) {
      const MCEstimate mc =
          estimate(n, *options.mc_trials, options.seed, options.threads);
      row.mc_occupation = mc.occupation_p1;
      row.mc_survival = mc.survival_p1;
      row.mc_stderr = std::max(mc.stderr_occupation, mc.stderr_survival);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string render_comparison(const std::vector<ComparisonRow>& rows,
                              OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "n_measurements,p2_occupation,p2_survival_complement,p2_cook,"
           "p2_cook_ode,mc_occupation,mc_survival,mc_stderr\n";
    for (const ComparisonRow& row : rows) {
      out << row.n_measurements << ',' << format_double(row.p2_occupation)
          << ',' << format_double(row.p2_survival_complement) << ','
          << format_double(row.p2_cook) << ','
          << format_double(row.p2_cook_ode) << ',';
      if (row.mc_occupation) out << format_double(*row.mc_occupation);
      out << ',';
      if (row.mc_survival) out << format_double(*row.mc_survival);
      out << ',';
      if (row.mc_stderr) out << format_double(*row.mc_stderr);
      out << '\n';
    }
    return out.str();
  }

  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const ComparisonRow& row : rows) {
    nlohmann::ordered_json object;
    object["n_measurements"] = row.n_measurements;
    object["p2_occupation"] = row.p2_occupation;
    object["p2_survival_complement"] = row.p2_survival_complement;
    object["p2_cook"] = row.p2_cook;
    object["p2_cook_ode"] = row.p2_cook_ode;
    if (row.mc_occupation) object["mc_occupation"] = *row.mc_occupation;
    if (row.mc_survival) object["mc_survival"] = *row.mc_survival;
    if (row.mc_stderr) object["mc_stderr"] = *row.mc_stderr;
    array.push_back(std::move(object));
  }
  return array.dump(2) + "\n";
}

std::string render_histories(int n_measurements, OutputFormat format) {
  if (n_measurements < 1 || n_measurements > kMaxHistoriesN) {
    throw std::invalid_argument("render_histories: N outside [1, 12]");
  }
  const std::vector<WeightedHistory> all =
      enumerate_histories(FlipKernel::for_measurements(n_measurements));

  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "levels,flips,probability\n";
    for (const WeightedHistory& entry : all) {
      out << levels_string(entry.history) << ',' << entry.history.flip_count()
          << ',' << format_double(entry.probability) << '\n';
    }
    return out.str();
  }

  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const WeightedHistory& entry : all) {
    nlohmann::ordered_json object;
    object["levels"] = entry.history.levels;
    object["flips"] = entry.history.flip_count();
    object["probability"] = entry.probability;
    array.push_back(std::move(object));
  }
  return array.dump(2) + "\n";
}

}  // namespace zenolab
