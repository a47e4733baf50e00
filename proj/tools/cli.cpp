// Copyright 2026 The statdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "statdisc/applications.hpp"
#include "statdisc/discrimination.hpp"
#include "statdisc/errors.hpp"
#include "statdisc/multiport.hpp"
#include "statdisc/states.hpp"

namespace statdisc::cli {
namespace {

using Json = nlohmann::ordered_json;
using multiport::Statistics;

constexpr std::string_view kSchemaVersion = "1";
constexpr double kFractionTolerance = 1e-12;
constexpr long kMaxDenominator = 64;

struct Row {
  std::string name;
  std::variant<double, std::string> value;
  std::optional<double> reference;
};

struct Report {
  std::string experiment;
  Json config;
  std::vector<Row> rows;
};

struct Options {
  std::uint64_t seed = 42;
  std::string format = "json";
  std::string out;

  // discriminate
  std::string pair = "rho-sigma";
  std::size_t n = 2;
  std::string statistics = "fermion";
  double prior0 = 0.5;
  // scan
  std::size_t n_max = 6;
  std::string scan_statistics = "both";
  // detect
  double lambda = 0.5;
  // purify
  double r = 0.5;
  double theta = 0.0;
  double phi = 0.0;
  // classical
  std::size_t classical_n = 4;
  std::string interpretation = "standard";
  std::size_t monte_carlo = 0;
};

double closed_form_aligned_vs_mixed(std::size_t n) {
  return 1.0 - static_cast<double>(n + 1) / std::ldexp(1.0, static_cast<int>(n + 1));
}

std::string decimal(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// --- experiments ------------------------------------------------------------

double helstrom_of(const DensityMatrix& a, const DensityMatrix& b, double prior0 = 0.5) {
  const auto [h0, h1] = discrimination::hypothesis_pair(a, b, prior0);
  return discrimination::helstrom(h0, h1);
}

double beam_splitter_of(const DensityMatrix& a, const DensityMatrix& b, Statistics s) {
  const auto [h0, h1] = discrimination::hypothesis_pair(a, b);
  return discrimination::beam_splitter_discrimination(h0, h1, s).p_bs;
}

Report reproduce(const Options& opt) {
  Report rep{"reproduce", Json{{"command", "reproduce"}, {"seed", opt.seed}, {"format", opt.format}}, {}};
  const DensityMatrix rho2 = states::rho_aligned(2);
  const DensityMatrix sigma2 = states::sigma_antialigned();
  const DensityMatrix tau2 = states::tau_mixed(2);

  rep.rows.push_back({"P_H(rho2,sigma2)", helstrom_of(rho2, sigma2), 0.75});
  rep.rows.push_back({"P_BS(rho2,sigma2,fermion)", beam_splitter_of(rho2, sigma2, Statistics::fermion), 0.75});
  rep.rows.push_back({"P_BS(rho2,sigma2,boson)", beam_splitter_of(rho2, sigma2, Statistics::boson), 0.75});
  rep.rows.push_back({"P_H(rho2,tau2)", helstrom_of(rho2, tau2), 0.625});
  rep.rows.push_back({"P_BS(rho2,tau2,fermion)", beam_splitter_of(rho2, tau2, Statistics::fermion), 0.625});
  rep.rows.push_back({"P_BS(rho2,tau2,boson)", beam_splitter_of(rho2, tau2, Statistics::boson), 0.625});
  for (std::size_t n = 1; n <= multiport::kMaxArms; ++n) {
    rep.rows.push_back({"P_H(rhoN,tauN) N=" + std::to_string(n),
                        helstrom_of(states::rho_aligned(n), states::tau_mixed(n)), closed_form_aligned_vs_mixed(n)});
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    rep.rows.push_back({"P_classical(N=" + std::to_string(n) + ",standard)",
                        applications::classical_pauli_success(n), closed_form_aligned_vs_mixed(n)});
  }
  rep.rows.push_back({"P_BS(rho3,tau3,fermion)",
                      beam_splitter_of(states::rho_aligned(3), states::tau_mixed(3), Statistics::fermion), 0.75});
  rep.rows.push_back({"P_detect(singlet,fermion)",
                      applications::detect_entanglement(applications::TwoQubitPureState::singlet(), Statistics::fermion)
                          .success_probability,
                      0.625});
  return rep;
}

Report discriminate(const Options& opt) {
  const Statistics stats = multiport::parse_statistics(opt.statistics);
  DensityMatrix state0 = states::rho_aligned(2);
  DensityMatrix state1 = states::sigma_antialigned();
  if (opt.pair == "rho-sigma") {
    if (opt.n != 2) throw ArgumentError("--pair rho-sigma is defined for --n 2 only");
  } else if (opt.pair == "rho-tau") {
    if (opt.n == 0) throw ArgumentError("--n must be >= 1");
    if (opt.n > multiport::kMaxArms) {
      throw CapacityError("exact simulation supports --n <= " + std::to_string(multiport::kMaxArms));
    }
    state0 = states::rho_aligned(opt.n);
    state1 = states::tau_mixed(opt.n);
  } else {
    throw ArgumentError("unknown --pair '" + opt.pair + "' (expected rho-sigma|rho-tau)");
  }

  const auto [h0, h1] = discrimination::hypothesis_pair(std::move(state0), std::move(state1), opt.prior0);
  const auto report = discrimination::beam_splitter_discrimination(h0, h1, stats);
  Report rep{"discriminate",
             Json{{"command", "discriminate"},
                  {"pair", opt.pair},
                  {"n", opt.n},
                  {"statistics", std::string(multiport::to_string(stats))},
                  {"priors", Json::array({h0.prior, h1.prior})},
                  {"multiport", "dft"},
                  {"seed", opt.seed},
                  {"format", opt.format}},
             {}};
  rep.rows.push_back({"p_helstrom", report.p_helstrom, std::nullopt});
  rep.rows.push_back({"p_bs", report.p_bs, std::nullopt});
  rep.rows.push_back({"gap", report.gap, std::nullopt});
  for (const auto& [pattern, label] : report.strategy) {
    const std::string key = multiport::pattern_label(pattern);
    rep.rows.push_back({"P(" + key + "|H0)", report.distribution0.probability(pattern), std::nullopt});
    rep.rows.push_back({"P(" + key + "|H1)", report.distribution1.probability(pattern), std::nullopt});
    rep.rows.push_back({"decide" + key, std::string(discrimination::to_string(label)), std::nullopt});
  }
  return rep;
}

Report scan(const Options& opt) {
  std::vector<Statistics> which;
  if (opt.scan_statistics == "both") {
    which = {Statistics::fermion, Statistics::boson};
  } else {
    which = {multiport::parse_statistics(opt.scan_statistics)};
  }
  Report rep{"scan",
             Json{{"command", "scan"},
                  {"n", opt.n_max},
                  {"statistics", opt.scan_statistics},
                  {"multiport", "dft"},
                  {"seed", opt.seed},
                  {"format", opt.format}},
             {}};
  for (Statistics s : which) {
    for (const auto& rec : applications::conjecture_scan(opt.n_max, s)) {
      const std::string tag = "(N=" + std::to_string(rec.n) + "," + std::string(multiport::to_string(s)) + ")";
      rep.rows.push_back({"p_bs" + tag, rec.p_bs_optimal, std::nullopt});
      rep.rows.push_back({"p_helstrom" + tag, rec.p_helstrom, std::nullopt});
      rep.rows.push_back({"gap" + tag, rec.gap, std::nullopt});
    }
  }
  return rep;
}

Report detect(const Options& opt) {
  const Statistics stats = multiport::parse_statistics(opt.statistics);
  const auto psi = applications::TwoQubitPureState::from_schmidt(opt.lambda);
  const auto result = applications::detect_entanglement(psi, stats);
  Report rep{"detect",
             Json{{"command", "detect"},
                  {"lambda", opt.lambda},
                  {"statistics", std::string(multiport::to_string(stats))},
                  {"seed", opt.seed},
                  {"format", opt.format}},
             {}};
  rep.rows.push_back({"success_probability", result.success_probability, std::nullopt});
  rep.rows.push_back({"antibunching_probability", result.antibunching_probability, std::nullopt});
  rep.rows.push_back({"p_helstrom", result.report.p_helstrom, std::nullopt});
  return rep;
}

Report purify(const Options& opt) {
  if (!(opt.r >= 0.0 && opt.r <= 1.0)) throw ArgumentError("--r must lie in [0, 1]");
  const states::BlochDirection direction(opt.theta, opt.phi);
  const Eigen::Vector3d in = opt.r * direction.unit_vector();
  const auto result = applications::purify_symmetric(applications::qubit_from_bloch(in));
  const Eigen::Vector3d out = applications::bloch_vector(result.state);
  Report rep{"purify",
             Json{{"command", "purify"},
                  {"r", opt.r},
                  {"theta", opt.theta},
                  {"phi", opt.phi},
                  {"seed", opt.seed},
                  {"format", opt.format}},
             {}};
  rep.rows.push_back({"success_probability", result.success_probability, std::nullopt});
  rep.rows.push_back({"failure_probability", result.failure_probability, std::nullopt});
  rep.rows.push_back({"r_out", out.norm(), std::nullopt});
  rep.rows.push_back({"bloch_x", out.x(), std::nullopt});
  rep.rows.push_back({"bloch_y", out.y(), std::nullopt});
  rep.rows.push_back({"bloch_z", out.z(), std::nullopt});
  return rep;
}

Report classical(const Options& opt) {
  const auto reading = applications::parse_pauli_reading(opt.interpretation);
  Json config{{"command", "classical"},
              {"n", opt.classical_n},
              {"classical_interpretation", std::string(applications::to_string(reading))},
              {"mode", opt.monte_carlo > 0 ? "monte-carlo" : "exact"}};
  if (opt.monte_carlo > 0) config["samples"] = opt.monte_carlo;
  config["seed"] = opt.seed;
  config["format"] = opt.format;
  Report rep{"classical", std::move(config), {}};

  const double value = opt.monte_carlo > 0
                           ? applications::classical_pauli_success_monte_carlo(opt.classical_n, reading,
                                                                               opt.monte_carlo, opt.seed)
                           : applications::classical_pauli_success(opt.classical_n, reading);
  // Reference only where the exact standard reading is claimed to match it.
  const bool referenced = reading == applications::PauliReading::standard && opt.monte_carlo == 0;
  rep.rows.push_back({"P_classical", value,
                      referenced ? std::optional<double>(closed_form_aligned_vs_mixed(opt.classical_n)) : std::nullopt});
  rep.rows.push_back({"P_H(rhoN,tauN)", closed_form_aligned_vs_mixed(opt.classical_n), std::nullopt});
  return rep;
}

// --- rendering --------------------------------------------------------------

std::string render_json(const Report& rep) {
  Json results = Json::array();
  for (const Row& row : rep.rows) {
    Json entry{{"name", row.name}};
    if (const double* v = std::get_if<double>(&row.value)) {
      entry["value"] = round_significant(*v);
      if (row.reference) {
        entry["paper_value"] = round_significant(*row.reference);
        entry["abs_error"] = round_significant(std::abs(*v - *row.reference));
      }
      if (auto fraction = nearest_fraction(*v)) entry["fraction"] = *fraction;
    } else {
      entry["value"] = std::get<std::string>(row.value);
    }
    results.push_back(std::move(entry));
  }
  Json doc{{"schema_version", kSchemaVersion},
           {"experiment", rep.experiment},
           {"config", rep.config},
           {"results", std::move(results)}};
  return doc.dump(2) + "\n";
}

struct Cells {
  std::string name, value, fraction, reference, error;
};

std::vector<Cells> cells_of(const Report& rep) {
  std::vector<Cells> cells;
  for (const Row& row : rep.rows) {
    Cells c{row.name, "", "", "", ""};
    if (const double* v = std::get_if<double>(&row.value)) {
      c.value = decimal(*v);
      c.fraction = nearest_fraction(*v).value_or("");
      if (row.reference) {
        c.reference = decimal(*row.reference);
        c.error = decimal(std::abs(*v - *row.reference));
      }
    } else {
      c.value = std::get<std::string>(row.value);
    }
    cells.push_back(std::move(c));
  }
  return cells;
}

std::string render_csv(const Report& rep) {
  std::string text = "name,value,fraction,paper_value,abs_error\r\n";
  for (const Cells& c : cells_of(rep)) {
    text += csv_field(c.name) + "," + csv_field(c.value) + "," + c.fraction + "," + c.reference + "," + c.error +
            "\r\n";
  }
  return text;
}

std::string render_table(const Report& rep) {
  const std::vector<Cells> cells = cells_of(rep);
  const Cells header{"quantity", "value", "fraction", "paper_value", "abs_error"};
  std::size_t w[4] = {header.name.size(), header.value.size(), header.fraction.size(), header.reference.size()};
  for (const Cells& c : cells) {
    w[0] = std::max(w[0], c.name.size());
    w[1] = std::max(w[1], c.value.size());
    w[2] = std::max(w[2], c.fraction.size());
    w[3] = std::max(w[3], c.reference.size());
  }
  std::ostringstream os;
  os << "experiment: " << rep.experiment << "\nconfig: " << rep.config.dump() << "\n";
  const auto line = [&](const Cells& c) {
    std::string text = c.name + std::string(w[0] - c.name.size() + 2, ' ') + c.value +
                       std::string(w[1] - c.value.size() + 2, ' ') + c.fraction +
                       std::string(w[2] - c.fraction.size() + 2, ' ') + c.reference +
                       std::string(w[3] - c.reference.size() + 2, ' ') + c.error;
    text.erase(text.find_last_not_of(' ') + 1);
    os << text << "\n";
  };
  line(header);
  for (const Cells& c : cells) line(c);
  return os.str();
}

bool has_mismatch(const Report& rep) {
  return std::any_of(rep.rows.begin(), rep.rows.end(), [](const Row& row) {
    const double* v = std::get_if<double>(&row.value);
    return v && row.reference && !(std::abs(*v - *row.reference) <= kReproductionTolerance);
  });
}

}  // namespace

std::optional<std::string> nearest_fraction(double value) {
  if (!std::isfinite(value)) return std::nullopt;
  for (long q = 1; q <= kMaxDenominator; ++q) {
    const double p = std::round(value * static_cast<double>(q));
    if (std::abs(value - p / static_cast<double>(q)) <= kFractionTolerance) {
      return std::to_string(static_cast<long>(p)) + "/" + std::to_string(q);
    }
  }
  return std::nullopt;
}

double round_significant(double value) { return std::strtod(decimal(value).c_str(), nullptr); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact simulation of state discrimination with particle statistics", "statdisc"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  const auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "Seed for every sampled quantity");
    sub->add_option("--format", opt.format, "Output encoding")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--out", opt.out, "Write the report to this path instead of stdout");
  };

  CLI::App* cmd_reproduce = app.add_subcommand("reproduce", "Recompute every reference probability");
  add_common(cmd_reproduce);

  CLI::App* cmd_discriminate = app.add_subcommand("discriminate", "Helstrom bound vs multiport strategy");
  cmd_discriminate->add_option("--pair", opt.pair, "Hypothesis pair")->check(CLI::IsMember({"rho-sigma", "rho-tau"}));
  cmd_discriminate->add_option("--n", opt.n, "Particle count (rho-tau)");
  cmd_discriminate->add_option("--statistics", opt.statistics, "Particle statistics")
      ->check(CLI::IsMember({"boson", "fermion"}));
  cmd_discriminate->add_option("--prior0", opt.prior0, "Prior of the aligned hypothesis")->check(CLI::Range(0.0, 1.0));
  add_common(cmd_discriminate);

  CLI::App* cmd_scan = app.add_subcommand("scan", "Multiport success vs Helstrom for N = 1..n");
  cmd_scan->add_option("--n", opt.n_max, "Largest particle count");
  cmd_scan->add_option("--statistics", opt.scan_statistics, "Particle statistics")
      ->check(CLI::IsMember({"boson", "fermion", "both"}));
  add_common(cmd_scan);

  CLI::App* cmd_detect = app.add_subcommand("detect", "Entanglement detection of a two-qubit pure state");
  cmd_detect->add_option("--lambda", opt.lambda, "Smaller Schmidt coefficient squared, in [0, 1/2]");
  cmd_detect->add_option("--statistics", opt.statistics, "Particle statistics")
      ->check(CLI::IsMember({"boson", "fermion"}));
  add_common(cmd_detect);

  CLI::App* cmd_purify = app.add_subcommand("purify", "Symmetric-subspace purification of a qubit");
  cmd_purify->add_option("--r", opt.r, "Bloch vector length");
  cmd_purify->add_option("--theta", opt.theta, "Polar angle");
  cmd_purify->add_option("--phi", opt.phi, "Azimuthal angle");
  add_common(cmd_purify);

  CLI::App* cmd_classical = app.add_subcommand("classical", "Classical exclusion-rule model");
  cmd_classical->add_option("--n", opt.classical_n, "Particle count");
  cmd_classical->add_option("--classical-interpretation", opt.interpretation, "Occupancy rule")
      ->check(CLI::IsMember({"standard", "literal"}));
  cmd_classical->add_option("--monte-carlo", opt.monte_carlo, "Sample count instead of exact enumeration");
  add_common(cmd_classical);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  Report rep;
  try {
    if (active == cmd_reproduce) rep = reproduce(opt);
    else if (active == cmd_discriminate) rep = discriminate(opt);
    else if (active == cmd_scan) rep = scan(opt);
    else if (active == cmd_detect) rep = detect(opt);
    else if (active == cmd_purify) rep = purify(opt);
    else rep = classical(opt);
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    if (active == cmd_classical) err << "hint: use --monte-carlo SAMPLES for larger N\n";
    return kCapacity;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }

  std::string text;
  if (opt.format == "json") text = render_json(rep);
  else if (opt.format == "csv") text = render_csv(rep);
  else text = render_table(rep);

  if (opt.out.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.out, std::ios::binary);
    file << text;
    if (!file) {
      err << "internal error: cannot write " << opt.out << "\n";
      return kInternalError;
    }
  }
  if (has_mismatch(rep)) {
    err << "reproduction mismatch above " << kReproductionTolerance << "\n";
    return kMismatch;
  }
  return kSuccess;
}

}  // namespace statdisc::cli
