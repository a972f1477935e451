// Copyright 2026 The RDP Accounting Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// rdpacct: command-line front end for the RDP accounting library.
//
// Subcommands:
//   curve    budget curve of a composition spec as CSV
//   convert  optimal (eps, delta) conversion of a composition spec
//   bound    two-sided probability bound for a baseline event probability
//   figure2  self-composition bound comparison dataset (CSV)
//   figure3  grid vs continuous optimization dataset (CSV)
//
// Exit codes: 0 success, 2 invalid input, 3 output I/O failure,
// 4 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rdp/accountant.hpp"
#include "rdp/errors.hpp"
#include "rdp/mechanisms.hpp"

namespace {

using nlohmann::json;

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt(const rdp::Order& a) {
  return a.is_infinity() ? "inf" : fmt(a.value());
}

rdp::RdpCurve load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rdp::InputError("cannot open spec file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw rdp::InputError(std::string("malformed JSON in ") + path + ": " +
                          e.what());
  }
  if (!doc.is_object() || !doc.contains("composition")) {
    throw rdp::InputError("spec is missing the field \"composition\"");
  }
  const json& comp = doc["composition"];
  if (!comp.is_array() || comp.empty()) {
    throw rdp::InputError("field \"composition\" must be a nonempty array");
  }
  std::vector<rdp::RdpCurve::Component> components;
  for (const json& item : comp) {
    if (!item.is_object()) {
      throw rdp::InputError("entries of \"composition\" must be objects");
    }
    if (!item.contains("mechanism") || !item["mechanism"].is_string()) {
      throw rdp::InputError("entry is missing the string field \"mechanism\"");
    }
    const auto param = [&item](const char* key) {
      if (!item.contains(key) || !item[key].is_number()) {
        throw rdp::InputError(std::string("entry is missing the numeric "
                                          "field \"") +
                              key + "\"");
      }
      return item[key].get<double>();
    };
    const std::string name = item["mechanism"].get<std::string>();
    rdp::MechanismSpec spec;
    if (name == "randomized_response") {
      spec = rdp::RandomizedResponse{param("p")};
    } else if (name == "laplace") {
      spec = rdp::Laplace{param("lambda")};
    } else if (name == "gaussian") {
      spec = rdp::Gaussian{param("sigma")};
    } else if (name == "pure_dp") {
      spec = rdp::PureDp{param("eps")};
    } else {
      throw rdp::InputError("unknown value for \"mechanism\": " + name);
    }
    rdp::validate(spec);
    long count = 1;
    if (item.contains("count")) {
      if (!item["count"].is_number_integer() ||
          item["count"].get<long>() <= 0) {
        throw rdp::InputError("field \"count\" must be a positive integer");
      }
      count = item["count"].get<long>();
    }
    components.push_back({spec, count});
  }
  return rdp::RdpCurve(std::move(components));
}

rdp::OrdersGrid parse_orders(const std::string& text) {
  if (text == "default") return rdp::OrdersGrid::default_grid();
  std::vector<rdp::Order> orders;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token == "inf") {
      orders.push_back(rdp::Order::infinity());
      continue;
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw rdp::InputError("--orders entry is not a number: " + token);
    }
    if (used != token.size()) {
      throw rdp::InputError("--orders entry is not a number: " + token);
    }
    orders.push_back(rdp::Order::finite(value));
  }
  return rdp::OrdersGrid(std::move(orders));
}

void write_output(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    std::cout.flush();
    if (!std::cout) throw OutputError("failed to write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw OutputError("cannot open output file: " + path);
  out << data;
  out.flush();
  if (!out) throw OutputError("failed to write output file: " + path);
}

void cmd_curve(const std::string& spec_path, const std::string& orders,
               const std::string& out_path) {
  const rdp::RdpCurve curve = load_spec(spec_path);
  const rdp::OrdersGrid grid = parse_orders(orders);
  std::string csv = "alpha,epsilon\n";
  for (const rdp::Order& a : grid.orders()) {
    csv += fmt(a) + "," + fmt(curve.evaluate(a).value()) + "\n";
  }
  write_output(out_path, csv);
}

void cmd_convert(const std::string& spec_path, double delta,
                 const std::string& orders, bool continuous) {
  const rdp::RdpCurve curve = load_spec(spec_path);
  const rdp::OrdersGrid grid = parse_orders(orders);
  const rdp::EpsDelta result =
      rdp::optimal_eps_for_delta(curve, delta, grid, continuous);
  std::cout << "(eps, delta)-DP guarantee: eps = " << fmt(result.eps)
            << " at delta = " << fmt(result.delta)
            << ", derived at alpha = " << fmt(result.alpha) << "\n";
  std::cout << "eps=" << fmt(result.eps) << " delta=" << fmt(result.delta)
            << " alpha=" << fmt(result.alpha) << "\n";
  if (!std::cout) throw OutputError("failed to write to standard output");
}

void cmd_bound(const std::string& spec_path, double q,
               const std::string& orders, bool continuous) {
  const rdp::RdpCurve curve = load_spec(spec_path);
  const rdp::OrdersGrid grid = parse_orders(orders);
  const rdp::ProbabilityInterval interval =
      rdp::probability_interval(curve, q, grid, continuous);
  std::cout << "Probability of the event under an adjacent input, baseline "
            << fmt(q) << ":\n";
  std::cout << "  lower bound " << fmt(interval.lower) << " (alpha = "
            << fmt(interval.alpha_lower) << ")\n";
  std::cout << "  upper bound " << fmt(interval.upper) << " (alpha = "
            << fmt(interval.alpha_upper) << ")"
            << (interval.vacuous_upper ? " [vacuous, clamped to 1]" : "")
            << "\n";
  std::cout << "lower=" << fmt(interval.lower) << " upper="
            << fmt(interval.upper) << " alpha_lower="
            << fmt(interval.alpha_lower) << " alpha_upper="
            << fmt(interval.alpha_upper) << "\n";
  if (!std::cout) throw OutputError("failed to write to standard output");
}

void cmd_figure2(const std::string& mechanism, double q, long n_max, double p,
                 double lambda, const std::string& out_path) {
  rdp::MechanismSpec spec;
  if (mechanism == "rr") {
    spec = rdp::RandomizedResponse{p};
  } else if (mechanism == "laplace") {
    spec = rdp::Laplace{lambda};
  } else {
    throw rdp::InputError("unknown mechanism: " + mechanism +
                          " (expected rr or laplace)");
  }
  rdp::validate(spec);
  if (!(q > 0.0 && q < 1.0)) {
    throw rdp::InputError("baseline probability must be in (0, 1)");
  }
  if (n_max < 1) throw rdp::InputError("--n-max must be at least 1");

  const double eps = rdp::pure_dp_epsilon(spec).value();
  const double kLog10 = std::log(10.0);
  std::string csv = "n,naive,advanced_eps_delta_opt,prop_advanced,rdp_opt\n";
  for (long n = 1; n <= n_max; ++n) {
    const rdp::RdpCurve curve({{spec, n}});
    const double naive = static_cast<double>(n) * eps / kLog10;
    const double drv =
        std::log10(rdp::drv_optimal_probability_bound(eps, n, q) / q);
    const double prop =
        2.0 * eps * std::sqrt(static_cast<double>(n) * std::log(1.0 / q)) /
        kLog10;
    const auto [alpha, upper] = rdp::optimal_upper_probability_bound(
        curve, q, rdp::OrdersGrid::default_grid(), true);
    (void)alpha;
    const double rdp_opt = std::log10(upper / q);
    csv += fmt(static_cast<double>(n)) + "," + fmt(naive) + "," + fmt(drv) +
           "," + fmt(prop) + "," + fmt(rdp_opt) + "\n";
  }
  write_output(out_path, csv);
}

void cmd_figure3(std::vector<double> q_list, long n_max,
                 const std::string& out_path) {
  if (q_list.empty()) q_list = {0.1, 1e-3, 1e-6};
  for (double q : q_list) {
    if (!(q > 0.0 && q < 1.0)) {
      throw rdp::InputError("baseline probabilities must be in (0, 1)");
    }
  }
  if (n_max < 0) throw rdp::InputError("--n-max must be nonnegative");

  const std::vector<rdp::MechanismSpec> step = {
      rdp::RandomizedResponse{0.52}, rdp::Laplace{20.0}, rdp::Gaussian{10.0}};
  std::string csv = "n,q,bound_continuous,bound_grid,alpha_continuous,"
                    "alpha_grid\n";
  for (double q : q_list) {
    for (long n = 0; n <= n_max; ++n) {
      rdp::RdpCurve curve;
      if (n > 0) {
        std::vector<rdp::RdpCurve::Component> components;
        for (const rdp::MechanismSpec& m : step) components.push_back({m, n});
        curve = rdp::RdpCurve(std::move(components));
      }
      const auto [alpha_c, upper_c] = rdp::optimal_upper_probability_bound(
          curve, q, rdp::OrdersGrid::default_grid(), true);
      const auto [alpha_g, upper_g] = rdp::optimal_upper_probability_bound(
          curve, q, rdp::OrdersGrid::default_grid(), false);
      csv += fmt(static_cast<double>(n)) + "," + fmt(q) + "," +
             fmt(upper_c / q) + "," + fmt(upper_g / q) + "," + fmt(alpha_c) +
             "," + fmt(alpha_g) + "\n";
    }
  }
  write_output(out_path, csv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RDP accounting: budget curves, conversions, and bounds"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string orders = "default";
  std::string out_path = "-";
  double delta = 0.0;
  double baseline = 0.0;
  bool continuous = false;
  std::string mechanism = "rr";
  double p = 0.51;
  double lambda = 20.0;
  long n_max_fig2 = 250;
  long n_max_fig3 = 100;
  double q_fig2 = 1e-3;
  std::vector<double> q_list;

  CLI::App* curve = app.add_subcommand(
      "curve", "Emit the budget curve of a composition spec as CSV");
  curve->add_option("--spec", spec_path, "Composition spec (JSON)")
      ->required();
  curve->add_option("--orders", orders,
                    "Comma-separated orders or 'default'");
  curve->add_option("--out", out_path, "Output path ('-' for stdout)");

  CLI::App* convert = app.add_subcommand(
      "convert", "Convert a composition spec to an (eps, delta) guarantee");
  convert->add_option("--spec", spec_path, "Composition spec (JSON)")
      ->required();
  convert->add_option("--delta", delta, "Target delta in (0, 1)")->required();
  convert->add_option("--orders", orders,
                      "Comma-separated orders or 'default'");
  convert->add_flag("--continuous", continuous,
                    "Also refine over continuous orders");

  CLI::App* bound = app.add_subcommand(
      "bound", "Bound the probability change of a baseline-q event");
  bound->add_option("--spec", spec_path, "Composition spec (JSON)")
      ->required();
  bound->add_option("--baseline", baseline, "Baseline probability in [0, 1]")
      ->required();
  bound->add_option("--orders", orders, "Comma-separated orders or 'default'");
  bound->add_flag("--continuous", continuous,
                  "Also refine over continuous orders");

  CLI::App* figure2 = app.add_subcommand(
      "figure2", "Self-composition bound comparison dataset (CSV)");
  figure2->add_option("mechanism", mechanism, "rr or laplace");
  figure2->add_option("--baseline", q_fig2, "Baseline probability in (0, 1)");
  figure2->add_option("--n-max", n_max_fig2, "Largest composition count");
  figure2->add_option("--p", p, "Randomized response parameter");
  figure2->add_option("--lambda", lambda, "Laplace noise scale");
  figure2->add_option("--out", out_path, "Output path ('-' for stdout)");

  CLI::App* figure3 = app.add_subcommand(
      "figure3", "Grid vs continuous optimization dataset (CSV)");
  figure3->add_option("--q", q_list, "Baseline probabilities");
  figure3->add_option("--n-max", n_max_fig3, "Largest composition count");
  figure3->add_option("--out", out_path, "Output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*curve) {
      cmd_curve(spec_path, orders, out_path);
    } else if (*convert) {
      cmd_convert(spec_path, delta, orders, continuous);
    } else if (*bound) {
      cmd_bound(spec_path, baseline, orders, continuous);
    } else if (*figure2) {
      cmd_figure2(mechanism, q_fig2, n_max_fig2, p, lambda, out_path);
    } else if (*figure3) {
      cmd_figure3(q_list, n_max_fig3, out_path);
    }
  } catch (const rdp::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const OutputError& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return 3;
  } catch (const rdp::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const rdp::PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const rdp::ResourceError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
