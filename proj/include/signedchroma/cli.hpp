#pragma once

// Command dispatch for the signedchroma tool. Kept in the library so tests can
// drive it without spawning processes.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "signedchroma/chromatic.hpp"
#include "signedchroma/io.hpp"
#include "signedchroma/orientations.hpp"
#include "signedchroma/toric.hpp"
#include "signedchroma/verify.hpp"

namespace signedchroma {

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int verification_failure = 1;
inline constexpr int parse_error = 2;
inline constexpr int precondition = 3;
}  // namespace exit_code

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline nlohmann::json check_json(const Check& c) {
  const auto value = [](const std::string& s) -> nlohmann::json {
    long long x = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec == std::errc{} && ptr == s.data() + s.size()) return x;
    return s;
  };
  return {{"name", c.name}, {"lhs", value(c.lhs)}, {"rhs", value(c.rhs)}, {"holds", c.holds}};
}

inline nlohmann::json report_json(const VerificationReport& r, bool timing) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : r.checks) checks.push_back(check_json(c));
  nlohmann::json out = {{"graph", r.graph_digest},
                        {"frozen", std::vector<int>(r.frozen.begin(), r.frozen.end())},
                        {"seed", r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr)},
                        {"passed", r.passed()},
                        {"checks", std::move(checks)}};
  if (timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

inline void print_report(std::ostream& out, const VerificationReport& r, bool timing) {
  out << "graph " << r.graph_digest;
  if (!r.frozen.empty()) out << " frozen " << format_index_set(r.frozen);
  if (r.seed) out << " seed " << *r.seed;
  out << "\n";
  std::size_t failed = 0;
  for (const Check& c : r.checks) {
    out << (c.holds ? "  ok    " : "  FAIL  ") << c.name << ": " << c.lhs << " = " << c.rhs << "\n";
    if (!c.holds) ++failed;
  }
  out << (failed == 0 ? "all " + std::to_string(r.checks.size()) + " checks hold"
                      : std::to_string(failed) + " of " + std::to_string(r.checks.size()) + " checks failed");
  if (timing) out << " (" << r.elapsed_ms << " ms)";
  out << "\n";
}

struct Fraction {
  long long num = 0;
  long long den = 1;
};

inline Fraction parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    Fraction f;
    if (slash == std::string::npos) {
      f.num = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return f;
    }
    f.num = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    const std::string den = text.substr(slash + 1);
    f.den = std::stoll(den, &used);
    if (used != den.size()) throw std::invalid_argument(text);
    return f;
  } catch (const std::logic_error&) {
    throw ParseError("expected a fraction NUM/DEN, got '" + text + "'");
  }
}

}  // namespace detail

/// Runs one command; args exclude the program name. Returns the exit code.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chromatic invariants, acyclic orientations and toric arrangements of symmetric graphs",
               "signedchroma"};
  app.require_subcommand(1);
  bool json = false;
  std::string file;
  const auto with_file = [&](CLI::App* cmd) {
    cmd->add_option("FILE", file, "graph or arrangement file")->required();
    cmd->add_flag("--json", json, "machine-readable output");
  };
  const auto load_graph = [&] { return parse_graph_file(detail::read_file(file)).gamma; };
  const auto emit = [&](const nlohmann::json& j, const std::string& text) {
    if (json) {
      out << j.dump(2) << "\n";
    } else {
      out << text;
    }
  };

  std::string convert_to;
  auto* convert = app.add_subcommand("convert", "rewrite a graph file in symmetric or signed form");
  with_file(convert);
  convert->add_option("--to", convert_to, "target form")->required()->check(CLI::IsMember({"symmetric", "signed"}));

  auto* chroma = app.add_subcommand("chroma", "bivariate chromatic polynomial");
  chroma->require_subcommand(1);
  std::string method = "dc";
  auto* poly = chroma->add_subcommand("poly", "print chi_G(k, l)");
  with_file(poly);
  poly->add_option("--method", method, "dc (deletion-contraction) or interp")->check(CLI::IsMember({"dc", "interp"}));
  long long k_value = 0;
  long long l_value = 0;
  bool signed_eval = false;
  auto* eval = chroma->add_subcommand("eval", "evaluate chi_G(k, l)");
  with_file(eval);
  eval->add_option("--k", k_value, "value of k")->required()->allow_extra_args(false);
  eval->add_option("--l", l_value, "value of l")->required()->allow_extra_args(false);
  eval->add_flag("--signed-eval", signed_eval, "multiply by (-1)^n");

  bool list = false;
  auto* acyc = app.add_subcommand("acyc", "count symmetric acyclic orientations");
  with_file(acyc);
  acyc->add_flag("--list", list, "print every orientation");
  auto* classes = app.add_subcommand("classes", "count flip classes (frozen set read from the file)");
  with_file(classes);
  classes->add_flag("--list", list, "print every orientation with its class id");

  auto* toric = app.add_subcommand("toric", "toric hyperplane arrangements");
  toric->require_subcommand(1);
  long long q = 0;
  long long modulus = 0;
  auto* count = toric->add_subcommand("count", "lattice points of (1/q Z)^n / Z^n off the arrangement");
  with_file(count);
  count->add_option("--q", q, "lattice denominator")->required();
  auto* character = toric->add_subcommand("char", "characteristic polynomial");
  with_file(character);
  character->add_option("--modulus", modulus, "sample at multiples of this modulus");
  auto* chambers = toric->add_subcommand("chambers", "number of chambers");
  with_file(chambers);
  chambers->add_option("--modulus", modulus, "sample at multiples of this modulus");

  std::string orientation_text;
  auto* heights = app.add_subcommand("heights", "height function of an orientation within its flip class");
  with_file(heights);
  heights->add_option("--orientation", orientation_text, "comma-separated tail>head tokens")->required();

  bool exhaustive = false;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "check every identity on a graph");
  with_file(verify);
  verify->add_flag("--exhaustive", exhaustive, "also check height functions and flip paths");
  verify->add_flag("--timing", timing, "report elapsed time");

  std::uint64_t seed = 0;
  int trials = 0;
  int pairs = 0;
  std::string probability;
  bool require_weak = false;
  auto* random = app.add_subcommand("verify-random", "verify seeded random symmetric graphs");
  random->add_option("--seed", seed, "first seed; trial t uses seed + t")->required();
  random->add_option("--trials", trials, "number of graphs")->required()->check(CLI::NonNegativeNumber);
  random->add_option("--n", pairs, "number of vertex pairs")->required()->check(CLI::NonNegativeNumber);
  random->add_option("--p", probability, "edge-orbit probability NUM/DEN")->required();
  random->add_flag("--require-weak", require_weak, "resample until weakly connected");
  random->add_flag("--exhaustive", exhaustive, "also check height functions and flip paths");
  random->add_flag("--json", json, "machine-readable output");
  random->add_flag("--timing", timing, "report elapsed time");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  }

  try {
    if (*convert) {
      const auto gamma = load_graph();
      const std::string text = convert_to == "signed" ? format_signed(gamma) : format_symmetric(gamma);
      emit({{"format", convert_to}, {"text", text}}, text);
    } else if (*poly) {
      const auto g = load_graph().graph;
      const auto p = chromatic_polynomial(g, method == "dc" ? ChromaticMethod::deletion_contraction
                                                            : ChromaticMethod::interpolation);
      emit({{"polynomial", p.to_string()}}, p.to_string() + "\n");
    } else if (*eval) {
      const auto g = load_graph().graph;
      const auto chi = chromatic_polynomial(g);
      const Integer value = signed_eval ? signed_evaluation(chi, g.pairs(), k_value, l_value) : chi.evaluate(k_value, l_value);
      emit({{"k", k_value}, {"l", l_value}, {"signed", signed_eval}, {"value", value.str()}}, value.str() + "\n");
    } else if (*acyc) {
      const auto g = load_graph().graph;
      const auto all = enumerate_orientations(g);
      std::string text = std::to_string(all.size()) + "\n";
      nlohmann::json listed = nlohmann::json::array();
      if (list) {
        for (const auto& w : all) {
          text += format_orientation(g, w) + "\n";
          listed.push_back(format_orientation(g, w));
        }
      }
      nlohmann::json j = {{"count", all.size()}};
      if (list) j["orientations"] = listed;
      emit(j, text);
    } else if (*classes) {
      const auto gamma = load_graph();
      const auto fc = flip_classes(gamma);
      std::string text = std::to_string(fc.class_count) + "\n";
      nlohmann::json listed = nlohmann::json::array();
      if (list) {
        for (const auto& members : fc.components()) {
          nlohmann::json group = nlohmann::json::array();
          for (const auto& w : members) {
            const std::string token = format_orientation(gamma.graph, w);
            text += std::to_string(listed.size()) + " " + token + "\n";
            group.push_back(token);
          }
          listed.push_back(std::move(group));
        }
      }
      nlohmann::json j = {{"count", fc.class_count}};
      if (list) j["classes"] = listed;
      emit(j, text);
    } else if (*count || *character || *chambers) {
      const auto input = parse_toric_input(detail::read_file(file));
      const bool graphical = std::holds_alternative<ParsedGraph>(input);
      const ToricArrangement a = graphical ? build_graphical_arrangement(std::get<ParsedGraph>(input).gamma.graph)
                                           : std::get<ToricArrangement>(input);
      std::optional<long long> chosen;
      if (modulus > 0) {
        chosen = modulus;
      } else if (modulus < 0) {
        throw PreconditionError("modulus must be positive");
      } else if (graphical) {
        chosen = graphical_modulus;
      }
      if (*count) {
        const Integer c = lattice_point_count(a, q);
        emit({{"q", q}, {"count", c.str()}}, c.str() + "\n");
      } else if (*character) {
        const std::string p = toric_characteristic_polynomial(a, chosen).to_string();
        emit({{"polynomial", p}}, p + "\n");
      } else {
        const Integer c = chamber_count(a, chosen);
        emit({{"chambers", c.str()}}, c.str() + "\n");
      }
    } else if (*heights) {
      const auto gamma = load_graph();
      if (!is_weakly_connected(gamma)) throw PreconditionError("height functions need a weakly connected graph");
      const auto w = parse_orientation(gamma.graph, orientation_text);
      if (!is_acyclic(gamma.graph, w)) throw PreconditionError("orientation has a directed cycle");
      const auto fc = flip_classes(gamma);
      const auto id = fc.class_of[*fc.index_of(w)];
      const auto members = fc.components()[static_cast<std::size_t>(id)];
      const auto h = height_function(gamma, members, w);
      std::string text;
      nlohmann::json values = nlohmann::json::object();
      for (int v = -gamma.graph.pairs(); v <= gamma.graph.pairs(); ++v) {
        text += "v" + std::to_string(v) + " " + h(v).str() + "\n";
        values[std::to_string(v)] = h(v).str();
      }
      emit({{"class", id}, {"class_size", members.size()}, {"heights", values}}, text);
    } else if (*verify) {
      const auto gamma = load_graph();
      const auto report = verify_suite(gamma, exhaustive ? VerifyDepth::exhaustive : VerifyDepth::fixed);
      if (json) {
        out << detail::report_json(report, timing).dump(2) << "\n";
      } else {
        detail::print_report(out, report, timing);
      }
      return report.passed() ? exit_code::success : exit_code::verification_failure;
    } else if (*random) {
      const auto p = detail::parse_fraction(probability);
      bool all_passed = true;
      nlohmann::json reports = nlohmann::json::array();
      for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
        const auto g = random_symmetric_graph(trial_seed, pairs, p.num, p.den, require_weak);
        auto report = verify_suite(FrozenGraph(g), exhaustive ? VerifyDepth::exhaustive : VerifyDepth::fixed);
        report.seed = trial_seed;
        all_passed = all_passed && report.passed();
        if (json) {
          reports.push_back(detail::report_json(report, timing));
        } else {
          detail::print_report(out, report, timing);
        }
      }
      if (json) out << nlohmann::json({{"passed", all_passed}, {"trials", reports}}).dump(2) << "\n";
      return all_passed ? exit_code::success : exit_code::verification_failure;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::parse_error;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return exit_code::precondition;
  } catch (const ConsistencyError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return exit_code::verification_failure;
  }
  return exit_code::success;
}

}  // namespace signedchroma
