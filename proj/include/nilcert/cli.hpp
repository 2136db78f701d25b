#pragma once

// Command-line front end:
//   nilcert verify [--suite all|<id,...>] [--json] [--seed N] [--trials N]
//                  [--p r1,...,r7] [--jobs N] [--timings]
//   nilcert list [--json]
//   nilcert show <G|N|heisenberg|file.json> [--p r1,...,r7] [--json]
// Exit codes: 0 no failed check, 1 some check failed, 2 usage or config error.

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nilcert/checks.hpp"
#include "nilcert/liecore_json.hpp"
#include "nilcert/models.hpp"

namespace nilcert {

inline std::vector<std::string> split_list(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

/// Seven comma-separated rationals in the order p12 p13 p14 p15 p25 p35 p45.
inline Vector parse_p(const std::string& text) {
  Vector p;
  for (const auto& s : split_list(text)) p.push_back(parse_rational(s));
  if (p.size() != models::kVPrimeDim)
    throw UsageError("--p needs 7 comma-separated rationals (p12,p13,p14,p15,p25,p35,p45), got " +
                     std::to_string(p.size()));
  try {
    models::validate_p(p);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--p: ") + e.what());
  }
  return p;
}

namespace detail {

inline void show_algebra(std::ostream& out, const LieAlgebra& L) {
  out << "dim " << L.dim() << "\nbasis: " << join(L.labels(), " ") << "\nbrackets:\n";
  for (const auto& b : L.nonzero_brackets())
    out << "  [" << L.label(b.i) << ", " << L.label(b.j) << "] = " << combination_string(b.value, L.labels()) << "\n";
  try {
    const auto dims = lcs_dims(L);
    out << "lower central series dims " << tuple_string(dims) << ", class " << dims.size() - 1 << "\n";
  } catch (const DomainError&) {
    out << "not nilpotent\n";
  }
  const Subspace z = center(L);
  out << "center (dim " << z.dim() << "):";
  for (const auto& v : z.basis_vectors()) out << " {" << combination_string(v, L.labels()) << "}";
  out << "\nderivation algebra dim " << derivation_algebra(L).dim() << "\n";
}

inline void show_subspaces(std::ostream& out, const Vector* p) {
  const std::vector<std::string> wedge_labels = [] {
    std::vector<std::string> l;
    for (const auto& [i, j] : models::wedge_basis().pairs()) l.push_back("s" + std::to_string(i + 1) + "^s" + std::to_string(j + 1));
    return l;
  }();
  const auto show = [&](const char* name, const Subspace& s, const std::vector<std::string>& labels) {
    out << name << " (dim " << s.dim() << "):";
    for (const auto& v : s.basis_vectors()) out << " {" << combination_string(v, labels) << "}";
    out << "\n";
  };
  show("W", models::build_W(), wedge_labels);
  show("W'", models::build_Wprime(), wedge_labels);
  show("L", models::build_L(), models::vprime_labels());
  show("L'", models::build_Lprime(), models::vprime_labels());
  if (p) out << "p = " << combination_string(*p, models::vprime_labels()) << "\n";
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for the nilpotent Lie algebras G and N", "nilcert"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string suite = "all", p_text, model;
  std::uint64_t seed = 0;
  std::size_t trials = 100, jobs = 1;
  bool json = false, timings = false;

  auto* verify = app.add_subcommand("verify", "run checks and print a report");
  verify->add_option("--suite", suite, "all, or comma-separated check ids")->capture_default_str();
  verify->add_flag("--json", json, "print the report as JSON");
  verify->add_option("--seed", seed, "sampler seed")->capture_default_str();
  verify->add_option("--trials", trials, "sampled H-elements per sampling check")->capture_default_str();
  verify->add_option("--p", p_text, "p in V' coordinates p12,p13,p14,p15,p25,p35,p45");
  verify->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_flag("--timings", timings, "record per-check wall time (makes reports run-dependent)");

  auto* list = app.add_subcommand("list", "list check ids");
  list->add_flag("--json", json, "print as JSON");

  auto* show = app.add_subcommand("show", "print structure constants and key subspaces");
  show->add_option("model", model, "G, N, heisenberg, or a JSON algebra file")->required();
  show->add_option("--p", p_text, "p for N");
  show->add_flag("--json", json, "print the algebra as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& c : registry()) j.push_back({{"id", c.id}, {"description", c.description}, {"citation", c.citation}});
        out << j.dump(2) << "\n";
      } else {
        for (const auto& c : registry()) out << c.id << "  " << c.description << "  [" << c.citation << "]\n";
      }
      return 0;
    }

    Config config;
    if (!p_text.empty()) config.p = parse_p(p_text);

    if (*show) {
      LieAlgebra L;
      bool builtin_model = true;
      if (model == "G") L = models::build_two_step();
      else if (model == "N") L = models::build_three_step(config.p);
      else if (model == "heisenberg") L = heisenberg_algebra(1), builtin_model = false;
      else {
        std::ifstream in(model);
        if (!in) throw UsageError("unknown model '" + model + "' (expected G, N, heisenberg, or a readable file)");
        try {
          L = algebra_from_json(nlohmann::json::parse(in));
        } catch (const nlohmann::json::exception& e) {
          throw UsageError(model + ": " + e.what());
        } catch (const Error& e) {
          throw UsageError(model + ": " + e.what());
        }
        builtin_model = false;
      }
      if (json) {
        out << algebra_to_json(L).dump(2) << "\n";
        return 0;
      }
      detail::show_algebra(out, L);
      if (builtin_model) detail::show_subspaces(out, model == "N" ? &config.p : nullptr);
      return 0;
    }

    config.seed = seed;
    config.trials = trials;
    config.timings = timings;
    const auto ids = suite == "all" ? all_check_ids() : split_list(suite);
    if (ids.empty()) throw UsageError("--suite: no check ids given");
    const Report report = run(ids, config, jobs);
    if (json) out << report_json(report);
    else write_text(out, report);
    return exit_code(report);
  } catch (const UsageError& e) {
    err << "nilcert: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "nilcert: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace nilcert
