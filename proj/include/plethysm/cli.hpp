#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plethysm/checked.hpp"
#include "plethysm/hwv.hpp"
#include "plethysm/io.hpp"
#include "plethysm/parallel.hpp"
#include "plethysm/partitions.hpp"
#include "plethysm/plethystic.hpp"
#include "plethysm/symfunc.hpp"
#include "plethysm/theorems.hpp"

namespace plethysm::cli {

enum ExitCode { ok = 0, usage_error = 1, computation_error = 2 };

namespace detail {

struct Options {
  std::string format = "json";
  unsigned threads = 0;
  std::string cache_dir;
  bool verbose = false;

  std::string nu, mu, lambda, lambda_star, weight, theorem;
  std::optional<int> d;
  int limit = 0;
  int r = 1;
  int n_max = 3;
  int n = 1;
  int n_star = 1;
  bool no_witness = false;
};

inline std::string cache_name(const Partition& nu, const Partition& mu, int d) {
  return "decompose-nu" + to_string(nu) + "-mu" + to_string(mu) + "-d" + std::to_string(d) + ".json";
}

inline std::string schur_text(const SchurVector& v) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [lambda, c] : v) rows.emplace_back(to_string(lambda), std::to_string(c));
  return aligned_table(rows);
}

inline void decompose(const Options& o, std::ostream& out) {
  const Partition nu = parse_partition(o.nu), mu = parse_partition(o.mu);
  const int d = o.d.value_or(mu.size() * nu.size());
  require(d >= 0, "--d must be non-negative");
  std::string json_text;
  std::filesystem::path cached;
  if (!o.cache_dir.empty()) {
    cached = std::filesystem::path(o.cache_dir) / cache_name(nu, mu, d);
    if (std::ifstream in{cached}; in) {
      std::stringstream buf;
      buf << in.rdbuf();
      json_text = buf.str();
      // a damaged cache entry is recomputed and overwritten
      try {
        if (schur_vector_from_json(nlohmann::json::parse(json_text)).degree() != mu.size() * nu.size())
          json_text.clear();
      } catch (const std::exception&) {
        json_text.clear();
      }
    }
  }
  if (json_text.empty()) {
    json_text = to_json(plethysm::decompose(nu, mu, d)).dump() + "\n";
    if (!cached.empty()) {
      std::filesystem::create_directories(cached.parent_path());
      std::ofstream(cached) << json_text;
    }
  }
  if (o.format == "json")
    out << json_text;
  else
    out << schur_text(schur_vector_from_json(nlohmann::json::parse(json_text)));
}

inline void coeff(const Options& o, std::ostream& out) {
  const Partition nu = parse_partition(o.nu), mu = parse_partition(o.mu), lambda = parse_partition(o.lambda);
  const Coeff c = plethysm_coefficient(nu, mu, lambda);
  if (o.format == "json")
    out << nlohmann::json{{"nu", nu.parts()}, {"mu", mu.parts()}, {"lambda", lambda.parts()}, {"coeff", c}}.dump()
        << "\n";
  else
    out << c << "\n";
}

inline void maximal(const Options& o, std::ostream& out) {
  const Partition nu = parse_partition(o.nu), mu = parse_partition(o.mu);
  const auto weights = maximal_weights(mu, nu);
  if (o.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (auto it = weights.rbegin(); it != weights.rend(); ++it)
      list.push_back({{"lambda", it->first.parts()}, {"count", it->second}});
    out << nlohmann::json{{"nu", nu.parts()}, {"mu", mu.parts()}, {"weights", list}}.dump() << "\n";
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    for (auto it = weights.rbegin(); it != weights.rend(); ++it)
      rows.emplace_back(to_string(it->first), std::to_string(it->second));
    out << aligned_table(rows);
  }
}

inline void pssyt(const Options& o, std::ostream& out) {
  const Partition nu = parse_partition(o.nu), mu = parse_partition(o.mu);
  require(o.limit >= 0, "--limit must be non-negative");
  std::vector<PlethysticTableau> list;
  if (!o.weight.empty()) {
    const Composition beta = trim(parse_composition(o.weight));
    if (!o.d || *o.d >= static_cast<int>(beta.size())) list = enumerate_pssyt_weight(mu, nu, beta);
  } else {
    list = enumerate_pssyt(mu, nu, o.d.value_or(mu.size() * nu.size()));
  }
  const std::size_t shown = o.limit ? std::min<std::size_t>(o.limit, list.size()) : list.size();
  if (o.format == "json") {
    nlohmann::json items = nlohmann::json::array();
    for (std::size_t k = 0; k < shown; ++k)
      items.push_back({{"tableau", to_string(list[k])}, {"weight", weight(list[k])}});
    out << nlohmann::json{{"count", list.size()}, {"tableaux", items}}.dump() << "\n";
  } else {
    for (std::size_t k = 0; k < shown; ++k) out << to_string(list[k]) << "  " << to_string(weight(list[k])) << "\n";
    out << "count " << list.size() << "\n";
  }
}

inline void hwv(const Options& o, std::ostream& out) {
  const Partition nu = parse_partition(o.nu), mu = parse_partition(o.mu), lambda = parse_partition(o.lambda);
  const auto vs = hwv_space(mu, nu, lambda, o.d);
  if (o.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& v : vs) list.push_back(to_json(v));
    out << nlohmann::json{{"dimension", vs.size()}, {"vectors", list}}.dump() << "\n";
  } else {
    out << "dimension " << vs.size() << "\n";
    for (std::size_t k = 0; k < vs.size(); ++k) {
      out << "v" << k + 1 << ":\n";
      std::vector<std::pair<std::string, std::string>> rows;
      for (const auto& [T, c] : sorted_terms(vs[k])) rows.emplace_back("  " + to_string(T), std::to_string(c));
      out << aligned_table(rows);
    }
  }
}

inline void verify(const Options& o, std::ostream& out) {
  auto part = [](const std::string& s) { return parse_partition(s); };
  VerificationReport rep;
  if (o.theorem == "1")
    rep = verify_theorem1(part(o.nu), part(o.mu), part(o.lambda), o.r);
  else if (o.theorem == "1t")
    rep = verify_theorem1_twisted(part(o.nu), part(o.mu), part(o.lambda), o.r);
  else if (o.theorem == "2")
    rep = verify_theorem2(part(o.nu), part(o.mu), part(o.lambda), o.r, o.n_max);
  else if (o.theorem == "3")
    rep = verify_theorem3(o.n, o.n_star, part(o.mu), part(o.lambda), part(o.lambda_star), !o.no_witness);
  else
    rep = verify_theorem5(part(o.nu), part(o.mu));
  if (o.format == "json")
    out << to_json(rep).dump() << "\n";
  else
    out << "theorem " << rep.theorem << ": " << to_string(rep.verdict) << "  lhs=" << rep.lhs.dump()
        << "  rhs=" << rep.rhs.dump() << "\n";
}

}  // namespace detail

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and progress to `err`. Returns 0 on success, 1 on a usage
/// error, 2 when a computation cannot complete exactly.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Plethysms of Schur functions via plethystic semistandard tableaux", "plethysm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", o.threads, "Maximum worker threads (0 = all cores)");
  app.add_option("--cache", o.cache_dir, "Directory caching decompositions")->envname("PLETHYSM_CACHE_DIR");
  app.add_flag("--verbose", o.verbose, "Report timing on standard error");

  auto* dec = app.add_subcommand("decompose", "Schur expansion of s_nu o s_mu");
  dec->add_option("--nu", o.nu)->required();
  dec->add_option("--mu", o.mu)->required();
  dec->add_option("--d", o.d, "Number of variables (default |mu||nu|)");

  auto* co = app.add_subcommand("coeff", "Single coefficient <s_nu o s_mu, s_lambda>");
  co->add_option("--nu", o.nu)->required();
  co->add_option("--mu", o.mu)->required();
  co->add_option("--lambda", o.lambda)->required();

  auto* mx = app.add_subcommand("maximal", "Dominance-maximal constituents");
  mx->add_option("--nu", o.nu)->required();
  mx->add_option("--mu", o.mu)->required();

  auto* ps = app.add_subcommand("pssyt", "List plethystic semistandard tableaux");
  ps->add_option("--nu", o.nu)->required();
  ps->add_option("--mu", o.mu)->required();
  ps->add_option("--weight", o.weight, "Restrict to this weight");
  ps->add_option("--d", o.d, "Largest entry (default |mu||nu|)");
  ps->add_option("--limit", o.limit, "Print at most this many (0 = all)");

  auto* hw = app.add_subcommand("hwv", "Highest-weight vectors of weight lambda");
  hw->add_option("--nu", o.nu)->required();
  hw->add_option("--mu", o.mu)->required();
  hw->add_option("--lambda", o.lambda)->required();
  hw->add_option("--d", o.d, "Number of variables (default l(lambda))");

  auto* ve = app.add_subcommand("verify", "Check a stability or constituent theorem on one instance");
  ve->add_option("--theorem", o.theorem)->required()->check(CLI::IsMember({"1", "1t", "2", "3", "5"}));
  ve->add_option("--nu", o.nu);
  ve->add_option("--mu", o.mu);
  ve->add_option("--lambda", o.lambda);
  ve->add_option("--lambda-star", o.lambda_star);
  ve->add_option("--r", o.r);
  ve->add_option("--nmax", o.n_max, "Largest N for theorem 2");
  ve->add_option("--n", o.n);
  ve->add_option("--n-star", o.n_star);
  ve->add_flag("--no-witness", o.no_witness, "Skip the highest-weight witness check for theorem 3");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? ok : usage_error;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? ok : usage_error;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    set_max_threads(o.threads);
    if (*dec)
      detail::decompose(o, out);
    else if (*co)
      detail::coeff(o, out);
    else if (*mx)
      detail::maximal(o, out);
    else if (*ps)
      detail::pssyt(o, out);
    else if (*hw)
      detail::hwv(o, out);
    else
      detail::verify(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const ComputationError& e) {
    err << "computation error: " << e.what() << "\n";
    return computation_error;
  }
  if (o.verbose)
    err << "elapsed "
        << std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() << " ms\n";
  return ok;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  return run(args, out, err);
}

}  // namespace plethysm::cli
