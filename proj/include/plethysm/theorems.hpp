#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "plethysm/checked.hpp"
#include "plethysm/hwv.hpp"
#include "plethysm/partitions.hpp"
#include "plethysm/plethystic.hpp"
#include "plethysm/symfunc.hpp"

namespace plethysm {

enum class Verdict { pass, fail, skip };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "skip";
  }
}

/// Outcome of checking one stability or constituent statement on one
/// instance. Skipped means the instance did not meet the hypothesis.
struct VerificationReport {
  std::string theorem;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json lhs;
  nlohmann::json rhs;
  Verdict verdict = Verdict::fail;
  double ms = 0;

  bool passed() const { return verdict == Verdict::pass; }
};

namespace detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline nlohmann::json to_json(const Partition& p) { return p.parts(); }

inline nlohmann::json to_json(const std::map<Partition, Coeff>& m) {
  nlohmann::json out = nlohmann::json::array();
  for (auto it = m.rbegin(); it != m.rend(); ++it) out.push_back({{"lambda", it->first.parts()}, {"coeff", it->second}});
  return out;
}

}  // namespace detail

/// <s_nu o s_((r) u mu), s_((nr) u lambda)> = <s_nu o s_mu, s_lambda> for r >= mu_1.
inline VerificationReport verify_theorem1(const Partition& nu, const Partition& mu, const Partition& lambda, int r) {
  require(r >= 1 && r >= mu[0], "row stability needs r >= mu_1");
  require(lambda.size() == mu.size() * nu.size(), "need |lambda| = |mu||nu|");
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.theorem = "1";
  rep.params = {{"nu", nu.parts()}, {"mu", mu.parts()}, {"lambda", lambda.parts()}, {"r", r}};
  const int n = nu.size();
  const Coeff lhs = plethysm_coefficient(nu, disjoint_union(Partition{r}, mu), disjoint_union(Partition{n * r}, lambda));
  const Coeff rhs = plethysm_coefficient(nu, mu, lambda);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
  rep.ms = clock.ms();
  return rep;
}

/// The conjugate form: <s_kappa o s_(mu + (1^r)), s_(lambda + (1^nr))> =
/// <s_nu o s_mu, s_lambda> for r >= l(mu), kappa = nu (r even) or nu' (r odd).
inline VerificationReport verify_theorem1_twisted(const Partition& nu, const Partition& mu, const Partition& lambda,
                                                  int r) {
  require(r >= 1 && r >= static_cast<int>(mu.length()), "the conjugate row stability needs r >= l(mu)");
  require(lambda.size() == mu.size() * nu.size(), "need |lambda| = |mu||nu|");
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.theorem = "1t";
  rep.params = {{"nu", nu.parts()}, {"mu", mu.parts()}, {"lambda", lambda.parts()}, {"r", r}};
  const int n = nu.size();
  const Partition kappa = r % 2 == 0 ? nu : conjugate(nu);
  const Coeff lhs = plethysm_coefficient(kappa, add(mu, rectangle(1, r)), add(lambda, rectangle(1, n * r)));
  const Coeff rhs = plethysm_coefficient(nu, mu, lambda);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
  rep.ms = clock.ms();
  return rep;
}

/// n(mu_1 + ... + mu_{r-1}) + (n-1) mu_r + mu_{r+1} - (lambda_1 + ... + lambda_r).
inline int saturation_threshold(const Partition& nu, const Partition& mu, const Partition& lambda, int r) {
  require(r >= 1, "r must be positive");
  const int n = nu.size();
  int t = 0;
  for (int i = 0; i < r - 1; ++i) t += n * mu[i];
  t += (n - 1) * mu[r - 1] + mu[r];
  for (int i = 0; i < r; ++i) t -= lambda[i];
  return t;
}

/// Upper bound for the stable value of c_N: the number of plethystic
/// semistandard tableaux of shape (mu + L(1^r))^nu and weight lambda + L(n^r),
/// where L = max(saturation_threshold, 0).
inline std::uint64_t stability_bound(const Partition& nu, const Partition& mu, const Partition& lambda, int r) {
  const int L = std::max(saturation_threshold(nu, mu, lambda, r), 0);
  const int n = nu.size();
  return count_pssyt_weight(add(mu, rectangle(L, r)), nu, add(lambda, rectangle(L * n, r)).parts());
}

/// c_N = <s_nu o s_(mu + N(1^r)), s_(lambda + N(n^r))>.
inline Coeff stability_term(const Partition& nu, const Partition& mu, const Partition& lambda, int r, int N) {
  const int n = nu.size();
  return plethysm_coefficient(nu, add(mu, rectangle(N, r)), add(lambda, rectangle(N * n, r)));
}

/// c_0 <= c_1 <= ... <= c_Nmax, constant from the saturation threshold on, and
/// bounded by stability_bound once stable.
inline VerificationReport verify_theorem2(const Partition& nu, const Partition& mu, const Partition& lambda, int r,
                                          int n_max) {
  require(lambda.size() == mu.size() * nu.size(), "need |lambda| = |mu||nu|");
  require(r >= 1 && n_max >= 0, "column stability needs r >= 1 and N_max >= 0");
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.theorem = "2";
  rep.params = {{"nu", nu.parts()}, {"mu", mu.parts()}, {"lambda", lambda.parts()}, {"r", r}, {"N_max", n_max}};
  std::vector<Coeff> c;
  for (int N = 0; N <= n_max; ++N) c.push_back(stability_term(nu, mu, lambda, r, N));
  const int threshold = saturation_threshold(nu, mu, lambda, r);
  const int L = std::max(threshold, 0);
  bool ok = true;
  for (int N = 1; N <= n_max; ++N) {
    if (c[N] < c[N - 1]) ok = false;
    if (N > L && c[N] != c[N - 1]) ok = false;
  }
  std::uint64_t bound = stability_bound(nu, mu, lambda, r);
  if (L <= n_max && static_cast<std::uint64_t>(c[L]) > bound) ok = false;
  rep.lhs = c;
  rep.rhs = {{"threshold", threshold}, {"bound", bound}};
  rep.verdict = ok ? Verdict::pass : Verdict::fail;
  rep.ms = clock.ms();
  return rep;
}

/// <s_(n+n*) o s_mu, s_(lambda+lambda*)> >= <s_(n) o s_mu, s_lambda> whenever
/// <s_(n*) o s_mu, s_lambda*> >= 1. With `witness`, also multiplies a basis of
/// highest-weight vectors of weight lambda by one of weight lambda* and checks
/// the products are linearly independent highest-weight vectors.
inline VerificationReport verify_theorem3(int n, int n_star, const Partition& mu, const Partition& lambda,
                                          const Partition& lambda_star, bool witness = true) {
  require(n >= 0 && n_star >= 0, "n and n* must be non-negative");
  require(lambda.size() == n * mu.size() && lambda_star.size() == n_star * mu.size(), "degree mismatch");
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.theorem = "3";
  rep.params = {{"n", n}, {"n_star", n_star}, {"mu", mu.parts()}, {"lambda", lambda.parts()},
                {"lambda_star", lambda_star.parts()}};
  auto row = [](int k) { return k ? Partition{k} : Partition{}; };
  if (plethysm_coefficient(row(n_star), mu, lambda_star) < 1) {
    rep.verdict = Verdict::skip;
    rep.ms = clock.ms();
    return rep;
  }
  const Coeff lhs = plethysm_coefficient(row(n + n_star), mu, add(lambda, lambda_star));
  const Coeff rhs = plethysm_coefficient(row(n), mu, lambda);
  bool ok = lhs >= rhs;
  rep.lhs = lhs;
  rep.rhs = rhs;
  if (witness) {
    const int d = static_cast<int>(std::max({lambda.length(), lambda_star.length(), std::size_t{1}}));
    const auto vs = hwv_space(mu, row(n), lambda, d);
    const auto ws = hwv_space(mu, row(n_star), lambda_star, d);
    std::vector<HwVector> products;
    bool all_hw = !ws.empty();
    if (!ws.empty())
      for (const auto& v : vs) {
        products.push_back(multiply_hwv(v, ws.front()));
        if (!is_highest_weight(products.back())) all_hw = false;
      }
    const std::size_t rank = products.empty() ? 0 : rank_of(products);
    const bool independent = rank == vs.size();
    rep.rhs = {{"coeff", rhs}, {"witnesses", vs.size()}, {"witness_rank", rank}, {"highest_weight", all_hw}};
    ok = ok && all_hw && independent && static_cast<Coeff>(vs.size()) == rhs;
  }
  rep.verdict = ok ? Verdict::pass : Verdict::fail;
  rep.ms = clock.ms();
  return rep;
}

/// Dominance-maximal constituents of a Schur expansion.
inline std::map<Partition, Coeff> maximal_constituents(const SchurVector& v) {
  std::map<Partition, Coeff> out;
  for (const auto& [lambda, c] : v) {
    bool maximal = true;
    for (const auto& [other, c2] : v)
      if (other != lambda && dominates(other, lambda)) {
        maximal = false;
        break;
      }
    if (maximal) out.emplace(lambda, c);
  }
  return out;
}

inline std::map<Partition, Coeff> minimal_constituents(const SchurVector& v) {
  std::map<Partition, Coeff> out;
  for (const auto& [lambda, c] : v) {
    bool minimal = true;
    for (const auto& [other, c2] : v)
      if (other != lambda && dominates(lambda, other)) {
        minimal = false;
        break;
      }
    if (minimal) out.emplace(lambda, c);
  }
  return out;
}

/// The maximal constituents of s_nu o s_mu are the maximal plethystic tableau
/// weights, with multiplicity the tableau count; the minimal constituents are
/// the conjugates of the maximal ones of the sign-twisted plethysm.
inline VerificationReport verify_theorem5(const Partition& nu, const Partition& mu) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.theorem = "5";
  rep.params = {{"nu", nu.parts()}, {"mu", mu.parts()}};
  const SchurVector full = decompose(nu, mu);
  const auto max_full = maximal_constituents(full);
  std::map<Partition, Coeff> max_tab;
  for (const auto& [lambda, k] : maximal_weights(mu, nu)) max_tab.emplace(lambda, static_cast<Coeff>(k));

  const Partition mu_c = conjugate(mu);
  const Partition nu_t = mu.size() % 2 == 0 ? nu : conjugate(nu);
  std::map<Partition, Coeff> min_pred;
  for (const auto& [lambda, k] : maximal_weights(mu_c, nu_t)) min_pred.emplace(conjugate(lambda), static_cast<Coeff>(k));
  const auto min_full = minimal_constituents(full);

  rep.lhs = {{"maximal", detail::to_json(max_full)}, {"minimal", detail::to_json(min_full)}};
  rep.rhs = {{"maximal", detail::to_json(max_tab)}, {"minimal", detail::to_json(min_pred)}};
  rep.verdict = max_full == max_tab && min_full == min_pred ? Verdict::pass : Verdict::fail;
  rep.ms = clock.ms();
  return rep;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  return {{"theorem", r.theorem}, {"params", r.params}, {"lhs", r.lhs},
          {"rhs", r.rhs},         {"verdict", to_string(r.verdict)}, {"ms", r.ms}};
}

}  // namespace plethysm
