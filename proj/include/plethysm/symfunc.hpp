#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "plethysm/checked.hpp"
#include "plethysm/lincomb.hpp"
#include "plethysm/parallel.hpp"
#include "plethysm/partitions.hpp"
#include "plethysm/plethystic.hpp"
#include "plethysm/tableaux.hpp"

namespace plethysm {

/// Integer combination of Schur functions s_lambda, all of one degree.
/// Terms iterate in decreasing reverse-lexicographic order.
class SchurVector {
 public:
  using Terms = LinearCombination<Partition, std::greater<Partition>>;

  explicit SchurVector(int degree = 0) : degree_(degree) {}

  /// s_lambda itself.
  static SchurVector schur(const Partition& lambda) {
    SchurVector v(lambda.size());
    v.add(lambda, 1);
    return v;
  }

  int degree() const { return degree_; }
  void add(const Partition& lambda, Coeff c) {
    require(lambda.size() == degree_, "partition " + to_string(lambda) + " has the wrong degree");
    terms_.add(lambda, c);
  }
  Coeff coeff(const Partition& lambda) const { return terms_.coeff(lambda); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const SchurVector& a, const SchurVector& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_;
  Terms terms_;
};

/// Dimensions of the partition weight spaces of a polynomial representation
/// in d variables. Zero entries are omitted.
struct WeightMultiplicityMap {
  int degree = 0;
  int d = 0;
  std::map<Partition, Coeff, std::greater<Partition>> mult;

  Coeff at(const Partition& beta) const {
    auto it = mult.find(beta);
    return it == mult.end() ? 0 : it->second;
  }
};

/// Partition weights of s_lambda(x_1, ..., x_d): the Kostka numbers.
inline WeightMultiplicityMap schur_weights(const Partition& lambda, int d) {
  WeightMultiplicityMap w{lambda.size(), d, {}};
  for (const auto& beta : enumerate_partitions(lambda.size(), static_cast<std::size_t>(d)))
    if (const auto k = kostka(lambda, beta.parts())) w.mult.emplace(beta, static_cast<Coeff>(k));
  return w;
}

/// For each partition beta with at most d parts, the number of plethystic
/// semistandard tableaux of shape mu^nu and weight beta.
inline WeightMultiplicityMap plethysm_weights(const Partition& nu, const Partition& mu, int d) {
  require(d >= 0, "letter bound must be non-negative");
  const int n = mu.size() * nu.size();
  WeightMultiplicityMap w{n, d, {}};
  const auto betas = enumerate_partitions(n, static_cast<std::size_t>(d));
  std::vector<std::uint64_t> counts(betas.size());
  parallel_for(betas.size(), [&](std::size_t k) { counts[k] = count_pssyt_weight(mu, nu, betas[k].parts()); });
  for (std::size_t k = 0; k < betas.size(); ++k)
    if (counts[k]) w.mult.emplace(betas[k], static_cast<Coeff>(counts[k]));
  return w;
}

namespace detail {

// Peels Schur functions off the partitions in `order` (decreasing
// reverse-lex): the residue at each pivot is its Schur coefficient.
inline SchurVector pivot_expand(const std::vector<Partition>& order, std::map<Partition, Coeff> residue,
                                int degree) {
  SchurVector out(degree);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Coeff c = residue[order[k]];
    if (c < 0)
      throw ComputationError("negative residue at " + to_string(order[k]) + ": input is not a character");
    if (c == 0) continue;
    out.add(order[k], c);
    for (std::size_t q = k + 1; q < order.size(); ++q) {
      if (!dominates(order[k], order[q])) continue;
      const auto K = kostka(order[k], order[q].parts());
      if (K) residue[order[q]] = checked_sub(residue[order[q]], checked_mul(c, static_cast<Coeff>(K)));
    }
  }
  return out;
}

}  // namespace detail

/// The Schur expansion whose partition weights are w. Only Schur functions
/// with at most w.d parts are visible in d variables.
inline SchurVector schur_expand(const WeightMultiplicityMap& w) {
  const auto order = enumerate_partitions(w.degree, static_cast<std::size_t>(w.d));
  std::map<Partition, Coeff> residue;
  for (const auto& [beta, m] : w.mult) {
    require(beta.size() == w.degree, "weight " + to_string(beta) + " has the wrong degree");
    if (beta.length() <= static_cast<std::size_t>(w.d)) residue[beta] = m;
  }
  return detail::pivot_expand(order, std::move(residue), w.degree);
}

/// Schur expansion of s_nu o s_mu in d variables; d defaults to |mu||nu|,
/// which sees every constituent.
inline SchurVector decompose(const Partition& nu, const Partition& mu, std::optional<int> d = std::nullopt) {
  return schur_expand(plethysm_weights(nu, mu, d.value_or(mu.size() * nu.size())));
}

namespace detail {

inline Coeff coefficient_by_weights(const Partition& nu, const Partition& mu, const Partition& lambda) {
  const int n = mu.size() * nu.size();
  std::vector<Partition> order;
  for (const auto& beta : enumerate_partitions(n, lambda.length()))
    if (dominates(beta, lambda)) order.push_back(beta);
  std::vector<std::uint64_t> counts(order.size());
  parallel_for(order.size(), [&](std::size_t k) { counts[k] = count_pssyt_weight(mu, nu, order[k].parts()); });
  std::map<Partition, Coeff> residue;
  for (std::size_t k = 0; k < order.size(); ++k) residue[order[k]] = static_cast<Coeff>(counts[k]);
  return pivot_expand(order, std::move(residue), n).coeff(lambda);
}

}  // namespace detail

/// <s_nu o s_mu, s_lambda>, using l(lambda) letters and only the weights
/// that dominate lambda. Tall lambda is handled in the conjugate frame,
/// <s_nu o s_mu, s_lambda> = <s_nu~ o s_mu', s_lambda'> with nu~ = nu for
/// |mu| even and nu' for |mu| odd, which needs only lambda_1 letters.
inline Coeff plethysm_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda) {
  require(lambda.size() == mu.size() * nu.size(), "need |lambda| = |mu||nu|");
  if (static_cast<int>(lambda.length()) > lambda[0])
    return detail::coefficient_by_weights(mu.size() % 2 == 0 ? nu : conjugate(nu), conjugate(mu), conjugate(lambda));
  return detail::coefficient_by_weights(nu, mu, lambda);
}

/// omega: s_lambda -> s_lambda'.
inline SchurVector sign_twist(const SchurVector& v) {
  SchurVector out(v.degree());
  for (const auto& [lambda, c] : v) out.add(conjugate(lambda), c);
  return out;
}

inline Coeff inner_product(const SchurVector& u, const SchurVector& v) {
  require(u.degree() == v.degree(), "inner product needs equal degrees");
  Coeff total = 0;
  for (const auto& [lambda, c] : u) total = checked_add(total, checked_mul(c, v.coeff(lambda)));
  return total;
}

/// dim of the irreducible with character s_lambda(x_1..x_d), by the
/// hook-content formula.
inline std::uint64_t dim_nabla(const Partition& lambda, int d) {
  using boost::multiprecision::cpp_int;
  const Partition conj = conjugate(lambda);
  cpp_int num = 1, den = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      const int factor = d + j - static_cast<int>(i);
      if (factor <= 0) return 0;
      num *= factor;
      den *= (lambda[i] - j) + (conj[j] - static_cast<int>(i)) - 1;
    }
  const cpp_int q = num / den;
  if (q > cpp_int(std::numeric_limits<std::uint64_t>::max())) throw ComputationError("dimension overflows 64 bits");
  return q.convert_to<std::uint64_t>();
}

}  // namespace plethysm
