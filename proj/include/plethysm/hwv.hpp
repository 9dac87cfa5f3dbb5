#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "plethysm/checked.hpp"
#include "plethysm/lincomb.hpp"
#include "plethysm/linalg.hpp"
#include "plethysm/parallel.hpp"
#include "plethysm/partitions.hpp"
#include "plethysm/plethystic.hpp"
#include "plethysm/polytabloid.hpp"
#include "plethysm/tableaux.hpp"

namespace plethysm {

/// Combination of canonical basis vectors F(S) of nabla^nu(nabla^mu E).
using PssytVector = LinearCombination<PlethysticTableau>;

/// A weight vector of nabla^nu(nabla^mu E) in d variables.
struct HwVector {
  Partition mu;
  Partition nu;
  int d = 0;
  Composition weight;
  PssytVector coeffs;

  friend bool operator==(const HwVector&, const HwVector&) = default;
};

/// F(T) for an arbitrary outer tableau of semistandard mu-tableaux, rewritten
/// in the canonical basis.
inline PssytVector straighten_outer(const PlethysticTableau& T) { return straighten(T); }

/// F of an outer tableau whose entry at each box (reading order) is a
/// combination of F(s) for mu-tableaux s; expanded multilinearly.
inline PssytVector straighten_multilinear(const Partition& nu, const std::vector<StraightenedVector<int>>& entries) {
  PssytVector out;
  for (const auto& e : entries)
    if (e.empty()) return out;
  std::vector<std::vector<std::pair<Tableau<int>, Coeff>>> choices;
  for (const auto& e : entries) choices.emplace_back(e.begin(), e.end());
  std::vector<std::size_t> pos(entries.size(), 0);
  while (true) {
    Coeff c = 1;
    std::vector<std::vector<Tableau<int>>> rows(nu.length());
    std::size_t k = 0;
    for (std::size_t i = 0; i < nu.length(); ++i)
      for (int j = 0; j < nu[i]; ++j, ++k) {
        rows[i].push_back(choices[k][pos[k]].first);
        c = checked_mul(c, choices[k][pos[k]].second);
      }
    out.add(straighten_outer(rows.empty() ? PlethysticTableau() : PlethysticTableau(std::move(rows))), c);
    std::size_t q = 0;
    while (q < pos.size() && ++pos[q] == choices[q].size()) pos[q++] = 0;
    if (q == pos.size()) break;
  }
  return out;
}

inline Composition shift_weight(Composition w, int c) {
  if (static_cast<int>(w.size()) < c) w.resize(c, 0);
  ++w[c - 2];
  --w[c - 1];
  return trim(w);
}

/// X^(c) applied to a single basis vector F(S): the sum over single entries c
/// changed to c-1, straightened at both levels.
inline PssytVector raising_action(int c, const PlethysticTableau& S) {
  PssytVector out;
  for (int i = 0; i < S.num_rows(); ++i)
    for (int j = 0; j < static_cast<int>(S.rows()[i].size()); ++j) {
      const Tableau<int>& entry = S(i, j);
      StraightenedVector<int> changed;
      for (const Box b : entry.boxes()) {
        if (entry[b] != c) continue;
        Tableau<int> s = entry;
        --s[b];
        changed.add(straighten(s));
      }
      for (const auto& [u, coeff] : changed) {
        PlethysticTableau T = S;
        T(i, j) = u;
        out.add(straighten_outer(T), coeff);
      }
    }
  return out;
}

inline HwVector raising_action(int c, const HwVector& v) {
  require(2 <= c && c <= v.d, "raising operator index must lie in 2..d");
  HwVector out{v.mu, v.nu, v.d, shift_weight(v.weight, c), {}};
  for (const auto& [S, a] : v.coeffs) out.coeffs.add(raising_action(c, S), a);
  return out;
}

inline bool is_highest_weight(const HwVector& v) {
  for (int c = 2; c <= v.d; ++c)
    if (!raising_action(c, v).coeffs.empty()) return false;
  return true;
}

/// Canonical basis of the beta-weight space, in the outer order.
inline std::vector<PlethysticTableau> weight_space_basis(const Partition& mu, const Partition& nu, int d,
                                                         const Composition& beta) {
  const Composition b = trim(beta);
  if (static_cast<int>(b.size()) > d || degree(b) != mu.size() * nu.size()) return {};
  return enumerate_pssyt_weight(mu, nu, b);
}

/// Matrix of all raising operators X^(2), ..., X^(d) stacked, restricted to
/// the beta-weight space; columns follow weight_space_basis.
inline IntMatrix raising_matrix(int d, const std::vector<PlethysticTableau>& basis) {
  std::vector<std::vector<PssytVector>> images(basis.size(), std::vector<PssytVector>(std::max(d - 1, 0)));
  parallel_for(basis.size(), [&](std::size_t k) {
    for (int c = 2; c <= d; ++c) images[k][c - 2] = raising_action(c, basis[k]);
  });
  std::map<std::pair<int, PlethysticTableau>, std::size_t> row_of;
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (int c = 2; c <= d; ++c)
      for (const auto& [T, a] : images[k][c - 2]) row_of.try_emplace({c, T}, row_of.size());
  IntMatrix m(row_of.size(), std::vector<BigInt>(basis.size(), 0));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (int c = 2; c <= d; ++c)
      for (const auto& [T, a] : images[k][c - 2]) m[row_of.at({c, T})][k] = a;
  return m;
}

/// Integral basis of the highest-weight vectors of weight lambda; its size is
/// the multiplicity of nabla^lambda E in nabla^nu(nabla^mu E) when d >= l(lambda).
inline std::vector<HwVector> hwv_space(const Partition& mu, const Partition& nu, const Partition& lambda,
                                       std::optional<int> d_opt = std::nullopt) {
  const int d = d_opt.value_or(static_cast<int>(lambda.length()));
  require(d >= static_cast<int>(lambda.length()), "hwv_space needs d >= l(lambda)");
  require(lambda.size() == mu.size() * nu.size(), "need |lambda| = |mu||nu|");
  const auto basis = weight_space_basis(mu, nu, d, lambda.parts());
  std::vector<HwVector> out;
  if (basis.empty()) return out;
  const IntMatrix m = raising_matrix(d, basis);
  for (const auto& x : integer_kernel(m, basis.size())) {
    HwVector v{mu, nu, d, lambda.parts(), {}};
    for (std::size_t k = 0; k < basis.size(); ++k) v.coeffs.add(basis[k], x[k]);
    out.push_back(std::move(v));
  }
  return out;
}

/// Rank of a family of weight vectors in the canonical basis.
inline std::size_t rank_of(const std::vector<HwVector>& vs) {
  std::map<PlethysticTableau, std::size_t> col;
  for (const auto& v : vs)
    for (const auto& [T, a] : v.coeffs) col.try_emplace(T, col.size());
  IntMatrix m(vs.size(), std::vector<BigInt>(col.size(), 0));
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (const auto& [T, a] : vs[r].coeffs) m[r][col.at(T)] = a;
  return matrix_rank(m, col.size());
}

/// The alternating sum over permutations sigma of l letters of the products
/// prod_i u_i u_{i sigma} in Sym^l(Sym^2 E): a highest-weight vector of weight
/// (2^l). Basis keys are single outer rows of (2)-tableaux.
inline HwVector foulkes_hwv(int l, std::optional<int> d_opt = std::nullopt) {
  require(l >= 1 && l <= 7, "foulkes_hwv supports 1 <= l <= 7");
  const int d = d_opt.value_or(l);
  require(d >= l, "foulkes_hwv needs d >= l");
  HwVector v{Partition{2}, Partition{l}, d, Composition(l, 2), {}};
  std::vector<int> sigma(l);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    int inversions = 0;
    for (int a = 0; a < l; ++a)
      for (int b = a + 1; b < l; ++b) inversions += sigma[a] > sigma[b];
    std::vector<Tableau<int>> row;
    for (int i = 0; i < l; ++i)
      row.push_back(Tableau<int>({{std::min(i, sigma[i]) + 1, std::max(i, sigma[i]) + 1}}));
    std::sort(row.begin(), row.end(), AlphabetOrder<Tableau<int>>{});
    v.coeffs.add(PlethysticTableau({row}), inversions % 2 ? -1 : 1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return v;
}

/// Adds a top row of r ones to every mu-tableau entry and shifts the old
/// entries up by one letter.
inline HwVector tilde_map(const HwVector& v, int r) {
  require(r >= 1 && r >= v.mu[0], "tilde_map needs r >= mu_1");
  const int n = v.nu.size();
  Partition mu2 = disjoint_union(Partition{r}, v.mu);
  Composition w2{n * r};
  w2.insert(w2.end(), v.weight.begin(), v.weight.end());
  HwVector out{mu2, v.nu, v.d + 1, trim(w2), {}};
  for (const auto& [S, a] : v.coeffs) {
    std::vector<std::vector<Tableau<int>>> rows;
    for (const auto& srow : S.rows()) {
      std::vector<Tableau<int>> row;
      for (const auto& t : srow) {
        std::vector<std::vector<int>> inner{std::vector<int>(r, 1)};
        for (auto trow : t.rows()) {
          for (int& x : trow) ++x;
          inner.push_back(std::move(trow));
        }
        row.emplace_back(std::move(inner));
      }
      rows.push_back(std::move(row));
    }
    out.coeffs.add(straighten_outer(rows.empty() ? PlethysticTableau() : PlethysticTableau(std::move(rows))), a);
  }
  return out;
}

/// Inserts a new column holding 1, ..., r into every mu-tableau entry, at
/// column 1 when r >= l(mu) and at column mu_{r+1} + 1 otherwise. Entries
/// that stop being semistandard are straightened.
inline HwVector star_map(const HwVector& v, int r) {
  require(r >= 1, "star_map needs r >= 1");
  require(v.d >= r && v.d >= static_cast<int>(v.mu.length()), "star_map needs d >= r and d >= l(mu)");
  const int n = v.nu.size();
  const int e = r >= static_cast<int>(v.mu.length()) ? 0 : v.mu[r];
  Partition mu2 = add(v.mu, rectangle(1, r));
  Composition w2 = v.weight;
  if (static_cast<int>(w2.size()) < r) w2.resize(r, 0);
  for (int i = 0; i < r; ++i) w2[i] += n;
  HwVector out{mu2, v.nu, v.d, trim(w2), {}};
  for (const auto& [S, a] : v.coeffs) {
    std::vector<StraightenedVector<int>> entries;
    for (const auto& srow : S.rows())
      for (const auto& t : srow) {
        std::vector<std::vector<int>> inner;
        for (int i = 0; i < static_cast<int>(mu2.length()); ++i) {
          std::vector<int> row = i < t.num_rows() ? t.rows()[i] : std::vector<int>{};
          if (i < r) row.insert(row.begin() + e, i + 1);
          inner.push_back(std::move(row));
        }
        entries.push_back(straighten(Tableau<int>(std::move(inner))));
      }
    out.coeffs.add(straighten_multilinear(v.nu, entries), a);
  }
  return out;
}

/// Product in the symmetric algebra: Sym^n x Sym^n* -> Sym^(n+n*).
inline HwVector multiply_hwv(const HwVector& v, const HwVector& w) {
  require(v.mu == w.mu, "multiply_hwv needs a common inner shape");
  require(v.nu.length() <= 1 && w.nu.length() <= 1, "multiply_hwv needs single-row outer shapes");
  const int n = v.nu.size() + w.nu.size();
  Composition wt(std::max(v.weight.size(), w.weight.size()), 0);
  for (std::size_t b = 0; b < v.weight.size(); ++b) wt[b] += v.weight[b];
  for (std::size_t b = 0; b < w.weight.size(); ++b) wt[b] += w.weight[b];
  HwVector out{v.mu, n ? Partition{n} : Partition{}, std::max(v.d, w.d), trim(wt), {}};
  for (const auto& [S, a] : v.coeffs)
    for (const auto& [T, b] : w.coeffs) {
      std::vector<Tableau<int>> row;
      if (!S.empty()) row = S.rows()[0];
      if (!T.empty()) row.insert(row.end(), T.rows()[0].begin(), T.rows()[0].end());
      std::sort(row.begin(), row.end(), AlphabetOrder<Tableau<int>>{});
      out.coeffs.add(row.empty() ? PlethysticTableau() : PlethysticTableau({row}), checked_mul(a, b));
    }
  return out;
}

/// The degree-zero unit of the symmetric algebra over nabla^mu E.
inline HwVector unit_hwv(const Partition& mu, int d) {
  HwVector v{mu, Partition{}, d, {}, {}};
  v.coeffs.add(PlethysticTableau(), 1);
  return v;
}

/// F(T) as a weight vector.
inline HwVector basis_vector(const Partition& mu, const Partition& nu, int d, const PlethysticTableau& T) {
  HwVector v{mu, nu, d, weight(T), {}};
  v.coeffs.add(T, 1);
  return v;
}

}  // namespace plethysm
