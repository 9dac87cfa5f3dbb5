#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "plethysm/checked.hpp"
#include "plethysm/lincomb.hpp"
#include "plethysm/tableaux.hpp"

namespace plethysm {

/// Combination of GL-tabloids f(t); keys are row-sorted tableaux.
template <typename Entry>
using TabloidVector = LinearCombination<Tableau<Entry>>;

/// Combination of polytabloids F(s); keys are semistandard tableaux.
template <typename Entry>
using StraightenedVector = LinearCombination<Tableau<Entry>>;

/// Sorts each column ascending. The sign is that of the sorting permutation,
/// or 0 when some column repeats an entry (then F(t) = 0).
template <typename Entry, typename Order = AlphabetOrder<Entry>>
std::pair<Tableau<Entry>, int> column_normalize(const Tableau<Entry>& t, Order less = {}) {
  Tableau<Entry> out = t;
  int sign = 1;
  for (int j = 0; j < t.num_cols(); ++j) {
    const int len = t.column_length(j);
    // insertion sort, counting transpositions
    for (int a = 1; a < len; ++a)
      for (int b = a; b > 0; --b) {
        if (less(out(b, j), out(b - 1, j))) {
          std::swap(out(b, j), out(b - 1, j));
          sign = -sign;
        } else {
          if (!less(out(b - 1, j), out(b, j))) return {t, 0};
          break;
        }
      }
  }
  return {std::move(out), sign};
}

/// F(t) as the signed sum of f(t sigma) over column permutations sigma.
template <typename Entry, typename Order = AlphabetOrder<Entry>>
TabloidVector<Entry> expand_polytabloid(const Tableau<Entry>& t, Order less = {}) {
  TabloidVector<Entry> out;
  if (column_normalize(t, less).second == 0) return out;
  const int cols = t.num_cols();
  std::vector<std::vector<int>> perm(cols);
  for (int j = 0; j < cols; ++j) {
    perm[j].resize(t.column_length(j));
    std::iota(perm[j].begin(), perm[j].end(), 0);
  }
  auto parity = [](const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b];
    return inv % 2 ? -1 : 1;
  };
  // odometer over the product of column symmetric groups
  while (true) {
    Tableau<Entry> u = t;
    int sign = 1;
    for (int j = 0; j < cols; ++j) {
      for (std::size_t i = 0; i < perm[j].size(); ++i) u(perm[j][i], j) = t(i, j);
      sign *= parity(perm[j]);
    }
    out.add(row_semistandardize(u, less), sign);
    int j = 0;
    while (j < cols && !std::next_permutation(perm[j].begin(), perm[j].end())) ++j;
    if (j == cols) break;
  }
  return out;
}

/// Terms of the snake relation F(t) = sum_k (-1)^(k+1) sum F(t phi), where
/// phi swaps k boxes of A = {(i,j), ..., (len_j - 1, j)} with k boxes of
/// B = {(0,j2), ..., (i,j2)} keeping their vertical order. Indices are
/// zero-based. Terms with a repeated column entry vanish and are dropped;
/// returned tableaux are not column-normalized.
template <typename Entry, typename Order = AlphabetOrder<Entry>>
std::vector<std::pair<Tableau<Entry>, int>> snake_terms(const Tableau<Entry>& t, int i, int j, int j2,
                                                         Order less = {}) {
  require(0 <= j && j < j2 && j2 < t.num_cols(), "snake relation needs columns j < j' inside the diagram");
  require(0 <= i && i < t.column_length(j2), "snake relation row index outside column j'");
  std::vector<int> a_rows, b_rows;
  for (int r = i; r < t.column_length(j); ++r) a_rows.push_back(r);
  for (int r = 0; r <= i; ++r) b_rows.push_back(r);
  std::vector<std::pair<Tableau<Entry>, int>> out;
  const int kmax = static_cast<int>(std::min(a_rows.size(), b_rows.size()));
  for (int k = 1; k <= kmax; ++k) {
    const int sign = k % 2 ? 1 : -1;
    std::vector<bool> pick_a(a_rows.size(), false), pick_b(b_rows.size(), false);
    std::fill(pick_a.begin(), pick_a.begin() + k, true);
    do {
      std::fill(pick_b.begin(), pick_b.end(), false);
      std::fill(pick_b.begin(), pick_b.begin() + k, true);
      do {
        std::vector<int> sa, sb;
        for (std::size_t x = 0; x < a_rows.size(); ++x)
          if (pick_a[x]) sa.push_back(a_rows[x]);
        for (std::size_t x = 0; x < b_rows.size(); ++x)
          if (pick_b[x]) sb.push_back(b_rows[x]);
        Tableau<Entry> u = t;
        for (int p = 0; p < k; ++p) std::swap(u(sa[p], j), u(sb[p], j2));
        if (column_normalize(u, less).second != 0) out.emplace_back(std::move(u), sign);
      } while (std::prev_permutation(pick_b.begin(), pick_b.end()));
    } while (std::prev_permutation(pick_a.begin(), pick_a.end()));
  }
  return out;
}

namespace detail {

class StraightenCache {
 public:
  static StraightenCache& instance() {
    static StraightenCache cache;
    return cache;
  }

  bool lookup(const Tableau<int>& key, StraightenedVector<int>& out) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }

  void store(const Tableau<int>& key, const StraightenedVector<int>& value) {
    std::unique_lock lock(mutex_);
    map_.emplace(key, value);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Tableau<int>, StraightenedVector<int>> map_;
};

// t is column-standard with rank-compressed entries.
inline StraightenedVector<int> straighten_normalized(const Tableau<int>& t) {
  auto& cache = StraightenCache::instance();
  StraightenedVector<int> result;
  if (cache.lookup(t, result)) return result;
  // smallest column j, then smallest row i, with t(i,j) > t(i,j+1)
  int vi = -1, vj = -1;
  for (int j = 0; j + 1 < t.num_cols() && vj < 0; ++j)
    for (int i = 0; i < t.column_length(j + 1); ++i)
      if (t(i, j) > t(i, j + 1)) {
        vi = i;
        vj = j;
        break;
      }
  if (vj < 0) {
    result.add(t, 1);
  } else {
    for (const auto& [u, sign] : snake_terms(t, vi, vj, vj + 1)) {
      auto [v, s2] = column_normalize(u);
      result.add(straighten_normalized(v), sign * s2);
    }
  }
  cache.store(t, result);
  return result;
}

}  // namespace detail

/// F(t) in the basis of polytabloids of semistandard tableaux. Entries are
/// rank-compressed first so one memo table serves every alphabet.
template <typename Entry, typename Order = AlphabetOrder<Entry>>
StraightenedVector<Entry> straighten(const Tableau<Entry>& t, Order less = {}) {
  StraightenedVector<Entry> out;
  auto [normal, sign] = column_normalize(t, less);
  if (sign == 0) return out;
  Compressed<Entry> c = compress(normal, less);
  for (const auto& [s, coeff] : detail::straighten_normalized(c.ranks))
    out.add(decompress(s, c.alphabet), coeff * sign);
  return out;
}

/// Expands a combination of polytabloids back into GL-tabloids.
template <typename Entry, typename Order = AlphabetOrder<Entry>>
TabloidVector<Entry> to_tabloids(const StraightenedVector<Entry>& v, Order less = {}) {
  TabloidVector<Entry> out;
  for (const auto& [s, c] : v) out.add(expand_polytabloid(s, less), c);
  return out;
}

/// Checks that F(t) = F(tbar) + (terms F(s) with tbar strictly dominating s)
/// and that every tabloid of F(t) other than f(tbar) is strictly dominated by
/// tbar, where tbar is t with its rows sorted.
template <typename Entry, typename Order = AlphabetOrder<Entry>>
bool leading_term_check(const Tableau<Entry>& t, Order less = {}) {
  require(is_column_standard(t, less), "leading_term_check needs a column-standard tableau");
  const Tableau<Entry> tbar = row_semistandardize(t, less);
  const auto straightened = straighten(t, less);
  if (straightened.coeff(tbar) != 1) return false;
  for (const auto& [s, c] : straightened)
    if (s != tbar && !tableau_dominates(tbar, s, less)) return false;
  const auto tabloids = expand_polytabloid(t, less);
  if (tabloids.coeff(tbar) != 1) return false;
  for (const auto& [s, c] : tabloids)
    if (s != tbar && !tableau_dominates(tbar, s, less)) return false;
  return true;
}

}  // namespace plethysm
