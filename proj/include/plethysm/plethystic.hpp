#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "plethysm/checked.hpp"
#include "plethysm/partitions.hpp"
#include "plethysm/tableaux.hpp"

namespace plethysm {

/// A nu-tableau whose entries are mu-tableaux. It is a plethystic
/// semistandard tableau when every entry is semistandard and the outer
/// tableau is semistandard for tableau_less.
using PlethysticTableau = Tableau<Tableau<int>>;

/// Outer order on plethystic tableaux of one shape, extended from the
/// order on their mu-tableau entries.
struct PlethysticLess {
  bool operator()(const PlethysticTableau& a, const PlethysticTableau& b) const { return tableau_less(a, b); }
};

inline Composition weight(const PlethysticTableau& T) {
  Composition w;
  for (const auto& row : T.rows())
    for (const auto& entry : row) {
      const Composition c = content(entry);
      if (c.size() > w.size()) w.resize(c.size(), 0);
      for (std::size_t b = 0; b < c.size(); ++b) w[b] += c[b];
    }
  return trim(w);
}

inline bool is_plethystic_semistandard(const PlethysticTableau& T, const Partition& mu) {
  for (const auto& row : T.rows())
    for (const auto& entry : row)
      if (entry.shape() != mu || !is_semistandard(entry)) return false;
  return is_semistandard(T);
}

namespace detail {

// Backtracking fill of the outer shape in reading order by indices into a
// sorted alphabet of mu-tableaux. With a target weight the remaining content
// is tracked and partial fills that cannot complete are pruned.
class PssytFiller {
 public:
  PssytFiller(const Partition& mu, const Partition& nu, std::vector<Tableau<int>> alphabet,
              std::optional<Composition> target)
      : mu_(mu), nu_(nu), alphabet_(std::move(alphabet)), target_(std::move(target)) {
    for (int i = 0; i < static_cast<int>(nu_.length()); ++i)
      for (int j = 0; j < nu_[i]; ++j) boxes_.push_back({i, j});
    idx_.assign(nu_.length(), {});
    for (std::size_t i = 0; i < nu_.length(); ++i) idx_[i].assign(nu_[i], -1);
    for (const auto& t : alphabet_) contents_.push_back(content(t));
    if (target_) {
      remaining_ = *target_;
      letters_ = remaining_.size();
      for (auto& c : contents_) c.resize(std::max(c.size(), letters_), 0);
      mu_prefix_.assign(letters_ + 1, 0);
      for (std::size_t b = 0; b < letters_; ++b) mu_prefix_[b + 1] = mu_prefix_[b] + mu_[b];
    }
  }

  /// visit(indices) is called for each fill; return false to stop early.
  void run(const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
    stop_ = false;
    if (target_) {
      if (degree(*target_) != mu_.size() * nu_.size()) return;
      for (int x : *target_)
        if (x < 0) return;
    }
    if (boxes_.empty()) {
      visit(idx_);
      return;
    }
    if (alphabet_.empty()) return;
    fill(0, visit);
  }

 private:
  bool feasible(std::size_t slots_left) const {
    // letters <= b can only occupy the first b rows of each mu-tableau
    long prefix = 0;
    for (std::size_t b = 0; b < letters_; ++b) {
      prefix += remaining_[b];
      if (prefix > static_cast<long>(slots_left) * mu_prefix_[std::min<std::size_t>(b + 1, mu_.length())])
        return false;
    }
    return true;
  }

  void fill(std::size_t k, const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
    if (stop_) return;
    if (k == boxes_.size()) {
      if (!visit(idx_)) stop_ = true;
      return;
    }
    const Box b = boxes_[k];
    int lo = 0;
    if (b.col > 0) lo = std::max(lo, idx_[b.row][b.col - 1]);
    if (b.row > 0) lo = std::max(lo, idx_[b.row - 1][b.col] + 1);
    for (int x = lo; x < static_cast<int>(alphabet_.size()); ++x) {
      if (target_) {
        const Composition& c = contents_[x];
        bool ok = true;
        for (std::size_t q = 0; q < letters_; ++q)
          if (c[q] > remaining_[q]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (std::size_t q = 0; q < letters_; ++q) remaining_[q] -= c[q];
        if (feasible(boxes_.size() - k - 1)) {
          idx_[b.row][b.col] = x;
          fill(k + 1, visit);
        }
        for (std::size_t q = 0; q < letters_; ++q) remaining_[q] += c[q];
      } else {
        idx_[b.row][b.col] = x;
        fill(k + 1, visit);
      }
      if (stop_) return;
    }
    idx_[b.row][b.col] = -1;
  }

 public:
  PlethysticTableau build(const std::vector<std::vector<int>>& idx) const {
    if (idx.empty()) return {};
    std::vector<std::vector<Tableau<int>>> rows;
    for (const auto& r : idx) {
      std::vector<Tableau<int>> row;
      for (int x : r) row.push_back(alphabet_[x]);
      rows.push_back(std::move(row));
    }
    return PlethysticTableau(std::move(rows));
  }

 private:
  Partition mu_, nu_;
  std::vector<Tableau<int>> alphabet_;
  std::optional<Composition> target_;
  std::vector<Composition> contents_;
  Composition remaining_;
  std::size_t letters_ = 0;
  std::vector<int> mu_prefix_;
  std::vector<Box> boxes_;
  std::vector<std::vector<int>> idx_;
  bool stop_ = false;
};

inline std::vector<Tableau<int>> inner_alphabet(const Partition& mu, const Composition& cap) {
  if (mu.empty()) return {Tableau<int>()};
  return enumerate_ssyt_bounded(mu, cap);
}

}  // namespace detail

/// All plethystic semistandard tableaux of shape mu^nu with entries <= d,
/// sorted by the outer order.
inline std::vector<PlethysticTableau> enumerate_pssyt(const Partition& mu, const Partition& nu, int d) {
  require(d >= 0, "letter bound must be non-negative");
  std::vector<PlethysticTableau> out;
  if (mu.empty() && nu.length() > 1) return out;  // the single empty entry cannot fill a column strictly
  detail::PssytFiller filler(mu, nu, detail::inner_alphabet(mu, Composition(d, mu.size())), std::nullopt);
  filler.run([&](const auto& idx) {
    out.push_back(filler.build(idx));
    return true;
  });
  std::sort(out.begin(), out.end(), PlethysticLess{});
  return out;
}

/// Plethystic semistandard tableaux of shape mu^nu and weight beta, sorted by
/// the outer order.
inline std::vector<PlethysticTableau> enumerate_pssyt_weight(const Partition& mu, const Partition& nu,
                                                              const Composition& beta) {
  std::vector<PlethysticTableau> out;
  for (int b : beta) require(b >= 0, "weights must be non-negative");
  if (mu.empty() && nu.length() > 1) return out;
  const Composition target = trim(beta);
  detail::PssytFiller filler(mu, nu, detail::inner_alphabet(mu, target), target);
  filler.run([&](const auto& idx) {
    out.push_back(filler.build(idx));
    return true;
  });
  std::sort(out.begin(), out.end(), PlethysticLess{});
  return out;
}

/// Number of plethystic semistandard tableaux of shape mu^nu and weight beta.
inline std::uint64_t count_pssyt_weight(const Partition& mu, const Partition& nu, const Composition& beta,
                                        std::uint64_t stop_at = 0) {
  for (int b : beta) require(b >= 0, "weights must be non-negative");
  if (mu.empty() && nu.length() > 1) return 0;
  const Composition target = trim(beta);
  std::uint64_t n = 0;
  detail::PssytFiller filler(mu, nu, detail::inner_alphabet(mu, target), target);
  filler.run([&](const auto&) { return ++n != stop_at; });
  return n;
}

/// True when no semistandard tableau obtained from a member of S by changing
/// one entry c to c-1 lies outside S.
inline bool is_closed(const std::vector<Tableau<int>>& S) {
  const std::set<Tableau<int>> members(S.begin(), S.end());
  for (const auto& t : S) {
    require(t.shape() == S.front().shape(), "closure test needs tableaux of one shape");
    for (const Box b : t.boxes()) {
      if (t[b] < 2) continue;
      Tableau<int> s = t;
      --s[b];
      if (is_semistandard(s) && !members.count(s)) return false;
    }
  }
  return true;
}

namespace detail {

inline void compositions_rec(int remaining, Composition& cur, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = remaining; p >= 1; --p) {
    cur.push_back(p);
    compositions_rec(remaining - p, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Compositions of n with all parts positive.
inline std::vector<Composition> positive_compositions(int n) {
  std::vector<Composition> out;
  Composition cur;
  detail::compositions_rec(n, cur, out);
  return out;
}

/// Dominance-maximal weights of plethystic semistandard tableaux of shape
/// mu^nu over mn letters, each with the number of tableaux of that weight.
/// A weight with a zero part is dominated by the weight obtained by closing
/// the gap (relabel the larger letters downwards), so only compositions with
/// positive parts are searched. Throws ComputationError if a maximal weight
/// is not a partition.
inline std::map<Partition, std::uint64_t> maximal_weights(const Partition& mu, const Partition& nu) {
  std::map<Partition, std::uint64_t> out;
  const int n = mu.size() * nu.size();
  if (n == 0) {
    if (count_pssyt_weight(mu, nu, {}) > 0) out.emplace(Partition{}, 1);
    return out;
  }
  std::vector<Composition> achieved;
  for (const auto& beta : positive_compositions(n)) {
    // skip candidates already dominated by a found weight
    bool dominated = false;
    for (const auto& a : achieved)
      if (dominates(a, beta)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    if (count_pssyt_weight(mu, nu, beta, 1) > 0) achieved.push_back(beta);
  }
  for (const auto& beta : achieved) {
    bool maximal = true;
    for (const auto& a : achieved)
      if (a != beta && dominates(a, beta)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    if (!is_partition(beta))
      throw ComputationError("maximal weight " + to_string(beta) + " is not a partition");
    out.emplace(Partition(beta), count_pssyt_weight(mu, nu, beta));
  }
  return out;
}

/// Text form "[1 1/2][1 1/3] || [1 2/2]": outer rows separated by "||".
inline std::string to_string(const PlethysticTableau& T) {
  std::string s;
  for (int i = 0; i < T.num_rows(); ++i) {
    if (i) s += " || ";
    for (const auto& entry : T.rows()[i]) s += "[" + to_string(entry) + "]";
  }
  return s;
}

inline PlethysticTableau parse_pssyt(std::string_view text) {
  std::vector<std::vector<Tableau<int>>> rows;
  std::vector<Tableau<int>> row;
  std::size_t k = 0;
  auto flush = [&] {
    require(!row.empty(), "empty outer row in plethystic tableau");
    rows.push_back(std::move(row));
    row.clear();
  };
  while (k < text.size()) {
    const char ch = text[k];
    if (ch == ' ') {
      ++k;
    } else if (ch == '[') {
      const std::size_t close = text.find(']', k);
      require(close != std::string_view::npos, "unbalanced bracket in plethystic tableau");
      row.push_back(parse_tableau(text.substr(k + 1, close - k - 1)));
      k = close + 1;
    } else if (text.substr(k, 2) == "||") {
      flush();
      k += 2;
    } else {
      throw UsageError("unexpected character in plethystic tableau '" + std::string(text) + "'");
    }
  }
  if (!row.empty() || !rows.empty()) flush();
  if (rows.empty()) return {};
  return PlethysticTableau(std::move(rows));
}

}  // namespace plethysm
