#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "plethysm/checked.hpp"

namespace plethysm {

/// A finite sequence of non-negative integers. Trailing zeros carry no
/// meaning; use trim() before comparing two compositions.
using Composition = std::vector<int>;

inline Composition trim(Composition c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline int degree(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

/// Weakly decreasing sequence of positive integers. Parts past the length
/// read as zero.
class Partition {
 public:
  Partition() = default;

  /// Trailing zeros are dropped; anything else that is not weakly decreasing
  /// and non-negative is rejected.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] > 0, "partition parts must be positive");
      require(i == 0 || parts_[i] <= parts_[i - 1], "partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts an arbitrary multiset of non-negative parts into a partition.
  static Partition from_multiset(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  /// Zero-based: part(0) is the largest part.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int operator[](std::size_t i) const { return part(i); }

  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  const std::vector<int>& parts() const { return parts_; }
  Composition as_composition() const { return parts_; }

  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts, which for partitions of one size is the
  /// reverse-lexicographic order refining dominance.
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.part(0), 0);
  for (int p : lambda)
    for (int j = 0; j < p; ++j) ++out[j];
  return Partition(std::move(out));
}

inline Partition disjoint_union(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.begin(), b.end());
  return Partition::from_multiset(std::move(parts));
}

inline Partition add(const Partition& a, const Partition& b) {
  std::vector<int> parts(std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = a[i] + b[i];
  return Partition(std::move(parts));
}

inline Partition scale(int factor, const Partition& a) {
  require(factor > 0, "scale factor must be positive");
  std::vector<int> parts = a.parts();
  for (int& p : parts) p *= factor;
  return Partition(std::move(parts));
}

/// (k^r): r parts equal to k.
inline Partition rectangle(int k, int r) {
  if (k <= 0 || r <= 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(r), k));
}

/// Prefix-sum dominance; both arguments must have the same degree.
inline bool dominates(const Composition& beta, const Composition& gamma) {
  require(degree(beta) == degree(gamma), "dominance needs compositions of equal degree");
  const std::size_t len = std::max(beta.size(), gamma.size());
  long sb = 0, sg = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sb += i < beta.size() ? beta[i] : 0;
    sg += i < gamma.size() ? gamma[i] : 0;
    if (sb < sg) return false;
  }
  return true;
}

inline bool dominates(const Partition& a, const Partition& b) {
  return dominates(a.parts(), b.parts());
}

inline bool is_partition(const Composition& c) {
  const Composition t = trim(c);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] <= 0 || (i > 0 && t[i] > t[i - 1])) return false;
  return true;
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::size_t max_length, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (cur.size() >= max_length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    // the rest must fit in the remaining rows
    if (static_cast<long>(p) * static_cast<long>(max_length - cur.size()) < remaining) break;
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_length, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// All partitions of n within the optional bounds, in decreasing
/// reverse-lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> enumerate_partitions(int n, std::optional<std::size_t> max_length = std::nullopt,
                                                   std::optional<int> max_part = std::nullopt) {
  require(n >= 0, "cannot enumerate partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(n, max_part.value_or(n), max_length.value_or(static_cast<std::size_t>(n)), cur, out);
  return out;
}

/// Canonical form "[5,4,2,1]"; the empty partition prints as "[]".
inline std::string to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

inline std::string to_string(const Composition& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

/// Parses "5,4,2,1", "[5,4,2,1]" or the exponent shorthand "2^3,1".
/// Whitespace is rejected, as are parts that increase.
inline Partition parse_partition(std::string_view text) {
  if (!text.empty() && text.front() == '[') {
    require(text.size() >= 2 && text.back() == ']', "unbalanced brackets in partition '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> parts;
  if (text.empty() || text == "0") return {};
  auto parse_int = [&](std::string_view tok) {
    require(!tok.empty(), "empty part in partition");
    int v = 0;
    for (char ch : tok) {
      require(ch >= '0' && ch <= '9', "invalid character '" + std::string(1, ch) + "' in partition");
      v = v * 10 + (ch - '0');
      require(v <= 100000, "partition part too large");
    }
    return v;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(start, comma - start);
    const std::size_t caret = tok.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_int(tok));
    } else {
      const int value = parse_int(tok.substr(0, caret));
      const int times = parse_int(tok.substr(caret + 1));
      parts.insert(parts.end(), static_cast<std::size_t>(times), value);
    }
    start = comma + 1;
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    require(parts[i] <= parts[i - 1], "partition '" + std::string(text) + "' is not weakly decreasing");
  require(std::find(parts.begin(), parts.end(), 0) == parts.end() || parts.back() == 0,
          "zero part in partition");
  return Partition(std::move(parts));
}

}  // namespace plethysm
