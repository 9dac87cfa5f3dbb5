#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plethysm/checked.hpp"
#include "plethysm/partitions.hpp"

namespace plethysm {

/// Zero-based (row, column) position in a Young diagram.
struct Box {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// A filling of a Young diagram by entries from a totally ordered alphabet.
/// Entries are stored row by row; the shape is the sequence of row lengths.
template <typename Entry>
class Tableau {
 public:
  using entry_type = Entry;

  Tableau() = default;

  explicit Tableau(std::vector<std::vector<Entry>> rows) : rows_(std::move(rows)) {
    std::vector<int> lengths;
    for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
    shape_ = Partition(lengths);  // rejects increasing row lengths
    require(shape_.length() == rows_.size(), "tableau rows must be non-empty");
  }

  /// Every box of `shape` holding `fill`.
  static Tableau filled(const Partition& shape, const Entry& fill) {
    Tableau t;
    t.shape_ = shape;
    for (int len : shape) t.rows_.emplace_back(static_cast<std::size_t>(len), fill);
    return t;
  }

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<Entry>>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  int num_boxes() const { return shape_.size(); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return shape_.part(0); }

  /// Length of column j (zero-based).
  int column_length(int j) const {
    int len = 0;
    while (len < num_rows() && static_cast<int>(rows_[len].size()) > j) ++len;
    return len;
  }

  const Entry& operator()(int row, int col) const { return rows_[row][col]; }
  Entry& operator()(int row, int col) { return rows_[row][col]; }
  const Entry& operator[](Box b) const { return rows_[b.row][b.col]; }
  Entry& operator[](Box b) { return rows_[b.row][b.col]; }

  std::vector<Entry> column(int j) const {
    std::vector<Entry> out;
    for (int i = 0; i < column_length(j); ++i) out.push_back(rows_[i][j]);
    return out;
  }

  /// Boxes in row reading order.
  std::vector<Box> boxes() const {
    std::vector<Box> out;
    for (int i = 0; i < num_rows(); ++i)
      for (int j = 0; j < static_cast<int>(rows_[i].size()); ++j) out.push_back({i, j});
    return out;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;
  /// Lexicographic structural order (shape, then rows). Used for container
  /// keys only; the mathematical order is tableau_less().
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<Entry>> rows_;
};

template <typename Entry>
struct AlphabetOrder;

/// Order on column-standard tableaux: in the rightmost column where t and u
/// differ, the greatest entry not common to both columns lies in u.
template <typename Entry, typename Order = AlphabetOrder<Entry>>
bool tableau_less(const Tableau<Entry>& t, const Tableau<Entry>& u, Order less = {}) {
  require(t.shape() == u.shape(), "tableau_less needs tableaux of the same shape");
  for (int j = t.num_cols() - 1; j >= 0; --j) {
    std::vector<Entry> a = t.column(j), b = u.column(j);
    if (a == b) continue;
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    auto ia = a.rbegin(), ib = b.rbegin();
    while (ia != a.rend() && ib != b.rend()) {
      if (*ia == *ib) {
        ++ia;
        ++ib;
      } else {
        return less(*ia, *ib);
      }
    }
    // equal lengths and a != b as multisets means we return above; a column
    // that differs only in order compares equal
  }
  return false;
}

/// Entries compare with operator< by default; tableau-valued entries compare
/// with tableau_less, so a tableau of tableaux is ordered as a plethystic
/// tableau.
template <typename Entry>
struct AlphabetOrder {
  bool operator()(const Entry& a, const Entry& b) const { return a < b; }
};

template <typename Inner>
struct AlphabetOrder<Tableau<Inner>> {
  bool operator()(const Tableau<Inner>& a, const Tableau<Inner>& b) const { return tableau_less(a, b); }
};

template <typename Entry, typename Order = AlphabetOrder<Entry>>
bool is_row_semistandard(const Tableau<Entry>& t, Order less = {}) {
  for (const auto& row : t.rows())
    for (std::size_t j = 1; j < row.size(); ++j)
      if (less(row[j], row[j - 1])) return false;
  return true;
}

template <typename Entry, typename Order = AlphabetOrder<Entry>>
bool is_column_standard(const Tableau<Entry>& t, Order less = {}) {
  for (int i = 1; i < t.num_rows(); ++i)
    for (std::size_t j = 0; j < t.rows()[i].size(); ++j)
      if (!less(t(i - 1, j), t(i, j))) return false;
  return true;
}

template <typename Entry, typename Order = AlphabetOrder<Entry>>
bool is_semistandard(const Tableau<Entry>& t, Order less = {}) {
  return is_row_semistandard(t, less) && is_column_standard(t, less);
}

/// Multiplicities of 1, 2, ... in an integer tableau, trimmed.
inline Composition content(const Tableau<int>& t) {
  Composition c;
  for (const auto& row : t.rows())
    for (int x : row) {
      require(x >= 1, "tableau entries must be positive for content()");
      if (static_cast<int>(c.size()) < x) c.resize(x, 0);
      ++c[x - 1];
    }
  return trim(c);
}

template <typename Entry, typename Order = AlphabetOrder<Entry>>
Tableau<Entry> row_semistandardize(Tableau<Entry> t, Order less = {}) {
  std::vector<std::vector<Entry>> rows = t.rows();
  for (auto& row : rows) std::stable_sort(row.begin(), row.end(), less);
  return Tableau<Entry>(std::move(rows));
}

/// Order-preserving relabelling of entries by 0, 1, 2, ...; `alphabet` lists
/// the distinct entries in increasing order.
template <typename Entry>
struct Compressed {
  Tableau<int> ranks;
  std::vector<Entry> alphabet;
};

template <typename Entry, typename Order = AlphabetOrder<Entry>>
Compressed<Entry> compress(const Tableau<Entry>& t, Order less = {}) {
  std::vector<Entry> alphabet;
  for (const auto& row : t.rows()) alphabet.insert(alphabet.end(), row.begin(), row.end());
  std::sort(alphabet.begin(), alphabet.end(), less);
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end(),
                             [&](const Entry& a, const Entry& b) { return !less(a, b) && !less(b, a); }),
                 alphabet.end());
  std::vector<std::vector<int>> rows;
  for (const auto& row : t.rows()) {
    std::vector<int> r;
    for (const auto& x : row)
      r.push_back(static_cast<int>(std::lower_bound(alphabet.begin(), alphabet.end(), x, less) - alphabet.begin()));
    rows.push_back(std::move(r));
  }
  return {Tableau<int>(std::move(rows)), std::move(alphabet)};
}

template <typename Entry>
Tableau<Entry> decompress(const Tableau<int>& ranks, const std::vector<Entry>& alphabet) {
  std::vector<std::vector<Entry>> rows;
  for (const auto& row : ranks.rows()) {
    std::vector<Entry> r;
    r.reserve(row.size());
    for (int x : row) r.push_back(alphabet[x]);
    rows.push_back(std::move(r));
  }
  return Tableau<Entry>(std::move(rows));
}

/// t dominates u when t^{<=b} dominates u^{<=b} for every alphabet value b.
/// Both tableaux must be row-semistandard of the same shape.
template <typename Entry, typename Order = AlphabetOrder<Entry>>
bool tableau_dominates(const Tableau<Entry>& t, const Tableau<Entry>& u, Order less = {}) {
  require(t.shape() == u.shape(), "tableau dominance needs tableaux of the same shape");
  std::vector<Entry> alphabet;
  for (const auto* x : {&t, &u})
    for (const auto& row : x->rows()) alphabet.insert(alphabet.end(), row.begin(), row.end());
  std::sort(alphabet.begin(), alphabet.end(), less);
  for (const Entry& b : alphabet) {
    long st = 0, su = 0;
    for (int i = 0; i < t.num_rows(); ++i) {
      for (const auto& x : t.rows()[i]) st += !less(b, x);
      for (const auto& x : u.rows()[i]) su += !less(b, x);
      if (st < su) return false;
    }
  }
  return true;
}

/// A permutation of the boxes of a diagram: image[k] is where the k-th box in
/// reading order is sent.
struct PlacePermutation {
  std::vector<Box> image;
};

/// (t sigma) carries the entry of t at box x to box x sigma.
template <typename Entry>
Tableau<Entry> apply_place_permutation(const Tableau<Entry>& t, const PlacePermutation& sigma) {
  const auto boxes = t.boxes();
  require(sigma.image.size() == boxes.size(), "place permutation has the wrong size");
  Tableau<Entry> out = t;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const Box b = sigma.image[k];
    require(b.row >= 0 && b.row < t.num_rows() && b.col >= 0 && b.col < t.shape().part(b.row),
            "place permutation image outside the diagram");
    out[b] = t[boxes[k]];
  }
  return out;
}

/// The transposition swapping two boxes of `shape`.
inline PlacePermutation transposition(const Partition& shape, Box a, Box b) {
  PlacePermutation p;
  for (int i = 0; i < static_cast<int>(shape.length()); ++i)
    for (int j = 0; j < shape[i]; ++j) {
      Box x{i, j};
      p.image.push_back(x == a ? b : (x == b ? a : x));
    }
  return p;
}

namespace detail {

// Fills letters first..last one horizontal strip at a time. `lo`/`hi` bound the
// number of copies of each letter (indexed letter-1).
class SsytFiller {
 public:
  SsytFiller(const Partition& shape, int letters, std::vector<int> lo, std::vector<int> hi)
      : shape_(shape), letters_(letters), lo_(std::move(lo)), hi_(std::move(hi)) {
    cur_.assign(shape_.length(), 0);
    rows_.resize(shape_.length());
    for (std::size_t i = 0; i < shape_.length(); ++i) rows_[i].assign(shape_[i], 0);
    suffix_hi_.assign(letters_ + 1, 0);
    for (int b = letters_ - 1; b >= 0; --b) suffix_hi_[b] = suffix_hi_[b + 1] + hi_[b];
  }

  template <typename Visit>
  void run(Visit&& visit) {
    letter(0, shape_.size(), visit);
  }

 private:
  template <typename Visit>
  void letter(int b, int remaining, Visit& visit) {
    if (remaining == 0) {
      for (int k = b; k < letters_; ++k)
        if (lo_[k] > 0) return;
      visit(rows_);
      return;
    }
    if (b == letters_ || suffix_hi_[b] < remaining) return;
    const std::vector<int> before = cur_;
    strip(b, 0, 0, before, remaining, visit);
    cur_ = before;
  }

  template <typename Visit>
  void strip(int b, std::size_t row, int added, const std::vector<int>& before, int remaining, Visit& visit) {
    if (added > hi_[b]) return;
    if (row == shape_.length()) {
      if (added < lo_[b]) return;
      letter(b + 1, remaining - added, visit);
      return;
    }
    const int cap = std::min(shape_[row], row == 0 ? shape_[0] : before[row - 1]);
    for (int len = before[row]; len <= cap; ++len) {
      if (added + (len - before[row]) > hi_[b]) break;
      for (int j = before[row]; j < len; ++j) rows_[row][j] = b + 1;
      cur_[row] = len;
      strip(b, row + 1, added + (len - before[row]), before, remaining, visit);
    }
    cur_[row] = before[row];
  }

  Partition shape_;
  int letters_;
  std::vector<int> lo_, hi_, suffix_hi_, cur_;
  std::vector<std::vector<int>> rows_;
};

inline void sort_by_tableau_order(std::vector<Tableau<int>>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return tableau_less(a, b); });
}

}  // namespace detail

/// Semistandard tableaux of `shape` whose content is bounded letterwise by
/// `cap` (letters beyond cap.size() are not used), sorted by tableau_less.
inline std::vector<Tableau<int>> enumerate_ssyt_bounded(const Partition& shape, const Composition& cap) {
  std::vector<Tableau<int>> out;
  const int letters = static_cast<int>(cap.size());
  detail::SsytFiller filler(shape, letters, std::vector<int>(letters, 0), cap);
  filler.run([&](const std::vector<std::vector<int>>& rows) {
    out.push_back(shape.empty() ? Tableau<int>() : Tableau<int>(rows));
  });
  detail::sort_by_tableau_order(out);
  return out;
}

/// SSYT_{1..d}(shape), sorted by tableau_less.
inline std::vector<Tableau<int>> enumerate_ssyt(const Partition& shape, int d) {
  require(d >= 0, "letter bound must be non-negative");
  return enumerate_ssyt_bounded(shape, Composition(static_cast<std::size_t>(d), shape.size()));
}

/// SSYT(shape, beta), sorted by tableau_less. Empty when the degrees differ.
inline std::vector<Tableau<int>> enumerate_ssyt_content(const Partition& shape, const Composition& beta) {
  std::vector<Tableau<int>> out;
  if (degree(beta) != shape.size()) return out;
  const int letters = static_cast<int>(beta.size());
  detail::SsytFiller filler(shape, letters, beta, beta);
  filler.run([&](const std::vector<std::vector<int>>& rows) {
    out.push_back(shape.empty() ? Tableau<int>() : Tableau<int>(rows));
  });
  detail::sort_by_tableau_order(out);
  return out;
}

namespace detail {

inline std::uint64_t kostka_rec(const std::vector<int>& shape, std::size_t k, const Composition& beta,
                                std::map<std::pair<std::vector<int>, std::size_t>, std::uint64_t>& memo) {
  if (k == 0) {
    for (int p : shape)
      if (p) return 0;
    return 1;
  }
  auto key = std::make_pair(shape, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // remove a horizontal strip of size beta[k-1] holding the largest letter
  std::uint64_t total = 0;
  std::vector<int> inner = shape;
  const int need = beta[k - 1];
  std::function<void(std::size_t, int)> go = [&](std::size_t row, int removed) {
    if (row == shape.size()) {
      if (removed == need) total += kostka_rec(inner, k - 1, beta, memo);
      return;
    }
    const int floor = row + 1 < shape.size() ? shape[row + 1] : 0;
    for (int len = shape[row]; len >= floor; --len) {
      const int r = removed + (shape[row] - len);
      if (r > need) break;
      inner[row] = len;
      go(row + 1, r);
    }
    inner[row] = shape[row];
  };
  go(0, 0);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

/// |SSYT(lambda, beta)|, counted by peeling horizontal strips. Results are
/// cached process-wide.
inline std::uint64_t kostka(const Partition& lambda, const Composition& beta) {
  require(lambda.size() == degree(beta), "kostka needs |lambda| = |beta|");
  for (int b : beta) require(b >= 0, "composition parts must be non-negative");
  static std::mutex mutex;
  static std::map<std::pair<Partition, Composition>, std::uint64_t> cache;
  const Composition key_beta = trim(beta);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({lambda, key_beta}); it != cache.end()) return it->second;
  }
  std::map<std::pair<std::vector<int>, std::size_t>, std::uint64_t> memo;
  const std::uint64_t value = detail::kostka_rec(lambda.parts(), key_beta.size(), key_beta, memo);
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(lambda, key_beta), value);
  return value;
}

/// Text form "1 1/2 3": rows separated by '/', entries by spaces.
inline std::string to_string(const Tableau<int>& t) {
  std::string s;
  for (int i = 0; i < t.num_rows(); ++i) {
    if (i) s += '/';
    for (std::size_t j = 0; j < t.rows()[i].size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(t.rows()[i][j]);
    }
  }
  return s;
}

/// Accepts rows separated by '/' and entries separated by spaces or commas.
/// Text with no separators at all is read digit by digit ("11/23").
inline Tableau<int> parse_tableau(std::string_view text) {
  std::vector<std::vector<int>> rows;
  if (text.empty()) return {};
  const bool separated = text.find_first_of(" ,") != std::string_view::npos;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t slash = text.find('/', start);
    if (slash == std::string_view::npos) slash = text.size();
    std::string_view row = text.substr(start, slash - start);
    std::vector<int> entries;
    int cur = -1;
    for (char ch : row) {
      if (ch == ' ' || ch == ',') {
        if (cur >= 0) entries.push_back(cur);
        cur = -1;
      } else {
        require(ch >= '0' && ch <= '9', "invalid character in tableau '" + std::string(text) + "'");
        if (separated)
          cur = (cur < 0 ? 0 : cur * 10) + (ch - '0');
        else
          entries.push_back(ch - '0');
      }
    }
    if (cur >= 0) entries.push_back(cur);
    require(!entries.empty(), "empty row in tableau '" + std::string(text) + "'");
    rows.push_back(std::move(entries));
    start = slash + 1;
  }
  return Tableau<int>(std::move(rows));
}

}  // namespace plethysm
