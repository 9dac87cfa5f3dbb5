#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "plethysm/checked.hpp"

namespace plethysm {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

namespace detail {

inline void make_primitive(std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const auto& x : row)
    if (x != 0) g = gcd(g, abs(x));
  if (g > 1)
    for (auto& x : row) x /= g;
}

struct Echelon {
  IntMatrix rows;                  // reduced rows, one per pivot
  std::vector<std::size_t> pivot;  // pivot column of each row
};

// Fraction-free Gauss-Jordan: every pivot column is zero outside its pivot
// row, and each row is kept primitive to stop coefficient growth.
inline Echelon echelon(IntMatrix m, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    make_primitive(m[r]);
    for (std::size_t q = 0; q < m.size(); ++q) {
      if (q == r || m[q][c] == 0) continue;
      const BigInt a = m[r][c], b = m[q][c];
      for (std::size_t k = 0; k < cols; ++k) m[q][k] = m[q][k] * a - m[r][k] * b;
      make_primitive(m[q]);
    }
    e.pivot.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

}  // namespace detail

inline std::size_t matrix_rank(const IntMatrix& m, std::size_t cols) { return detail::echelon(m, cols).pivot.size(); }

/// A basis of the integer kernel {x : m x = 0}, one primitive vector per free
/// column, converted to 64-bit with an overflow check.
inline std::vector<std::vector<Coeff>> integer_kernel(const IntMatrix& m, std::size_t cols) {
  const detail::Echelon e = detail::echelon(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot) is_pivot[c] = true;
  std::vector<std::vector<Coeff>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BigInt L = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k)
      if (e.rows[k][f] != 0) L = lcm(L, e.rows[k][e.pivot[k]]);
    std::vector<BigInt> x(cols, 0);
    x[f] = L;
    for (std::size_t k = 0; k < e.rows.size(); ++k)
      if (e.rows[k][f] != 0) x[e.pivot[k]] = -e.rows[k][f] * L / e.rows[k][e.pivot[k]];
    detail::make_primitive(x);
    std::vector<Coeff> v;
    v.reserve(cols);
    for (const auto& xi : x) {
      if (xi > std::numeric_limits<Coeff>::max() || xi < std::numeric_limits<Coeff>::min())
        throw ComputationError("kernel vector entry exceeds 64 bits");
      v.push_back(xi.convert_to<Coeff>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace plethysm
