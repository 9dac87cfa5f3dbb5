#pragma once

#include <map>
#include <utility>

#include "plethysm/checked.hpp"

namespace plethysm {

/// Sparse integer combination of basis keys. Zero coefficients are never
/// stored, so two combinations are equal exactly when their maps are.
template <typename Key, typename Compare = std::less<Key>>
class LinearCombination {
 public:
  using map_type = std::map<Key, Coeff, Compare>;

  LinearCombination() = default;
  LinearCombination(const Key& key, Coeff c) { add(key, c); }

  void add(const Key& key, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// this += scale * other
  void add(const LinearCombination& other, Coeff scale = 1) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, checked_mul(c, scale));
  }

  Coeff coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  LinearCombination scaled(Coeff s) const {
    LinearCombination out;
    out.add(*this, s);
    return out;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinearCombination& operator+=(const LinearCombination& o) {
    add(o);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add(o, -1);
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

}  // namespace plethysm
