#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "oracles.hpp"
#include "plethysm/hwv.hpp"
#include "plethysm/symfunc.hpp"

using namespace plethysm;
using oracle::column_expansion;
using oracle::grid;

namespace {

PlethysticTableau P(const char* text) { return parse_pssyt(text); }

HwVector vec(const Partition& mu, const Partition& nu, int d, std::vector<std::pair<const char*, Coeff>> terms) {
  HwVector v{mu, nu, d, weight(P(terms.front().first)), {}};
  for (const auto& [text, c] : terms) v.coeffs.add(P(text), c);
  return v;
}

bool same_up_to_sign(const HwVector& a, const HwVector& b) {
  if (a.coeffs == b.coeffs) return true;
  return a.coeffs == b.coeffs.scaled(-1);
}

using InnerKey = std::vector<std::vector<int>>;
using DoubleKey = std::vector<std::vector<InnerKey>>;
using DoubleVector = std::map<DoubleKey, long>;

void add_to(DoubleVector& v, const DoubleKey& k, long c) {
  if ((v[k] += c) == 0) v.erase(k);
}

// F(S) as an element of the tensor product over outer rows of symmetric
// powers of inner tabloid spaces.
DoubleVector expand(const PlethysticTableau& S) {
  DoubleVector out;
  for (const auto& [outer, sign] : column_expansion(S.rows())) {
    std::vector<std::pair<std::size_t, std::vector<std::pair<InnerKey, long>>>> boxes;
    for (std::size_t i = 0; i < outer.size(); ++i)
      for (const auto& t : outer[i]) {
        const auto e = column_expansion(t.rows());
        boxes.emplace_back(i, std::vector<std::pair<InnerKey, long>>(e.begin(), e.end()));
      }
    DoubleKey key(outer.size());
    std::function<void(std::size_t, long)> go = [&](std::size_t k, long c) {
      if (k == boxes.size()) {
        DoubleKey sorted = key;
        for (auto& r : sorted) std::sort(r.begin(), r.end());
        add_to(out, sorted, c);
        return;
      }
      for (const auto& [inner, a] : boxes[k].second) {
        key[boxes[k].first].push_back(inner);
        go(k + 1, c * a);
        key[boxes[k].first].pop_back();
      }
    };
    go(0, sign);
  }
  return out;
}

DoubleVector expand(const PssytVector& v) {
  DoubleVector out;
  for (const auto& [S, c] : v)
    for (const auto& [k, a] : expand(S)) add_to(out, k, c * a);
  return out;
}

// X^(c) as a derivation: one letter c becomes c - 1.
DoubleVector raise(int c, const DoubleVector& v) {
  DoubleVector out;
  for (const auto& [key, a] : v)
    for (std::size_t i = 0; i < key.size(); ++i)
      for (std::size_t p = 0; p < key[i].size(); ++p)
        for (std::size_t q = 0; q < key[i][p].size(); ++q)
          for (std::size_t x = 0; x < key[i][p][q].size(); ++x) {
            if (key[i][p][q][x] != c) continue;
            DoubleKey k = key;
            --k[i][p][q][x];
            std::sort(k[i][p][q].begin(), k[i][p][q].end());
            std::sort(k[i].begin(), k[i].end());
            add_to(out, k, a);
          }
  return out;
}

const Partition mu211{2, 1, 1}, two{2};

HwVector four_term_v() {
  return vec(mu211, two, 4,
             {{"[11/2/3][12/3/4]", 1}, {"[11/2/3][13/2/4]", -1}, {"[11/3/4][12/2/3]", -1}, {"[11/2/4][13/2/3]", 1}});
}

}  // namespace

TEST(RaisingAction, FourTermFixtures) {
  PssytVector expected;
  expected.add(P("[11/2/3][11/3/4]"), 1);
  EXPECT_EQ(raising_action(2, P("[11/2/3][12/3/4]")), expected);
  EXPECT_EQ(raising_action(2, P("[11/3/4][12/2/3]")), expected);
  EXPECT_TRUE(raising_action(2, P("[11/2/3][13/2/4]")).empty());
  EXPECT_TRUE(raising_action(2, P("[11/2/4][13/2/3]")).empty());
}

TEST(RaisingAction, MatchesDoubleTabloidOracle) {
  for (const auto& [nu, mu] : grid(5))
    for (const auto& S : enumerate_pssyt(mu, nu, 3))
      for (int c = 2; c <= 3; ++c)
        ASSERT_EQ(expand(raising_action(c, S)), raise(c, expand(S))) << to_string(S) << " c=" << c;
}

TEST(RaisingAction, ImageIsSemistandardOfShiftedWeight) {
  for (const auto& [nu, mu] : grid(6))
    for (const auto& S : enumerate_pssyt(mu, nu, 3))
      for (int c = 2; c <= 3; ++c)
        for (const auto& [U, a] : raising_action(c, S)) {
          EXPECT_TRUE(is_plethystic_semistandard(U, mu));
          EXPECT_EQ(weight(U), shift_weight(weight(S), c));
        }
}

TEST(RaisingAction, RejectsBadIndex) {
  EXPECT_THROW(raising_action(1, four_term_v()), UsageError);
  EXPECT_THROW(raising_action(5, four_term_v()), UsageError);
}

TEST(HwvSpace, FourTermVector) {
  const HwVector v = four_term_v();
  EXPECT_TRUE(is_highest_weight(v));
  for (const auto& [T, c] : v.coeffs) EXPECT_FALSE(is_highest_weight(basis_vector(mu211, two, 4, T)));
  const auto space = hwv_space(mu211, two, Partition{3, 2, 2, 1});
  ASSERT_EQ(space.size(), 1u);
  EXPECT_TRUE(same_up_to_sign(space[0], v));
}

TEST(StarMap, FourTermVector) {
  PssytVector t1;
  t1.add(P("[111/22/3][112/23/4]"), 1);
  t1.add(P("[111/22/3][112/24/3]"), -1);
  EXPECT_EQ(star_map(basis_vector(mu211, two, 4, P("[11/2/3][12/3/4]")), 2).coeffs, t1);

  const HwVector vs = star_map(four_term_v(), 2);
  EXPECT_EQ(vs.mu, (Partition{3, 2, 1}));
  EXPECT_EQ(vs.weight, (Composition{5, 4, 2, 1}));
  EXPECT_TRUE(is_highest_weight(vs));

  HwVector w = vec(Partition{3, 2, 1}, two, 4,
                   {{"[111/23/3][112/22/4]", 1}, {"[111/22/4][112/23/3]", -1}, {"[111/24/3][112/22/3]", -1},
                    {"[111/22/3][112/24/3]", 1}});
  w.coeffs.add(star_map(basis_vector(mu211, two, 4, P("[11/2/3][13/2/4]")), 2).coeffs, -1);
  w.coeffs.add(star_map(basis_vector(mu211, two, 4, P("[11/2/4][13/2/3]")), 2).coeffs, 1);
  EXPECT_TRUE(is_highest_weight(w));
  EXPECT_EQ(rank_of({vs, w}), 2u);
  const auto space = hwv_space(Partition{3, 2, 1}, two, Partition{5, 4, 2, 1});
  ASSERT_EQ(space.size(), 2u);
  auto all = space;
  all.push_back(vs);
  all.push_back(w);
  EXPECT_EQ(rank_of(all), 2u);

  // one more step stays injective on highest-weight vectors
  const HwVector vss = star_map(vs, 2), ws = star_map(w, 2);
  EXPECT_TRUE(is_highest_weight(vss));
  EXPECT_TRUE(is_highest_weight(ws));
  EXPECT_EQ(rank_of({vss, ws}), 2u);
}

TEST(StarMap, PreservesHighestWeightAndRank) {
  for (const auto& [nu, mu] : grid(6))
    for (const auto& lambda : enumerate_partitions(nu.size() * mu.size(), 3)) {
      const auto space = hwv_space(mu, nu, lambda, 3);
      if (space.empty()) continue;
      for (int r = 1; r <= 3; ++r) {
        if (r < static_cast<int>(mu.length())) continue;
        std::vector<HwVector> images;
        for (const auto& v : space) images.push_back(star_map(v, r));
        for (const auto& x : images) EXPECT_TRUE(is_highest_weight(x)) << to_string(nu) << to_string(mu);
        EXPECT_EQ(rank_of(images), space.size());
      }
    }
}

TEST(HwvSpace, DimensionEqualsCoefficient) {
  for (const auto& [nu, mu] : grid(6))
    for (const auto& lambda : enumerate_partitions(nu.size() * mu.size(), 4)) {
      const auto space = hwv_space(mu, nu, lambda);
      EXPECT_EQ(static_cast<Coeff>(space.size()), plethysm_coefficient(nu, mu, lambda))
          << to_string(nu) << " o " << to_string(mu) << " at " << to_string(lambda);
      for (const auto& v : space) EXPECT_TRUE(is_highest_weight(v));
      EXPECT_EQ(rank_of(space), space.size());
    }
}

TEST(HwvSpace, MoreVariablesSameDimension) {
  for (const auto& [nu, mu] : grid(4))
    for (const auto& lambda : enumerate_partitions(nu.size() * mu.size(), 3))
      EXPECT_EQ(hwv_space(mu, nu, lambda).size(), hwv_space(mu, nu, lambda, 4).size());
}

TEST(HwvSpace, RejectsTooFewVariables) {
  EXPECT_THROW(hwv_space(two, two, Partition{2, 1, 1}, 2), UsageError);
  EXPECT_THROW(hwv_space(two, two, Partition{3, 2}), UsageError);
}

TEST(HwvSpace, MaximalWeightTableauxAreHighestWeight) {
  for (const auto& [nu, mu] : grid(8))
    for (const auto& [lambda, count] : maximal_weights(mu, nu)) {
      const int d = static_cast<int>(lambda.length());
      const auto basis = weight_space_basis(mu, nu, d, lambda.parts());
      EXPECT_EQ(basis.size(), count);
      for (const auto& T : basis) EXPECT_TRUE(is_highest_weight(basis_vector(mu, nu, d, T))) << to_string(T);
    }
}

TEST(WeightSpaceBasis, Basics) {
  EXPECT_EQ(weight_space_basis(two, two, 2, {2, 2}).size(), 2u);
  EXPECT_TRUE(weight_space_basis(two, two, 1, {2, 2}).empty());
  EXPECT_TRUE(weight_space_basis(two, two, 3, {2, 1}).empty());
  for (const auto& T : weight_space_basis(mu211, two, 4, {3, 2, 2, 1})) EXPECT_TRUE(is_plethystic_semistandard(T, mu211));
  EXPECT_EQ(weight_space_basis(mu211, two, 4, {3, 2, 2, 1}).size(), count_pssyt_weight(mu211, two, {3, 2, 2, 1}));
}

TEST(AlternatingSum, HighestWeightOfWeightTwoL) {
  for (int l = 1; l <= 5; ++l) {
    const HwVector f = foulkes_hwv(l);
    EXPECT_EQ(f.weight, Composition(l, 2));
    EXPECT_FALSE(f.coeffs.empty());
    EXPECT_TRUE(is_highest_weight(f));
    const auto space = hwv_space(two, Partition{l}, rectangle(2, l));
    ASSERT_EQ(space.size(), 1u);
    EXPECT_EQ(rank_of({f, space[0]}), 1u);
  }
  EXPECT_TRUE(is_highest_weight(foulkes_hwv(3, 5)));
  EXPECT_THROW(foulkes_hwv(8), UsageError);
}

TEST(TildeMap, InjectiveOnHighestWeightVectors) {
  for (const auto& [nu, mu] : grid(6))
    for (const auto& lambda : enumerate_partitions(nu.size() * mu.size(), 3)) {
      const auto space = hwv_space(mu, nu, lambda);
      if (space.empty()) continue;
      for (int r = mu[0]; r <= mu[0] + 1; ++r) {
        std::vector<HwVector> images;
        for (const auto& v : space) images.push_back(tilde_map(v, r));
        for (const auto& x : images) {
          EXPECT_TRUE(is_highest_weight(x));
          EXPECT_EQ(x.weight, disjoint_union(Partition{static_cast<int>(nu.size()) * r}, lambda).parts());
        }
        EXPECT_EQ(rank_of(images), space.size());
      }
    }
  EXPECT_THROW(tilde_map(four_term_v(), 1), UsageError);
}

TEST(MultiplyHwv, ProductsOfHighestWeightVectors) {
  const HwVector f2 = foulkes_hwv(2, 4), f1 = foulkes_hwv(1, 4);
  const HwVector p = multiply_hwv(f2, f1);
  EXPECT_EQ(p.nu, Partition{3});
  EXPECT_EQ(p.weight, (Composition{4, 2}));
  EXPECT_TRUE(is_highest_weight(p));
  EXPECT_EQ(multiply_hwv(unit_hwv(two, 4), f2).coeffs, f2.coeffs);
  EXPECT_EQ(multiply_hwv(f2, f1), multiply_hwv(f1, f2));
  for (const auto& v : hwv_space(Partition{2, 1}, two, Partition{4, 2}))
    for (const auto& w : hwv_space(Partition{2, 1}, Partition{1}, Partition{2, 1})) {
      const HwVector x = multiply_hwv(v, w);
      EXPECT_FALSE(x.coeffs.empty());
      EXPECT_TRUE(is_highest_weight(x));
    }
}

TEST(Examples, NonMaximalColumn) {
  const Partition mu22{2, 2}, col11 = rectangle(1, 11);
  std::vector<Tableau<int>> entries;
  for (const char* s : {"11/22", "11/23", "12/23", "11/33", "12/33", "11/24", "12/24", "11/34", "12/34", "11/44", "12/44"})
    entries.push_back(parse_tableau(s));
  std::sort(entries.begin(), entries.end(), AlphabetOrder<Tableau<int>>{});
  std::vector<std::vector<Tableau<int>>> rows;
  for (const auto& e : entries) rows.push_back({e});
  const PlethysticTableau T(rows);
  rows.back() = {parse_tableau("13/24")};
  const PlethysticTableau T2(rows);
  ASSERT_TRUE(is_plethystic_semistandard(T, mu22));
  ASSERT_TRUE(is_plethystic_semistandard(T2, mu22));
  EXPECT_EQ(weight(T), (Composition{17, 11, 8, 8}));
  EXPECT_EQ(weight(T2), (Composition{17, 11, 9, 7}));
  PssytVector expected;
  expected.add(T2, -1);
  EXPECT_EQ(raising_action(4, T), expected);
  EXPECT_FALSE(is_highest_weight(basis_vector(mu22, col11, 4, T)));
  EXPECT_TRUE(is_highest_weight(basis_vector(mu22, col11, 4, T2)));
}

TEST(Examples, HighestWeightButNotMaximal) {
  const Partition mu21{2, 1}, col4{1, 1, 1, 1};
  const PlethysticTableau T = P("[11/2] || [12/2] || [13/2] || [14/2]");
  EXPECT_EQ(weight(T), (Composition{5, 5, 1, 1}));
  EXPECT_TRUE(is_highest_weight(basis_vector(mu21, col4, 4, T)));
  const PlethysticTableau U = P("[11/2] || [11/3] || [12/2] || [12/3]");
  EXPECT_EQ(weight(U), (Composition{6, 4, 2}));
  EXPECT_TRUE(is_highest_weight(basis_vector(mu21, col4, 3, U)));
  EXPECT_EQ(maximal_weights(mu21, col4).at(Partition{6, 4, 2}), 2u);
}
