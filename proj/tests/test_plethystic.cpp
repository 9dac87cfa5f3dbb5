#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "plethysm/plethystic.hpp"

using namespace plethysm;

namespace {

Tableau<int> T(const char* text) { return parse_tableau(text); }

// Column order on mu-tableaux via indicator vectors (largest letter first,
// rightmost column first), independent of tableau_less.
std::vector<int> inner_key(const Tableau<int>& t, int d) {
  std::vector<int> key;
  for (int j = t.num_cols() - 1; j >= 0; --j) {
    const auto col = t.column(j);
    for (int x = d; x >= 1; --x) key.push_back(std::count(col.begin(), col.end(), x) > 0);
  }
  return key;
}

// All nu-fillings by semistandard mu-tableaux, kept when rows weakly
// increase and columns strictly increase in the key order.
std::vector<PlethysticTableau> brute_pssyt(const Partition& mu, const Partition& nu, int d) {
  const auto alphabet = mu.empty() ? std::vector<Tableau<int>>{Tableau<int>()} : enumerate_ssyt(mu, d);
  std::vector<PlethysticTableau> out;
  if (nu.empty()) {
    out.emplace_back();
    return out;
  }
  std::vector<std::vector<int>> idx;
  for (int len : nu) idx.emplace_back(len, 0);
  std::vector<Box> boxes;
  for (std::size_t i = 0; i < nu.length(); ++i)
    for (int j = 0; j < nu[i]; ++j) boxes.push_back({static_cast<int>(i), j});
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == boxes.size()) {
      std::vector<std::vector<Tableau<int>>> rows;
      for (const auto& r : idx) {
        rows.emplace_back();
        for (int x : r) rows.back().push_back(alphabet[x]);
      }
      for (const Box b : boxes) {
        const auto key = inner_key(rows[b.row][b.col], d);
        if (b.col > 0 && inner_key(rows[b.row][b.col - 1], d) > key) return;
        if (b.row > 0 && inner_key(rows[b.row - 1][b.col], d) >= key) return;
      }
      out.emplace_back(std::move(rows));
      return;
    }
    for (std::size_t x = 0; x < alphabet.size(); ++x) {
      idx[boxes[k].row][boxes[k].col] = static_cast<int>(x);
      go(k + 1);
    }
  };
  go(0);
  return out;
}

Composition padded(Composition c, std::size_t len) {
  c.resize(len, 0);
  return c;
}

}  // namespace

TEST(Weight, Examples) {
  const PlethysticTableau S({{T("11/2"), T("11/2")}, {T("11/3"), T("12/2")}});
  EXPECT_TRUE(is_plethystic_semistandard(S, Partition{2, 1}));
  EXPECT_EQ(weight(S), (Composition{7, 4, 1}));
  const PlethysticTableau ones({{T("111"), T("111"), T("111")}});
  EXPECT_EQ(weight(ones), (Composition{9}));
  EXPECT_EQ(weight(PlethysticTableau({{T("11/2")}})), (Composition{2, 1}));
}

TEST(Pssyt, Examples) {
  const auto col = enumerate_pssyt_weight(Partition{1, 1, 1}, Partition{1, 1, 1}, {3, 3, 1, 1, 1});
  ASSERT_EQ(col.size(), 1u);
  EXPECT_EQ(col[0], PlethysticTableau({{T("1/2/3")}, {T("1/2/4")}, {T("1/2/5")}}));
  const auto two = enumerate_pssyt(Partition{2}, Partition{1, 1, 1}, 2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0], PlethysticTableau({{T("11")}, {T("12")}, {T("22")}}));
  EXPECT_EQ(enumerate_pssyt(Partition{}, Partition{3}, 2).size(), 1u);
  EXPECT_EQ(enumerate_pssyt(Partition{2, 1}, Partition{}, 2).size(), 1u);
  EXPECT_TRUE(enumerate_pssyt(Partition{}, Partition{1, 1}, 2).empty());
  EXPECT_TRUE(enumerate_pssyt_weight(Partition{2}, Partition{2}, {3}).empty());
}

TEST(Pssyt, MatchesBruteForce) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& nu : enumerate_partitions(n))
        for (const auto& mu : enumerate_partitions(m))
          for (int d = 1; d <= 3; ++d) {
            if (n * m > 8) continue;
            const auto got = enumerate_pssyt(mu, nu, d);
            const auto brute = brute_pssyt(mu, nu, d);
            ASSERT_EQ(std::set<PlethysticTableau>(got.begin(), got.end()),
                      std::set<PlethysticTableau>(brute.begin(), brute.end()))
                << to_string(nu) << to_string(mu) << d;
            EXPECT_EQ(got.size(), brute.size());
            EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), PlethysticLess{}));
          }
}

TEST(Pssyt, WeightRestrictionMatchesFilter) {
  for (const auto& [mu, nu] : std::vector<std::pair<Partition, Partition>>{
           {{2}, {2}}, {{1, 1}, {2, 1}}, {{2, 1}, {2}}, {{2}, {1, 1, 1}}, {{3}, {2}}, {{2, 1}, {1, 1}}}) {
    const int d = 3;
    const auto all = enumerate_pssyt(mu, nu, d);
    std::map<Composition, std::vector<PlethysticTableau>> by_weight;
    for (const auto& t : all) by_weight[weight(t)].push_back(t);
    std::size_t total = 0;
    for (const auto& [beta, ts] : by_weight) {
      EXPECT_EQ(enumerate_pssyt_weight(mu, nu, beta), ts);
      EXPECT_EQ(count_pssyt_weight(mu, nu, beta), ts.size());
      total += ts.size();
    }
    EXPECT_EQ(total, all.size());
  }
}

TEST(Closed, Examples) {
  const std::vector<Tableau<int>> ex{T("11/22"), T("11/23"), T("12/23"), T("11/33"), T("12/33"), T("11/24"),
                                     T("12/24"), T("11/34"), T("12/34"), T("11/44"), T("12/44")};
  EXPECT_TRUE(is_closed(ex));
  EXPECT_TRUE(is_closed({T("11/2")}));
  EXPECT_FALSE(is_closed({T("12/3")}));
}

TEST(MaximalWeights, Examples) {
  EXPECT_EQ(maximal_weights(Partition{1, 1, 1}, Partition{1, 1, 1}),
            (std::map<Partition, std::uint64_t>{{Partition{3, 3, 1, 1, 1}, 1}, {Partition{3, 2, 2, 2}, 1}}));
  EXPECT_EQ(maximal_weights(Partition{2}, Partition{1, 1, 1}),
            (std::map<Partition, std::uint64_t>{{Partition{4, 1, 1}, 1}, {Partition{3, 3}, 1}}));
  const auto w = maximal_weights(Partition{2, 1}, Partition{1, 1, 1, 1});
  ASSERT_TRUE(w.count(Partition{6, 4, 2}));
  EXPECT_EQ(w.at(Partition{6, 4, 2}), 2u);
  EXPECT_EQ(maximal_weights(Partition{3}, Partition{3}), (std::map<Partition, std::uint64_t>{{Partition{9}, 1}}));
}

TEST(MaximalWeights, MatchesBruteForce) {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      if (n * m > 6) continue;
      for (const auto& nu : enumerate_partitions(n))
        for (const auto& mu : enumerate_partitions(m)) {
          const std::size_t len = n * m;
          std::map<Composition, std::uint64_t> counts;
          for (const auto& t : brute_pssyt(mu, nu, n * m)) ++counts[padded(weight(t), len)];
          std::map<Partition, std::uint64_t> expected;
          for (const auto& [beta, c] : counts) {
            bool maximal = true;
            for (const auto& [other, c2] : counts)
              if (other != beta && dominates(other, beta)) maximal = false;
            if (maximal) expected.emplace(Partition(beta), c);
          }
          EXPECT_EQ(maximal_weights(mu, nu), expected) << to_string(nu) << to_string(mu);
        }
    }
}

TEST(MaximalWeights, PartitionsAndClosedEntrySets) {
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; n * m <= 8; ++m)
      for (const auto& nu : enumerate_partitions(n))
        for (const auto& mu : enumerate_partitions(m)) {
          const auto w = maximal_weights(mu, nu);  // throws if a maximal weight is not a partition
          EXPECT_FALSE(w.empty());
          if (nu.length() != static_cast<std::size_t>(n)) continue;
          for (const auto& [lambda, c] : w)
            for (const auto& t : enumerate_pssyt_weight(mu, nu, lambda.parts())) {
              std::vector<Tableau<int>> entries;
              for (const auto& row : t.rows()) entries.push_back(row[0]);
              EXPECT_TRUE(is_closed(entries));
            }
        }
}

TEST(Text, PssytRoundTrip) {
  const PlethysticTableau S({{T("11/2"), T("11/3")}, {T("12/2")}});
  EXPECT_EQ(to_string(S), "[1 1/2][1 1/3] || [1 2/2]");
  EXPECT_EQ(parse_pssyt(to_string(S)), S);
  EXPECT_EQ(parse_pssyt("[11/2][11/3] || [12/2]"), S);
  EXPECT_THROW(parse_pssyt("[1 1/2"), UsageError);
  EXPECT_THROW(parse_pssyt("x"), UsageError);
}
