#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "qcc/errors.hpp"
#include "qcc/render.hpp"
#include "qcc/verify.hpp"

using namespace qcc;

namespace {

// Every walk along distinct edges of t from a to b that passes the validator.
size_t brute_force_paths(const Triangulation& t, int a, int b) {
  int v = t.vertices();
  size_t count = 0;
  TPath p{{a}, {}};
  std::vector<bool> used(2 * t.n() + 3, false);
  std::function<void(int)> walk = [&](int at) {
    if (at == b && is_tpath(t, a, b, p)) ++count;
    for (int w = 0; w < v; ++w) {
      int label = t.label_of(at, w);
      if (label < 0 || used[label]) continue;
      used[label] = true;
      p.vertices.push_back(w);
      p.labels.push_back(label);
      walk(w);
      p.vertices.pop_back();
      p.labels.pop_back();
      used[label] = false;
    }
  };
  walk(a);
  return count;
}

TorusElement mutation_side(const Triangulation& fan, int a, int b) {
  int n = fan.n();
  ValuedQuiver q(b_from_triangulation(fan), std::vector<long long>(n, 1));
  FormPtr base = diagonal_form(fan);
  auto [seq, label] = flip_sequence_to(fan, a, b);
  TorusElement x = seq.empty() ? TorusElement::generator(compatible_pair(q).lambda, label)
                               : variable_by_label(q, label, seq);
  if (x.rank() != n) x = project_frozen(x, base);
  return x.with_form(base);
}

}  // namespace

TEST(Triangulation, FanAndLabels) {
  Triangulation t = Triangulation::fan(2);
  EXPECT_EQ(t.vertices(), 5);
  EXPECT_EQ(t.diagonals(), (std::vector<std::pair<int, int>>{{0, 2}, {0, 3}}));
  EXPECT_EQ(t.edge(2), (std::pair<int, int>{0, 1}));
  EXPECT_EQ(t.edge(6), (std::pair<int, int>{0, 4}));
  EXPECT_EQ(t.label_of(3, 0), 1);
  EXPECT_EQ(t.label_of(1, 3), -1);
  EXPECT_EQ(t.triangles().size(), 3u);
}

TEST(Triangulation, Validation) {
  EXPECT_THROW(Triangulation(2, {{0, 2}, {1, 3}}), ValidationError);
  EXPECT_THROW(Triangulation(2, {{0, 2}}), ValidationError);
  EXPECT_THROW(Triangulation(2, {{0, 1}, {0, 2}}), ValidationError);
  EXPECT_NO_THROW(Triangulation(2, {{1, 3}, {1, 4}}));
}

TEST(Triangulation, Crosses) {
  EXPECT_TRUE(crosses(5, {0, 2}, {1, 3}));
  EXPECT_FALSE(crosses(5, {0, 2}, {0, 3}));
  EXPECT_FALSE(crosses(6, {0, 2}, {3, 5}));
  EXPECT_TRUE(adjacent(5, 4, 0));
}

TEST(BMatrix, PentagonFan) {
  IntMatrix b = b_from_triangulation(Triangulation::fan(2));
  EXPECT_EQ(std::abs(b(0, 1)), 1);
  EXPECT_EQ(b(0, 1), -b(1, 0));
  EXPECT_EQ(b(0, 0), 0);
}

TEST(BMatrix, HexagonFanIsLinear) {
  IntMatrix b = b_from_triangulation(Triangulation::fan(3));
  EXPECT_EQ(std::abs(b(0, 1)), 1);
  EXPECT_EQ(std::abs(b(1, 2)), 1);
  EXPECT_EQ(b(0, 2), 0);
  EXPECT_EQ(b(0, 1), b(1, 2));
}

TEST(Flip, CommutesWithMatrixMutation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 6)(rng);
    Triangulation t = Triangulation::random(n, rng);
    int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
    Triangulation f = flip(t, k);
    EXPECT_EQ(b_from_triangulation(f), matrix_mutation(b_from_triangulation(t), k));
    EXPECT_EQ(flip(f, k), t);
  }
}

TEST(TPaths, PentagonCounts) {
  Triangulation t = Triangulation::fan(2);
  EXPECT_EQ(enumerate_tpaths(t, 1, 3).size(), 2u);
  EXPECT_EQ(enumerate_tpaths(t, 2, 4).size(), 2u);
  EXPECT_EQ(enumerate_tpaths(t, 1, 4).size(), 3u);
  EXPECT_EQ(enumerate_tpaths(t, 0, 2).size(), 1u);
  EXPECT_THROW(enumerate_tpaths(t, 1, 2), AdjacentVertices);
}

TEST(TPaths, MatchBruteForce) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 5)(rng);
    Triangulation t = Triangulation::random(n, rng);
    for (int a = 0; a < t.vertices(); ++a)
      for (int b = a + 2; b < t.vertices(); ++b) {
        if (adjacent(t.vertices(), a, b)) continue;
        auto paths = enumerate_tpaths(t, a, b);
        std::set<std::vector<int>> distinct;
        for (const auto& p : paths) {
          EXPECT_TRUE(is_tpath(t, a, b, p));
          EXPECT_EQ(p.labels.size() % 2, 1u);
          distinct.insert(p.vertices);
        }
        EXPECT_EQ(distinct.size(), paths.size());
        EXPECT_EQ(paths.size(), brute_force_paths(t, a, b)) << n << " " << a << " " << b;
      }
  }
}

TEST(TPaths, TermCountEqualsPathCount) {
  Triangulation t = Triangulation::fan(4);
  for (int a = 0; a < t.vertices(); ++a)
    for (int b = a + 2; b < t.vertices(); ++b) {
      if (adjacent(t.vertices(), a, b)) continue;
      EXPECT_EQ(tpath_expand(t, a, b, Frozen::Keep).size(), enumerate_tpaths(t, a, b).size());
    }
}

TEST(TPathExpand, PentagonExamples) {
  Triangulation t = Triangulation::fan(2);
  EXPECT_EQ(tpath_expand(t, 1, 3, Frozen::One).size(), 2u);
  EXPECT_EQ(tpath_expand(t, 1, 4, Frozen::One).size(), 3u);
  TorusElement own = tpath_expand(t, 0, 2, Frozen::One);
  EXPECT_TRUE(own.is_monomial());
  EXPECT_EQ(own, TorusElement::generator(diagonal_form(t), 0));
}

TEST(TPathExpand, MatchesMutationOnFans) {
  for (int n : {2, 3}) {
    Triangulation fan = Triangulation::fan(n);
    for (int a = 0; a < fan.vertices(); ++a)
      for (int b = a + 2; b < fan.vertices(); ++b) {
        if (adjacent(fan.vertices(), a, b)) continue;
        EXPECT_EQ(tpath_expand(fan, a, b, Frozen::One), mutation_side(fan, a, b)) << n << " " << a << " " << b;
      }
  }
}

TEST(PathExponent, AlternatingSigns) {
  Triangulation t = Triangulation::fan(2);
  for (const auto& p : enumerate_tpaths(t, 1, 4)) {
    ExponentVec e = path_exponent(t, p);
    ASSERT_EQ(e.size(), 7u);
    long long sum = 0;
    for (auto x : e) sum += x;
    EXPECT_EQ(sum, 1);
  }
}

TEST(FlipSequence, ReachesDiagonal) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 5)(rng);
    Triangulation t = Triangulation::random(n, rng);
    for (int a = 0; a < t.vertices(); ++a)
      for (int b = a + 2; b < t.vertices(); ++b) {
        if (adjacent(t.vertices(), a, b)) continue;
        auto [seq, label] = flip_sequence_to(t, a, b);
        Triangulation u = t;
        for (int k : seq) u = flip(u, k);
        EXPECT_EQ(u.edge(label), (std::pair<int, int>{a, b}));
      }
  }
}
