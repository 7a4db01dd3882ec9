#include <gtest/gtest.h>

#include <random>

#include "qcc/errors.hpp"
#include "qcc/render.hpp"
#include "qcc/verify.hpp"

using namespace qcc;

namespace {

BigRational R(long long a, long long b = 1) { return BigRational(a, b); }

TorusElement text(const TorusElement& like, const std::string& s) { return parse_element(like.form(), s); }

void expect_same_seed(const QuantumSeed& a, const QuantumSeed& b) {
  EXPECT_EQ(a.pair.B, b.pair.B);
  EXPECT_EQ(*a.pair.lambda, *b.pair.lambda);
  ASSERT_EQ(a.vars.size(), b.vars.size());
  for (size_t i = 0; i < a.vars.size(); ++i) EXPECT_EQ(a.vars[i], b.vars[i]);
}

}  // namespace

TEST(LambdaFromB, RankTwo) {
  for (auto [b, c] : {std::pair{1, 1}, {2, 1}, {3, 1}, {2, 2}, {4, 3}}) {
    SkewForm l = lambda_from_B(ValuedQuiver::rank2(b, c));
    EXPECT_EQ(l.lambda(0, 1), R(1));
    EXPECT_EQ(l.lambda(1, 0), R(-1));
  }
}

TEST(LambdaFromB, Kronecker) {
  ValuedQuiver q = named_quiver("Kronecker");
  EXPECT_EQ(q.D, (std::vector<long long>{2, 2}));
  EXPECT_EQ(lambda_from_B(q), SkewForm(IntMatrix::from_rows({{0, 1}, {-1, 0}}), 1));
}

TEST(LambdaFromB, RankFourSatisfiesLambdaB) {
  ValuedQuiver q = named_quiver("rank4");
  RationalMatrix l = lambda_from_B(q).to_rational();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      BigRational s = 0;
      for (int k = 0; k < 4; ++k) s += l[i][k] * q.B(k, j);
      EXPECT_EQ(s, R(i == j ? -1 : 0));
    }
}

TEST(LambdaFromB, SingularRejected) {
  ValuedQuiver a3(IntMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}), {1, 1, 1});
  EXPECT_THROW(lambda_from_B(a3), SingularMatrix);
}

TEST(PrincipalCompletion, Compatible) {
  for (const char* name : {"A2", "C2", "G2", "Kronecker", "rank4"}) {
    CompatiblePair p = principal_completion(named_quiver(name));
    EXPECT_TRUE(is_compatible(p)) << name;
    EXPECT_EQ(p.B.rows(), 2 * named_quiver(name).n);
  }
}

TEST(PrincipalCompletion, RankOneZero) {
  ValuedQuiver q(IntMatrix(1, 1), {3});
  CompatiblePair p = principal_completion(q);
  EXPECT_EQ(p.B, IntMatrix::from_rows({{0, -1}, {1, 0}}));
  EXPECT_EQ(*p.lambda, SkewForm(IntMatrix::from_rows({{0, -3}, {3, 0}}), 1));
}

TEST(PrincipalCompletion, ReproducesA2WithFrozenSetToOne) {
  ValuedQuiver q = named_quiver("A2");
  QuantumSeed s = initial_seed(principal_completion(q));
  FormPtr f = make_form(lambda_from_B(q));
  const auto& g = golden().quiver("A2");
  for (const auto& v : g.variables) {
    QuantumSeed t = mutate_sequence(s, zero_based(v.seq));
    TorusElement x = t.vars[v.seq.back() - 1].map_exponents(f, [](const ExponentVec& a) {
      return ExponentVec(a.begin(), a.begin() + 2);
    });
    EXPECT_EQ(x, parse_element(f, v.expansion)) << v.name;
  }
}

TEST(MatrixMutation, RankTwoFlipsSigns) {
  ValuedQuiver q = ValuedQuiver::rank2(3, 1);
  IntMatrix neg(2, 2);
  neg(0, 1) = -3;
  neg(1, 0) = 1;
  EXPECT_EQ(matrix_mutation(q.B, 0), neg);
  EXPECT_EQ(matrix_mutation(q.B, 1), neg);
}

TEST(MatrixMutation, RankFourAtVertexTwo) {
  IntMatrix m = matrix_mutation(named_quiver("rank4").B, 1);
  EXPECT_EQ(m(0, 2), 4);
  EXPECT_EQ(m(0, 1), -2);
  EXPECT_EQ(m(1, 2), -2);
  EXPECT_EQ(m(2, 3), 2);
  EXPECT_EQ(matrix_mutation(m, 1), named_quiver("rank4").B);
}

TEST(MatrixMutation, OutOfRange) { EXPECT_THROW(matrix_mutation(named_quiver("A2").B, 2), ValidationError); }

TEST(Mutation, CompatibilityAndInvolution) {
  std::mt19937_64 rng(7);
  for (const char* name : {"A2", "C2", "G2", "Kronecker", "rank4"}) {
    ValuedQuiver q = named_quiver(name);
    std::uniform_int_distribution<int> dir(0, q.n - 1), len(0, q.n == 4 ? 3 : 5);
    for (int t = 0; t < 6; ++t) {
      QuantumSeed s = initial_seed(compatible_pair(q));
      for (int l = len(rng); l > 0; --l) s = mutate_seed(s, dir(rng));
      EXPECT_TRUE(is_compatible(s.pair));
      EXPECT_TRUE(check_commutation(s));
      int k = dir(rng);
      expect_same_seed(mutate_seed(mutate_seed(s, k), k), s);
    }
  }
}

TEST(Mutation, LaurentAlongRandomSequences) {
  std::mt19937_64 rng(8);
  for (const char* name : {"A2", "C2", "G2", "Kronecker", "rank4"}) {
    ValuedQuiver q = named_quiver(name);
    std::uniform_int_distribution<int> dir(0, q.n - 1);
    for (int t = 0; t < 4; ++t) {
      QuantumSeed s = initial_seed(compatible_pair(q));
      std::vector<int> seq;
      for (int l = 0; l < (q.n == 4 ? 4 : 8); ++l) {
        int k = dir(rng);
        if (!seq.empty() && seq.back() == k) continue;
        seq.push_back(k);
      }
      EXPECT_NO_THROW(s = mutate_sequence(s, seq)) << name;
      EXPECT_TRUE(check_commutation(s));
    }
  }
}

TEST(FrameMonomial, InitialSeed) {
  QuantumSeed s = initial_seed(compatible_pair(named_quiver("C2")));
  EXPECT_EQ(frame_monomial(s, {2, 3}), TorusElement::monomial(s.initial_form, {2, 3}));
  EXPECT_EQ(frame_monomial(s, {0, -1}), TorusElement::monomial(s.initial_form, {0, -1}));
}

TEST(FrameMonomial, AfterOneMutation) {
  QuantumSeed s = mutate_seed(initial_seed(compatible_pair(named_quiver("A2"))), 0);
  TorusElement x = frame_monomial(s, {1, 0});
  EXPECT_EQ(x, text(x, "X^(-1,1) + X^(-1,0)"));
}

TEST(MutateSeed, GoldenExamples) {
  ValuedQuiver a2 = named_quiver("A2");
  TorusElement x3 = variable_by_label(a2, 0, {0});
  EXPECT_EQ(x3, text(x3, "X^(-1,1) + X^(-1,0)"));
  TorusElement x4 = variable_by_label(a2, 1, {0, 1});
  EXPECT_EQ(x4, text(x4, "X^(-1,0) + X^(0,-1) + X^(-1,-1)"));
  TorusElement c4 = variable_by_label(named_quiver("C2"), 1, {0, 1});
  EXPECT_EQ(c4.coefficient({-2, 0}), QScalar::q_power(1, 2) + QScalar::q_power(-1, 2));
}

TEST(VariableByLabel, SimpleIsExchangeBinomial) {
  for (const char* name : {"A2", "C2", "G2", "rank4"}) {
    ValuedQuiver q = named_quiver(name);
    for (int k = 0; k < q.n; ++k) EXPECT_EQ(variable_by_label(q, k, {k}).size(), 2u) << name << " " << k;
  }
}

TEST(VariableByLabel, G2SevenTerms) {
  TorusElement x6 = variable_by_label(named_quiver("G2"), 1, {0, 1, 0, 1});
  EXPECT_EQ(x6.size(), 7u);
  EXPECT_EQ(x6, text(x6, golden().quiver("G2").variable("X6").expansion));
}

TEST(VariableByLabel, RepeatedDirectionsCancel) {
  ValuedQuiver q = named_quiver("rank4");
  EXPECT_EQ(variable_by_label(q, 2, {1, 3, 3, 2}), variable_by_label(q, 2, {1, 2}));
  EXPECT_THROW(variable_by_label(q, 4, {}), ValidationError);
}

TEST(VariableByLabel, GoldenVariablesBarInvariant) {
  for (const auto& g : golden().rank2)
    for (const auto& v : g.variables) {
      TorusElement x = variable_by_label(named_quiver(g.quiver), v.seq.back() - 1, zero_based(v.seq));
      EXPECT_EQ(x.bar(), x) << g.quiver << " " << v.name;
    }
}

TEST(SinkSource, Examples) {
  IntMatrix b = named_quiver("A2").B;
  EXPECT_TRUE(is_source(b, 0));
  EXPECT_TRUE(is_sink(b, 1));
  IntMatrix r4 = named_quiver("rank4").B;
  EXPECT_FALSE(is_sink(r4, 1));
  EXPECT_FALSE(is_source(r4, 1));
}

TEST(Admissible, Examples) {
  ValuedQuiver r4 = named_quiver("rank4");
  EXPECT_FALSE(is_admissible(r4, {1, 2, 3}));
  EXPECT_FALSE(is_admissible(named_quiver("A2"), {0, 0}));
  EXPECT_TRUE(is_admissible(named_quiver("A2"), {0, 1, 0}));
  EXPECT_TRUE(is_admissible(r4, {0, 1}));
}

TEST(EulerForm, A2) {
  RootContext ctx = root_context(named_quiver("A2"));
  EXPECT_EQ(euler_form(ctx, {1, 0}, {0, 1}), -1);
  EXPECT_EQ(euler_form(ctx, {0, 1}, {1, 0}), 0);
}

TEST(EulerForm, KroneckerMatchesRankTwoExponent) {
  RootContext ctx = root_context(named_quiver("Kronecker"));
  for (long long v1 = 0; v1 <= 3; ++v1)
    for (long long v2 = 0; v2 <= 3; ++v2)
      for (long long e1 = 0; e1 <= v1; ++e1)
        for (long long e2 = 0; e2 <= v2; ++e2)
          EXPECT_EQ(euler_form(ctx, {e1, e2}, {v1 - e1, v2 - e2}), 2 * e1 * (v1 - e1) - 2 * (2 * e1 - e2) * (v2 - e2));
}

TEST(EulerForm, Bilinear) {
  RootContext ctx = root_context(named_quiver("G2"));
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> u(-3, 3);
  for (int t = 0; t < 30; ++t) {
    ExponentVec e{u(rng), u(rng)}, f{u(rng), u(rng)};
    long long direct = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        ExponentVec ai(2, 0), aj(2, 0);
        ai[i] = 1;
        aj[j] = 1;
        direct += e[i] * f[j] * euler_form(ctx, ai, aj);
      }
    EXPECT_EQ(euler_form(ctx, e, f), direct);
  }
}

TEST(Reflect, Involutive) {
  for (const char* name : {"A2", "C2", "G2", "rank4"}) {
    RootContext ctx = root_context(named_quiver(name));
    for (int i = 0; i < ctx.n(); ++i) {
      ExponentVec e(ctx.n());
      for (int j = 0; j < ctx.n(); ++j) e[j] = j + 2 * i - 1;
      EXPECT_EQ(reflect(ctx, i, reflect(ctx, i, e)), e);
    }
  }
}

TEST(Rank2Root, Examples) {
  EXPECT_EQ(rank2_root(1, 1, 0), (ExponentVec{0, 1}));
  EXPECT_EQ(rank2_root(2, 2, 0), (ExponentVec{0, 1}));
  EXPECT_EQ(rank2_root(2, 2, -1), (ExponentVec{1, 2}));
  EXPECT_EQ(rank2_root(2, 2, 3), (ExponentVec{1, 0}));
  EXPECT_THROW(rank2_root(2, 2, 1), ValidationError);
}
