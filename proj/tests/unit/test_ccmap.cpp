#include <gtest/gtest.h>

#include "qcc/errors.hpp"
#include "qcc/render.hpp"
#include "qcc/verify.hpp"

using namespace qcc;

namespace {

CountTable table(int n, std::initializer_list<std::pair<ExponentVec, QScalar>> rows) {
  CountTable t;
  t.dims = ExponentVec(n, 0);
  for (const auto& [e, c] : rows) {
    t.set(e, c);
    for (int i = 0; i < n; ++i) t.dims[i] = std::max(t.dims[i], e[i]);
  }
  return t;
}

TorusElement golden_var(const std::string& quiver, const std::string& name, const FormPtr& f) {
  return golden_element(f, golden().quiver(quiver).variable(name).expansion);
}

}  // namespace

TEST(CCExponent, ZeroTerm) {
  RootContext ctx = root_context(named_quiver("A2"));
  EXPECT_EQ(cc_exponent(ctx, {0, 0}, {1, 0}), (ExponentVec{-1, 0}));
  EXPECT_EQ(cc_exponent(ctx, {1, 0}, {1, 0}), (ExponentVec{-1, 1}));
}

TEST(CCExpand, A2S1) {
  CCInput in = cc_input(named_quiver("A2"), table(2, {{{0, 0}, 1}, {{1, 0}, 1}}));
  TorusElement x = cc_expand(in);
  EXPECT_EQ(to_text(x), "X^(-1,1) + X^(-1,0)");
  EXPECT_EQ(x, golden_var("A2", "X3", in.form));
}

TEST(CCExpand, G2I4) {
  ValuedQuiver q = named_quiver("G2");
  CCInput in = cc_input(q, recursion_counts(q, {0, 1, 0, 1}));
  TorusElement x = cc_expand(in);
  EXPECT_EQ(x.size(), 7u);
  EXPECT_EQ(x, golden_var("G2", "X6", in.form));
  EXPECT_EQ(x.coefficient({0, -2}), QScalar::q_power(3, 2) + QScalar::q_power(-3, 2));
}

TEST(CCExpand, RankFourI2) {
  ValuedQuiver q = named_quiver("rank4");
  CCInput in = cc_input(q, recursion_counts(q, {1, 2, 3}));
  TorusElement x = cc_expand(in);
  EXPECT_EQ(x.coefficient({4, -4, 2, 3}), QScalar::q_power(2) + QScalar::q_power(1) + 2 + QScalar::q_power(-1) +
                                                QScalar::q_power(-2));
  EXPECT_EQ(x, variable_by_label(q, 3, {1, 2, 3}));
}

TEST(CCExpand, PolynomialAndNormalizedAgree) {
  ValuedQuiver q = named_quiver("C2");
  RootContext ctx = root_context(q);
  CountTable a = recursion_counts(q, {0, 1, 0});
  EXPECT_EQ(cc_expand(cc_input(q, a)), cc_expand(cc_input(q, polynomial_from_normalized(a, ctx))));
}

TEST(CCExpand, EveryGoldenRepresentation) {
  for (const auto& g : golden().rank2) {
    ValuedQuiver q = named_quiver(g.quiver);
    for (const auto& r : g.reps) {
      CCInput in = cc_input(q, golden_counts(q, r));
      TorusElement want = golden_var(g.quiver, r.variable, in.form);
      EXPECT_EQ(cc_expand(in), want) << g.quiver << " " << r.rep;
      EXPECT_EQ(cc_expand_rank2(q.B(0, 1), -q.B(1, 0), in.counts).map_exponents(in.form, [](const ExponentVec& a) {
        return a;
      }),
                want)
          << g.quiver << " " << r.rep;
      for (int p : {2, 3}) {
        CCInput spec = cc_input(q, enumerate_subreps(build_example_rep(g.quiver, r.rep, p)));
        EXPECT_EQ(cc_expand_specialized(spec), SpecializedElement::of(want, p)) << g.quiver << " " << r.rep << " " << p;
      }
    }
  }
}

TEST(CCExpandRank2, KroneckerP0) {
  TorusElement x = cc_expand_rank2(2, 2, table(2, {{{0, 0}, 1}, {{0, 1}, 1}}));
  EXPECT_EQ(to_text(x), "X^(2,-1) + X^(0,-1)");
  EXPECT_EQ(x, kronecker_closed_form(0, true).map_exponents(x.form(), [](const ExponentVec& a) { return a; }));
}

TEST(CCExpandRank2, C2S2) {
  TorusElement x = cc_expand_rank2(2, 1, table(2, {{{0, 0}, 1}, {{0, 1}, 1}}));
  EXPECT_EQ(to_text(x), "X^(2,-1) + X^(0,-1)");
}

TEST(KroneckerClosedForm, TermCounts) {
  for (long long n = 0; n <= 5; ++n) {
    size_t pairs = 0;
    for (long long p = 0; p <= n; ++p)
      for (long long r = 0; p + r <= n; ++r) ++pairs;
    EXPECT_EQ(kronecker_closed_form(n, true).size(), 1 + pairs) << n;
    EXPECT_EQ(kronecker_closed_form(n, false).size(), 1 + pairs) << n;
  }
}

TEST(KroneckerClosedForm, MatchesMutation) {
  ValuedQuiver q = named_quiver("Kronecker");
  for (long long n = 0; n <= 4; ++n) {
    std::vector<int> neg, pos;
    for (long long s = 0; s <= n; ++s) {
      neg.push_back(s % 2 == 0 ? 1 : 0);
      pos.push_back(s % 2 == 0 ? 0 : 1);
    }
    TorusElement xn = variable_by_label(q, neg.back(), neg);
    TorusElement xp = variable_by_label(q, pos.back(), pos);
    auto closed = [](long long m, bool negative, const TorusElement& like) {
      return kronecker_closed_form(m, negative).map_exponents(like.form(), [](const ExponentVec& a) { return a; });
    };
    EXPECT_EQ(closed(n, true, xn), xn) << n;
    EXPECT_EQ(closed(n, false, xp), xp) << n;
  }
}

TEST(KroneckerClosedForm, ClassicalLimitCoefficients) {
  TorusElement x = kronecker_closed_form(1, true);
  for (const auto& [a, c] : x.terms()) {
    BigInt v = specialize_integer(c, 1);
    EXPECT_GT(v, 0);
  }
}

TEST(FFactor, A2S1) {
  CCInput in = cc_input(named_quiver("A2"), table(2, {{{0, 0}, 1}, {{1, 0}, 1}}));
  FFactor f = f_factor(in);
  EXPECT_EQ(f.g, (ExponentVec{-1, 0}));
  ASSERT_EQ(f.F.size(), 2u);
  EXPECT_EQ(f.F.at({0, 0}), QScalar(1));
  EXPECT_EQ(f.F.at({1, 0}), QScalar::q_power(1, 2));
  EXPECT_TRUE(ffactor_positive(f));
}

TEST(FFactor, RecombineAndCheck) {
  for (const auto& g : golden().rank2) {
    ValuedQuiver q = named_quiver(g.quiver);
    for (const auto& r : g.reps) {
      CCInput in = cc_input(q, golden_counts(q, r));
      FFactor f = f_factor(in);
      TorusElement x = cc_expand(in);
      EXPECT_EQ(f.F.at(ExponentVec(2, 0)), QScalar(1));
      EXPECT_TRUE(ffactor_positive(f)) << g.quiver << " " << r.rep;
      EXPECT_EQ(recombine(f, q.B, in.form), x);
      FFactor back = b_compatible_check(x, q.B, f.g);
      EXPECT_EQ(back.F, f.F);
    }
  }
}

TEST(FFactor, NotBCompatible) {
  ValuedQuiver q = named_quiver("Kronecker");
  FormPtr f = make_form(lambda_from_B(q));
  TorusElement x = parse_element(f, "X^(0,0) + X^(1,0)");
  EXPECT_THROW(b_compatible_check(x, q.B, {0, 0}), NotBCompatible);
}

TEST(VerifyMutation, A2SourceStep) {
  ValuedQuiver q = named_quiver("A2");
  ASSERT_TRUE(is_source(q.B, 0));
  ValuedQuiver mq(matrix_mutation(q.B, 0), q.D);
  CountTable n = recursion_counts(q, {1});
  CountTable s = recursion_counts(mq, {0, 1});
  EXPECT_EQ(s.dims, (ExponentVec{1, 1}));
  EXPECT_TRUE(cc_verify_mutation(q, 0, n, s));
  EXPECT_FALSE(cc_verify_mutation(q, 0, n, recursion_counts(mq, {1})));
}

TEST(VerifyMutation, KroneckerPreprojectives) {
  ValuedQuiver q = named_quiver("Kronecker");
  int i = is_source(q.B, 0) ? 0 : 1;
  ValuedQuiver mq(matrix_mutation(q.B, i), q.D);
  std::vector<int> seq{1 - i};
  for (int n = 0; n <= 3; ++n) {
    std::vector<int> ext{i};
    ext.insert(ext.end(), seq.begin(), seq.end());
    if (!is_admissible(q, seq) || !is_admissible(mq, ext)) break;
    EXPECT_TRUE(cc_verify_mutation(q, i, recursion_counts(q, seq), recursion_counts(mq, ext))) << n;
    seq.insert(seq.begin(), {1 - i, i});
  }
}
