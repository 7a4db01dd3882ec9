#include <gtest/gtest.h>

#include <random>

#include "qcc/errors.hpp"
#include "qcc/verify.hpp"

using namespace qcc;

namespace {

long long count_at(const CountTable& t, const ExponentVec& e) {
  QScalar v = t.at(e);
  return v.is_zero() ? 0 : specialize_integer(v, 1).convert_to<long long>();
}

}  // namespace

TEST(FiniteField, PrimeFieldArithmetic) {
  FiniteField f = gf_make(2, 1);
  EXPECT_EQ(f.add(1, 1), 0u);
  EXPECT_EQ(f.size(), 2u);
  FiniteField g = gf_make(5, 1);
  for (FiniteField::Elem a = 1; a < 5; ++a) EXPECT_EQ(g.mul(a, g.inv(a)), 1u);
}

TEST(FiniteField, F4OrderThree) {
  FiniteField f = gf_make(2, 2);
  EXPECT_EQ(f.size(), 4u);
  for (FiniteField::Elem a = 2; a < 4; ++a) {
    EXPECT_NE(f.mul(a, a), 1u);
    EXPECT_EQ(f.pow(a, 3), 1u);
  }
}

TEST(FiniteField, AxiomsOnSamples) {
  for (auto [p, m] : {std::pair{2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
    FiniteField f = gf_make(p, m);
    EXPECT_TRUE(is_irreducible(p, f.modulus()));
    std::mt19937_64 rng(p * 10 + m);
    std::uniform_int_distribution<FiniteField::Elem> u(0, f.size() - 1);
    for (int t = 0; t < 200; ++t) {
      auto a = u(rng), b = u(rng), c = u(rng);
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a != 0) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      }
    }
  }
}

TEST(Embedding, RingHomomorphism) {
  FiniteField f2 = gf_make(2, 1), f4 = gf_make(2, 2), f16 = gf_make(2, 4);
  EXPECT_EQ(gf_embed(f2, f4, 0), 0u);
  EXPECT_EQ(gf_embed(f2, f4, 1), 1u);
  Embedding e(f4, f16);
  for (FiniteField::Elem a = 0; a < 4; ++a)
    for (FiniteField::Elem b = 0; b < 4; ++b) {
      EXPECT_EQ(e(f4.add(a, b)), f16.add(e(a), e(b)));
      EXPECT_EQ(e(f4.mul(a, b)), f16.mul(e(a), e(b)));
    }
  EXPECT_THROW(Embedding(f4, gf_make(2, 3)), NonDividingDegree);
}

TEST(Subspaces, Counts) {
  EXPECT_EQ(subspaces(gf_make(2, 1), 2, 1).size(), 3u);
  EXPECT_EQ(subspaces(gf_make(2, 2), 3, 1).size(), 21u);
  auto zero = subspaces(gf_make(3, 1), 4, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].dim(), 0);
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(static_cast<long long>(subspaces(gf_make(3, 1), n, k).size()),
                specialize_integer(gauss_binom(n, k), 3).convert_to<long long>());
}

TEST(Enumerate, Simples) {
  for (const char* q : {"A2", "C2", "G2"})
    for (const char* s : {"S1", "S2"}) {
      ValuedRep v = build_example_rep(q, s, 2);
      CountTable t = enumerate_subreps(v);
      EXPECT_EQ(t.entries.size(), 2u) << q << s;
      EXPECT_EQ(count_at(t, ExponentVec(2, 0)), 1);
      EXPECT_EQ(count_at(t, dimension_vector(v)), 1);
    }
}

TEST(Enumerate, A2I1) {
  CountTable t = enumerate_subreps(build_example_rep("A2", "I1", 3));
  EXPECT_EQ(t.entries.size(), 3u);
  EXPECT_EQ(count_at(t, {0, 1}), 1);
  EXPECT_EQ(count_at(t, {1, 0}), 0);
}

TEST(Enumerate, PaperCounts) {
  EXPECT_EQ(count_at(enumerate_subreps(build_example_rep("C2", "I2", 2)), {1, 1}), 3);
  EXPECT_EQ(count_at(enumerate_subreps(build_example_rep("G2", "I4", 2)), {0, 1}), 9);
  EXPECT_EQ(count_at(enumerate_subreps(build_example_rep("G2", "I2", 2)), {1, 1}), 3);
  CountTable p0 = enumerate_subreps(build_example_rep("Kronecker", "P0", 2));
  EXPECT_EQ(p0.entries.size(), 2u);
  EXPECT_EQ(count_at(p0, {0, 1}), 1);
}

TEST(Enumerate, MatchesReference) {
  for (const char* q : {"A2", "C2", "G2"})
    for (const auto& name : example_rep_names(q))
      for (int p : {2, 3}) {
        ValuedRep v = build_example_rep(q, name, p);
        EXPECT_EQ(enumerate_subreps(v), enumerate_subreps_reference(v)) << q << " " << name << " " << p;
      }
  for (const char* name : {"P1", "I1", "P2", "I2"}) {
    ValuedRep v = build_example_rep("Kronecker", name, 2);
    EXPECT_EQ(enumerate_subreps(v), enumerate_subreps_reference(v)) << name;
  }
}

TEST(Enumerate, BoundaryEntries) {
  for (const char* q : {"A2", "C2", "G2"})
    for (const auto& name : example_rep_names(q)) {
      ValuedRep v = build_example_rep(q, name, 3);
      CountTable t = enumerate_subreps(v);
      EXPECT_EQ(count_at(t, ExponentVec(2, 0)), 1);
      EXPECT_EQ(count_at(t, dimension_vector(v)), 1);
      for (const auto& [e, c] : t.entries)
        for (size_t i = 0; i < e.size(); ++i) EXPECT_LE(e[i], t.dims[i]);
    }
}

TEST(Enumerate, SingleVertexGrassmannian) {
  for (long long d : {1, 2}) {
    ValuedRep v;
    v.quiver = ValuedQuiver(IntMatrix(1, 1), {d});
    v.p = 2;
    v.dims = {3};
    CountTable t = enumerate_subreps(v);
    for (long long k = 0; k <= 3; ++k)
      EXPECT_EQ(count_at(t, {k}), specialize_integer(gauss_binom(3, k, d), 2).convert_to<long long>()) << d << " " << k;
  }
}

TEST(Enumerate, BudgetExceeded) {
  ValuedRep v = build_example_rep("Kronecker", "P3", 2);
  EXPECT_THROW(enumerate_subreps(v, 10), BudgetExceeded);
  EXPECT_GT(enumeration_estimate(v), 10);
}

TEST(Enumerate, KroneckerDuality) {
  for (int n = 0; n <= 2; ++n) {
    ValuedRep p = build_example_rep("Kronecker", "P" + std::to_string(n), 2);
    CountTable a = enumerate_subreps(p), b = enumerate_subreps(dual_rep(p));
    ExponentVec dims = dimension_vector(p);
    for (const auto& e : box_vectors(dims)) EXPECT_EQ(count_at(a, e), count_at(b, {dims[0] - e[0], dims[1] - e[1]}));
  }
}

TEST(KroneckerCount, Examples) {
  EXPECT_EQ(kronecker_count(KroneckerKind::P, 1, 0, 1), QScalar::q_power(2) + 1);
  EXPECT_EQ(kronecker_count(KroneckerKind::I, 1, 1, 1), QScalar::q_power(2) + 1);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(kronecker_count(KroneckerKind::P, n, 0, 0), QScalar(1));
    EXPECT_EQ(kronecker_count(KroneckerKind::I, n, n + 1, n), QScalar(1));
  }
  EXPECT_TRUE(kronecker_count(KroneckerKind::P, 1, 1, 0).is_zero());
}

TEST(KroneckerCount, MatchesEnumeration) {
  RootContext ctx = root_context(named_quiver("Kronecker"));
  for (int n = 0; n <= 2; ++n)
    for (auto kind : {KroneckerKind::P, KroneckerKind::I}) {
      std::string name = (kind == KroneckerKind::P ? "P" : "I") + std::to_string(n);
      CountTable e = enumerate_subreps(build_example_rep("Kronecker", name, 2));
      EXPECT_EQ(e, specialize_table(kronecker_table(kind, n), ctx, 2)) << name;
    }
}

TEST(Recursion, BaseCase) {
  for (const char* q : {"A2", "G2", "rank4"}) {
    ValuedQuiver Q = named_quiver(q);
    for (int k = 0; k < Q.n; ++k) {
      CountTable t = recursion_counts(Q, {k});
      EXPECT_EQ(t.entries.size(), 2u);
      ExponentVec a(Q.n, 0);
      a[k] = 1;
      EXPECT_EQ(t.at(a), QScalar(1));
    }
  }
}

TEST(Recursion, RankFourExamples) {
  ValuedQuiver q = named_quiver("rank4");
  CountTable t = recursion_counts(q, {1, 2});
  EXPECT_EQ(t.at({0, 1, 1, 0}), QScalar::q_power(1, 2) + QScalar::q_power(-1, 2));
  EXPECT_EQ(t.dims, (ExponentVec{0, 2, 1, 0}));
  CountTable u = recursion_counts(q, {1, 2, 3});
  EXPECT_EQ(u.dims, (ExponentVec{0, 4, 2, 1}));
  EXPECT_EQ(u.entries.size(), golden().rank4.back().rows.size());
  CountTable poly = polynomial_from_normalized(u, root_context(q));
  EXPECT_EQ(poly.at({0, 4, 2, 1}), QScalar(1));
  EXPECT_EQ(poly.at({0, 1, 1, 1}), parse_qscalar("1 + 2*q + q^2"));
  EXPECT_THROW(recursion_counts(q, {1, 2, 3, 0}), NotAdmissible);
}

TEST(Recursion, MatchesEnumerationOnExamples) {
  for (const auto& g : golden().rank2) {
    ValuedQuiver q = named_quiver(g.quiver);
    RootContext ctx = root_context(q);
    for (const auto& r : g.reps) {
      const GoldenVariable& v = g.variable(r.variable);
      CountTable rec = polynomial_from_normalized(recursion_counts(q, zero_based(v.seq)), ctx);
      EXPECT_EQ(rec, golden_counts(q, r)) << g.quiver << " " << r.rep;
      for (int p : {2, 3})
        EXPECT_EQ(specialize_table(rec, ctx, p), enumerate_subreps(build_example_rep(g.quiver, r.rep, p)))
            << g.quiver << " " << r.rep << " " << p;
    }
  }
}

TEST(Recursion, KroneckerReproducesClosedForms) {
  ValuedQuiver q = named_quiver("Kronecker");
  RootContext ctx = root_context(q);
  auto sequence_for = [&](const ExponentVec& dims) {
    for (int len = 1; len <= 12; ++len)
      for (int first : {0, 1}) {
        std::vector<int> seq;
        for (int s = 0; s < len; ++s) seq.push_back((first + s) % 2);
        if (is_admissible(q, seq) && reflected_dims(q, seq) == dims) return seq;
      }
    return std::vector<int>{};
  };
  for (int n = 0; n <= 4; ++n)
    for (auto kind : {KroneckerKind::P, KroneckerKind::I}) {
      CountTable k = kronecker_table(kind, n);
      std::vector<int> seq = sequence_for(k.dims);
      ASSERT_FALSE(seq.empty()) << n;
      EXPECT_EQ(polynomial_from_normalized(recursion_counts(q, seq), ctx), k) << n;
    }
}

TEST(CountTable, NormalizationRoundTrip) {
  ValuedQuiver q = named_quiver("G2");
  RootContext ctx = root_context(q);
  CountTable a = recursion_counts(q, {0, 1, 0, 1});
  EXPECT_EQ(normalized_from_polynomial(polynomial_from_normalized(a, ctx), ctx), a);
}

TEST(CountTable, BoxVectorsAscending) {
  auto b = box_vectors({1, 2});
  ASSERT_EQ(b.size(), 6u);
  EXPECT_EQ(b.front(), (ExponentVec{0, 0}));
  EXPECT_EQ(b.back(), (ExponentVec{1, 2}));
  EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
}

TEST(ReflectedDims, Examples) {
  EXPECT_EQ(reflected_dims(named_quiver("rank4"), {1, 2, 3}), (ExponentVec{0, 4, 2, 1}));
  EXPECT_EQ(reflected_dims(named_quiver("A2"), {1, 0}), (ExponentVec{1, 1}));
}
