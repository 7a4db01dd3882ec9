#include <gtest/gtest.h>

#include <random>

#include "qcc/errors.hpp"
#include "qcc/render.hpp"
#include "qcc/verify.hpp"

using namespace qcc;

TEST(QScalarJson, RoundTrip) {
  for (const QScalar& s : {QScalar(0), QScalar(5), QScalar::q_power(1, 2) + QScalar::q_power(-1, 2),
                           QScalar::q_power(-3, 4, 7) + 2, qbinom_sym(4, 2)}) {
    Json j = qscalar_to_json(s);
    EXPECT_EQ(qscalar_from_json(j), s);
    EXPECT_EQ(qscalar_from_json(Json::parse(j.dump())), s);
  }
}

TEST(QScalarJson, Shape) {
  Json j = qscalar_to_json(QScalar::q_power(1, 2) + QScalar::q_power(-1, 2));
  EXPECT_EQ(j["d"], 1);
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["hp"], -1);
  EXPECT_EQ(j["terms"][0]["c"], "1");
}

TEST(TorusJson, GoldenRoundTrip) {
  for (const auto& g : golden().rank2) {
    FormPtr f = make_form(lambda_from_B(named_quiver(g.quiver)));
    for (const auto& v : g.variables) {
      TorusElement x = golden_element(f, v.expansion);
      EXPECT_EQ(torus_from_json(f, Json::parse(torus_to_json(x).dump())), x);
      EXPECT_EQ(parse_element(f, to_text(x)), x);
    }
  }
}

TEST(SeedJson, Names) {
  for (const char* name : {"A2", "C2", "G2", "Kronecker", "rank4"}) {
    SeedSpec s = seed_from_json(Json(name));
    EXPECT_EQ(s.quiver, named_quiver(name));
    EXPECT_TRUE(is_compatible(s.pair));
    SeedSpec t = seed_from_json(seed_to_json(s.quiver));
    EXPECT_EQ(t.quiver, s.quiver);
  }
  EXPECT_THROW(seed_from_json(Json("E8")), ValidationError);
}

TEST(SeedJson, ExplicitLambdaAndPrincipal) {
  Json j = {{"n", 2}, {"B", {{0, 1}, {-1, 0}}}, {"D", {1, 1}}, {"lambda", {{{0, 1}, {1, 1}}, {{-1, 1}, {0, 1}}}}};
  EXPECT_TRUE(is_compatible(seed_from_json(j).pair));
  j["lambda"] = {{{0, 1}, {2, 1}}, {{-2, 1}, {0, 1}}};
  EXPECT_THROW(seed_from_json(j), ValidationError);
  Json p = {{"n", 3}, {"B", {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}}, {"D", {1, 1, 1}}, {"coeffs", "principal"}};
  SeedSpec s = seed_from_json(p);
  EXPECT_EQ(s.pair.B.rows(), 6);
  EXPECT_EQ(s.pair.mutable_n, 3);
}

TEST(SeedJson, RejectsBadInput) {
  EXPECT_THROW(seed_from_json(Json{{"n", 2}, {"B", {{0, 1}, {-1, 0}}}, {"D", {1, 1}}, {"extra", 1}}), ValidationError);
  EXPECT_THROW(seed_from_json(Json{{"n", 2}, {"B", {{0, 1}, {-2, 0}}}, {"D", {1, 1}}}), ValidationError);
  EXPECT_THROW(seed_from_json(Json{{"n", 2}, {"D", {1, 1}}}), ValidationError);
  EXPECT_THROW(seed_from_json(Json{{"n", "two"}, {"B", {{0, 1}, {-1, 0}}}, {"D", {1, 1}}}), ValidationError);
}

TEST(RepJson, RoundTripExamples) {
  for (const char* q : {"A2", "C2", "G2", "Kronecker"})
    for (const auto& name : example_rep_names(q))
      for (int p : {2, 3}) {
        ValuedRep v = build_example_rep(q, name, p);
        ValuedRep w = rep_from_json(Json::parse(rep_to_json(v).dump()));
        EXPECT_EQ(rep_to_json(w), rep_to_json(v)) << q << " " << name;
        EXPECT_EQ(enumerate_subreps(w), enumerate_subreps(v)) << q << " " << name;
      }
}

TEST(RepJson, RejectsBadInput) {
  Json j = rep_to_json(build_example_rep("A2", "I1", 2));
  Json bad = j;
  bad["arrows"][0]["from"] = 0;
  EXPECT_THROW(rep_from_json(bad), ValidationError);
  bad = j;
  bad["colour"] = "red";
  EXPECT_THROW(rep_from_json(bad), ValidationError);
  bad = j;
  bad["field"]["p"] = 4;
  EXPECT_THROW(rep_from_json(bad), ValidationError);
  bad = j;
  bad["dims"] = {2, 1};
  EXPECT_THROW(rep_from_json(bad), ValidationError);
}

TEST(TableJson, RoundTrip) {
  ValuedQuiver q = named_quiver("G2");
  RootContext ctx = root_context(q);
  CountTable a = recursion_counts(q, {0, 1, 0, 1});
  for (const CountTable& t : {a, polynomial_from_normalized(a, ctx), specialize_table(a, ctx, 3),
                              enumerate_subreps(build_example_rep("G2", "I4", 2))}) {
    Json j = table_to_json(t);
    EXPECT_EQ(table_from_json(Json::parse(j.dump())), t);
  }
  Json j = table_to_json(a);
  ASSERT_GE(j["entries"].size(), 2u);
  EXPECT_LT(j["entries"][0]["e"].get<ExponentVec>(), j["entries"][1]["e"].get<ExponentVec>());
}

TEST(TriangulationJson, RoundTrip) {
  std::mt19937_64 rng(14);
  for (int n = 1; n <= 6; ++n) {
    Triangulation t = Triangulation::random(n, rng);
    EXPECT_EQ(triangulation_from_json(Json::parse(triangulation_to_json(t).dump())), t);
  }
  EXPECT_THROW(triangulation_from_json(Json{{"n", 2}, {"diagonals", {{1, 3}, {2, 4}}}}), ValidationError);
}

TEST(ReportJson, Shape) {
  Report r = run_checks("properties", suite_checks("properties"), 0);
  Json j = report_to_json(r);
  EXPECT_EQ(j["suite"], "properties");
  EXPECT_TRUE(j["checks"].empty());
  EXPECT_EQ(j["pass"], true);
  EXPECT_TRUE(r.all_pass());
}

TEST(LoadJsonFile, MissingFile) { EXPECT_THROW(load_json_file("/nonexistent/seed.json"), ValidationError); }
