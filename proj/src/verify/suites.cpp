#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "qcc/errors.hpp"
#include "qcc/render.hpp"
#include "qcc/verify.hpp"

namespace qcc {

namespace {

struct Tally {
  int checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures.size() < 8) failures.push_back(what);
    if (!ok && failures.size() == 8) failures.push_back("...");
  }
  CheckResult result(const std::string& name) const {
    CheckResult r{name, failures.empty(), {}, 0};
    std::ostringstream os;
    os << checked << " comparisons";
    for (const auto& f : failures) os << "; FAIL " << f;
    r.detail = os.str();
    return r;
  }
};

std::string seq_text(const std::vector<int>& seq) {
  std::string s;
  for (int k : seq) s += (s.empty() ? "" : ",") + std::to_string(k + 1);
  return "(" + s + ")";
}

TorusElement mutation_variable(const ValuedQuiver& q, const std::vector<int>& seq0) {
  return variable_by_label(q, seq0.back(), seq0);
}

TorusElement golden_variable(const ValuedQuiver& q, const GoldenVariable& v) {
  TorusElement x = mutation_variable(q, zero_based(v.seq));
  return golden_element(x.form(), v.expansion);
}

long long total(const ExponentVec& v) {
  long long s = 0;
  for (auto x : v) s += x;
  return s;
}

// All sequences over 0..n-1 of length 1..max_len without equal neighbours.
std::vector<std::vector<int>> sequences(int n, int max_len) {
  std::vector<std::vector<int>> out, frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier)
      for (int k = 0; k < n; ++k)
        if (s.empty() || s.back() != k) {
          auto t = s;
          t.push_back(k);
          next.push_back(t);
        }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

CheckResult golden_rank2(const std::string& quiver) {
  Tally t;
  const ValuedQuiver q = named_quiver(quiver);
  for (const auto& v : golden().quiver(quiver).variables) {
    TorusElement x = mutation_variable(q, zero_based(v.seq));
    TorusElement g = golden_element(x.form(), v.expansion);
    t.expect(x == g, v.name + ": got " + to_text(x));
  }
  return t.result("golden " + quiver + " table");
}

double rank2_enumeration_cost() {
  double c = 0;
  for (const char* name : {"A2", "C2", "G2"})
    for (const auto& r : golden().quiver(name).reps)
      for (int p : {2, 3}) c += enumeration_estimate(build_example_rep(name, r.rep, p));
  return c;
}

CheckResult cc_equals_mutation() {
  Tally t;
  for (const char* name : {"A2", "C2", "G2"}) {
    const ValuedQuiver q = named_quiver(name);
    const RootContext ctx = root_context(q);
    const auto& gq = golden().quiver(name);
    for (const auto& r : gq.reps) {
      const GoldenVariable& v = gq.variable(r.variable);
      const TorusElement x = golden_variable(q, v);
      const std::string tag = std::string(name) + " " + r.rep;
      for (int p : {2, 3}) {
        CountTable counts = enumerate_subreps(build_example_rep(name, r.rep, p));
        t.expect(counts == specialize_table(golden_counts(q, r), ctx, p), tag + " counts over F" + std::to_string(p));
        t.expect(cc_expand_specialized(cc_input(q, counts)) == SpecializedElement::of(x, p),
                 tag + " at q = " + std::to_string(p));
      }
      CountTable rec = recursion_counts(q, zero_based(v.seq));
      t.expect(polynomial_from_normalized(rec, ctx) == golden_counts(q, r), tag + " recursion counts");
      t.expect(cc_expand(cc_input(q, rec)) == x, tag + " symbolic");
      t.expect(cc_expand_rank2(q.B(0, 1), -q.B(1, 0), rec).with_form(x.form()) == x, tag + " rank-2 formula");
    }
  }
  return t.result("CC map equals mutation on finite-type indecomposables");
}

CheckResult rank4_tables() {
  Tally t;
  const ValuedQuiver q = named_quiver("rank4");
  const RootContext ctx = root_context(q);
  for (const auto& g : golden().rank4) {
    const auto seq = zero_based(g.seq);
    CountTable a = recursion_counts(q, seq);
    CountTable poly = polynomial_from_normalized(a, ctx);
    if (!g.rows.empty()) {
      t.expect(poly.entries.size() == g.rows.size(), g.name + " number of rows");
      for (const auto& row : g.rows) {
        ExponentVec rest(row.e.size());
        for (size_t i = 0; i < rest.size(); ++i) rest[i] = a.dims[i] - row.e[i];
        t.expect(euler_form(ctx, row.e, rest) == row.d, g.name + " d_e at " + monomial_text(row.e));
        t.expect(poly.at(row.e) == parse_qscalar(row.gr), g.name + " |Gr| at " + monomial_text(row.e));
        t.expect(cc_exponent(ctx, row.e, a.dims) == row.exp, g.name + " exponent at " + monomial_text(row.e));
      }
    }
    TorusElement x = cc_expand(cc_input(q, a));
    TorusElement m = mutation_variable(q, seq);
    t.expect(x == golden_element(x.form(), g.expansion), g.name + " CC expansion " + to_text(x));
    t.expect(m == x.with_form(m.form()), g.name + " mutation engine");
  }
  return t.result("rank-4 reflection tables");
}

CheckResult kronecker_closed_forms() {
  Tally t;
  const ValuedQuiver q = named_quiver("Kronecker");
  for (long long n = 0; n <= 6; ++n) {
    std::vector<int> neg, pos;
    for (long long k = 0; k <= n; ++k) {
      neg.push_back(k % 2 == 0 ? 1 : 0);
      pos.push_back(k % 2 == 0 ? 0 : 1);
    }
    TorusElement xn = mutation_variable(q, neg);
    TorusElement xp = mutation_variable(q, pos);
    t.expect(kronecker_closed_form(n, true).with_form(xn.form()) == xn, "X_(-" + std::to_string(n) + ")");
    t.expect(kronecker_closed_form(n, false).with_form(xp.form()) == xp, "X_(" + std::to_string(n + 3) + ")");
  }
  return t.result("Kronecker closed forms");
}

double kronecker_enumeration_cost() {
  double c = 0;
  for (const char* k : {"P", "I"})
    for (int n = 0; n <= 3; ++n) c += enumeration_estimate(build_example_rep("Kronecker", k + std::to_string(n), 2));
  return c;
}

CheckResult kronecker_counts() {
  Tally t;
  const ValuedQuiver q = named_quiver("Kronecker");
  const RootContext ctx = root_context(q);
  for (auto kind : {KroneckerKind::P, KroneckerKind::I})
    for (int n = 0; n <= 3; ++n) {
      std::string name = (kind == KroneckerKind::P ? "P" : "I") + std::to_string(n);
      CountTable e = enumerate_subreps(build_example_rep("Kronecker", name, 2));
      t.expect(e == specialize_table(kronecker_table(kind, n), ctx, 2), name);
    }
  return t.result("Kronecker Grassmannian counts");
}

CheckResult reflection_theorem() {
  Tally t;
  struct Case {
    const char* quiver;
    int max_len;
    long long max_dim;
  };
  for (const Case& c : {Case{"A2", 6, 100}, Case{"C2", 6, 100}, Case{"G2", 8, 100}, Case{"Kronecker", 5, 8},
                        Case{"rank4", 3, 12}}) {
    const ValuedQuiver q = named_quiver(c.quiver);
    for (int i = 0; i < q.n; ++i) {
      if (!is_sink(q.B, i) && !is_source(q.B, i)) continue;
      const ValuedQuiver mq(matrix_mutation(q.B, i), q.D);
      for (const auto& seq : sequences(q.n, c.max_len)) {
        CountTable n, s;
        try {
          if (seq[0] == i) {
            if (seq.size() < 2) continue;
            n = recursion_counts(q, seq);
            s = recursion_counts(mq, std::vector<int>(seq.begin() + 1, seq.end()));
          } else {
            n = recursion_counts(q, seq);
            std::vector<int> ext{i};
            ext.insert(ext.end(), seq.begin(), seq.end());
            s = recursion_counts(mq, ext);
          }
        } catch (const NotAdmissible&) {
          continue;
        }
        if (total(n.dims) > c.max_dim || total(s.dims) > c.max_dim) continue;
        t.expect(cc_verify_mutation(q, i, n, s), std::string(c.quiver) + " i=" + std::to_string(i + 1) + " N from " +
                                                     seq_text(seq));
      }
    }
  }
  return t.result("reflection commutes with mutation");
}

// Dynkin diagrams of rank 2..4 with valuations; edges (i, j) joined with d_i |b_ij| = lcm(d_i, d_j).
struct Diagram {
  std::vector<long long> D;
  std::vector<std::pair<int, int>> edges;
};

const std::vector<Diagram>& diagrams() {
  static const std::vector<Diagram> all = {
      {{1, 1}, {{0, 1}}},                                // A2
      {{1, 2}, {{0, 1}}},                                // C2
      {{1, 3}, {{0, 1}}},                                // G2
      {{1, 1, 1}, {{0, 1}, {1, 2}}},                     // A3
      {{2, 2, 1}, {{0, 1}, {1, 2}}},                     // B3
      {{1, 1, 2}, {{0, 1}, {1, 2}}},                     // C3
      {{1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}}},          // A4
      {{2, 2, 2, 1}, {{0, 1}, {1, 2}, {2, 3}}},          // B4
      {{1, 1, 1, 2}, {{0, 1}, {1, 2}, {2, 3}}},          // C4
      {{1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}}},          // D4
      {{2, 2, 1, 1}, {{0, 1}, {1, 2}, {2, 3}}},          // F4
      {{1, 1, 1, 2}, {{0, 1}, {2, 3}}},                  // A2 x C2
  };
  return all;
}

// Randomly oriented and relabeled finite-type valued quiver.
ValuedQuiver random_quiver(std::mt19937_64& rng) {
  const Diagram& g = diagrams()[std::uniform_int_distribution<size_t>(0, diagrams().size() - 1)(rng)];
  const int n = static_cast<int>(g.D.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<long long> D(n);
  for (int i = 0; i < n; ++i) D[perm[i]] = g.D[i];
  IntMatrix B(n, n);
  std::bernoulli_distribution flip_edge(0.5);
  for (auto [a, b] : g.edges) {
    int i = perm[a], j = perm[b];
    if (flip_edge(rng)) std::swap(i, j);
    long long s = lcm_ll(D[i], D[j]);
    B(i, j) = s / D[i];
    B(j, i) = -s / D[j];
  }
  return ValuedQuiver(B, D);
}

CheckResult laurent_property() {
  Tally t;
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 100; ++trial) {
    const ValuedQuiver q = random_quiver(rng);
    const CompatiblePair p = compatible_pair(q);
    std::uniform_int_distribution<int> len(1, 8), dir(0, p.mutable_n - 1);
    std::vector<int> seq;
    for (int l = len(rng); static_cast<int>(seq.size()) < l;) seq.push_back(dir(rng));
    const std::string tag = "B=" + q.B.to_string() + " seq " + seq_text(seq);
    try {
      QuantumSeed s = initial_seed(p);
      bool ok = true;
      for (int k : seq) {
        s = mutate_seed(s, k);
        ok = ok && check_commutation(s);
      }
      t.expect(ok, tag + " commutation");
    } catch (const NonExactDivision& e) {
      t.expect(false, tag + " " + e.what());
    }
  }
  return t.result("Laurent phenomenon on random seeds");
}

CheckResult ffactor_suite() {
  Tally t;
  for (const char* name : {"A2", "C2", "G2"}) {
    const ValuedQuiver q = named_quiver(name);
    const auto& gq = golden().quiver(name);
    for (const auto& r : gq.reps) {
      const std::string tag = std::string(name) + " " + r.rep;
      CCInput in = cc_input(q, recursion_counts(q, zero_based(gq.variable(r.variable).seq)));
      TorusElement x = cc_expand(in);
      FFactor f = f_factor(in);
      t.expect(recombine(f, q.B, in.form) == x, tag + " recombination");
      t.expect(ffactor_positive(f), tag + " positivity");
      FFactor back = b_compatible_check(x, q.B, f.g);
      t.expect(back.F == f.F, tag + " factorization");
    }
  }
  return t.result("F-factors recombine and are positive");
}

CheckResult tpath_theorem() {
  Tally t;
  for (int n : {2, 3}) {
    const Triangulation fan = Triangulation::fan(n);
    const ValuedQuiver q(b_from_triangulation(fan), std::vector<long long>(n, 1));
    const FormPtr base = diagonal_form(fan);
    for (int a = 0; a < fan.vertices(); ++a)
      for (int b = a + 2; b < fan.vertices(); ++b) {
        if (adjacent(fan.vertices(), a, b)) continue;
        const std::string tag = "n=" + std::to_string(n) + " D(" + std::to_string(a) + "," + std::to_string(b) + ")";
        for (const auto& p : enumerate_tpaths(fan, a, b)) t.expect(is_tpath(fan, a, b, p), tag + " path validity");
        auto [seq, label] = flip_sequence_to(fan, a, b);
        TorusElement x = seq.empty() ? TorusElement::generator(compatible_pair(q).lambda, label)
                                     : variable_by_label(q, label, seq);
        if (x.rank() != n) x = project_frozen(x, base);
        TorusElement y = tpath_expand(fan, a, b, Frozen::One);
        t.expect(x.with_form(base) == y, tag + " got " + to_text(y));
      }
  }
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> rank(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rank(rng);
    Triangulation tr = Triangulation::random(n, rng);
    int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
    t.expect(b_from_triangulation(flip(tr, k)) == matrix_mutation(b_from_triangulation(tr), k),
             "flip " + std::to_string(k) + " of random n=" + std::to_string(n));
  }
  return t.result("T-path expansions and flips");
}

CheckResult theorem_property() {
  Tally t;
  struct Case {
    const char* quiver;
    int max_len;
  };
  for (const Case& c : {Case{"A2", 5}, Case{"C2", 5}, Case{"G2", 5}, Case{"rank4", 4}}) {
    const ValuedQuiver q = named_quiver(c.quiver);
    for (const auto& seq : sequences(q.n, c.max_len)) {
      CountTable a;
      try {
        a = recursion_counts(q, seq);
      } catch (const NotAdmissible&) {
        continue;
      }
      if (total(a.dims) > 24) continue;
      TorusElement x = cc_expand(cc_input(q, a));
      t.expect(mutation_variable(q, seq).with_form(x.form()) == x, std::string(c.quiver) + " " + seq_text(seq));
    }
  }
  return t.result("cluster variables of reflected simples");
}

CheckResult finite_type_coverage() {
  Tally t;
  for (const char* name : {"A2", "C2", "G2"}) {
    const ValuedQuiver q = named_quiver(name);
    const auto& gq = golden().quiver(name);
    std::set<std::string> found, cc;
    QuantumSeed init = initial_seed(compatible_pair(q));
    std::set<std::string> initial{to_text(init.vars[0]), to_text(init.vars[1])};
    for (int start : {0, 1}) {
      QuantumSeed s = init;
      for (int step = 0, k = start; step < 12; ++step, k = 1 - k) {
        s = mutate_seed(s, k);
        for (const auto& v : s.vars)
          if (!initial.count(to_text(v))) found.insert(to_text(v));
      }
    }
    for (const auto& r : gq.reps)
      cc.insert(to_text(cc_expand(cc_input(q, recursion_counts(q, zero_based(gq.variable(r.variable).seq))))));
    t.expect(found == cc, std::string(name) + " non-initial variables");
  }
  return t.result("finite-type coverage");
}

CheckResult json_round_trip() {
  Tally t;
  for (const char* name : {"A2", "C2", "G2"}) {
    const ValuedQuiver q = named_quiver(name);
    for (const auto& r : golden().quiver(name).reps) {
      ValuedRep v = build_example_rep(name, r.rep, 3);
      ValuedRep w = rep_from_json(Json::parse(rep_to_json(v).dump()));
      t.expect(rep_to_json(w) == rep_to_json(v), std::string(name) + " " + r.rep + " representation");
      CountTable c = golden_counts(q, r);
      t.expect(table_from_json(Json::parse(table_to_json(c).dump())) == c, std::string(name) + " " + r.rep + " table");
      CountTable e = enumerate_subreps(v);
      t.expect(table_from_json(Json::parse(table_to_json(e).dump())) == e, std::string(name) + " " + r.rep + " counts");
    }
    for (const auto& v : golden().quiver(name).variables) {
      TorusElement x = golden_variable(q, v);
      t.expect(torus_from_json(x.form(), Json::parse(torus_to_json(x).dump())) == x, std::string(name) + " " + v.name);
      t.expect(parse_element(x.form(), to_text(x)) == x, std::string(name) + " " + v.name + " text");
    }
  }
  std::mt19937_64 rng(3);
  for (int n = 0; n <= 5; ++n) {
    Triangulation tr = Triangulation::random(n, rng);
    t.expect(triangulation_from_json(triangulation_to_json(tr)) == tr, "triangulation n=" + std::to_string(n));
  }
  return t.result("JSON round trip");
}

Check check(std::string name, double cost, CheckResult (*fn)()) { return Check{std::move(name), cost, fn}; }

}  // namespace

std::vector<Check> criterion_checks() {
  return {
      check("1 golden A2", 1, [] { return golden_rank2("A2"); }),
      check("2 golden C2", 1, [] { return golden_rank2("C2"); }),
      check("3 golden G2", 1, [] { return golden_rank2("G2"); }),
      Check{"4 CC equals mutation", rank2_enumeration_cost(), cc_equals_mutation},
      check("5 rank-4 tables", 1, rank4_tables),
      check("6 Kronecker closed forms", 1, kronecker_closed_forms),
      Check{"7 Kronecker counts", kronecker_enumeration_cost(), kronecker_counts},
      check("8 reflection theorem", 1, reflection_theorem),
      check("9 Laurent property", 1, laurent_property),
      check("10 F-factors", 1, ffactor_suite),
      check("11 T-paths", 1, tpath_theorem),
  };
}

std::vector<std::string> suite_names() { return {"paper-tables", "engines", "properties"}; }

std::vector<Check> suite_checks(const std::string& suite) {
  auto all = criterion_checks();
  auto pick = [&](std::vector<int> ids) {
    std::vector<Check> out;
    for (int i : ids) out.push_back(all[i - 1]);
    return out;
  };
  if (suite == "paper-tables") return pick({1, 2, 3, 5});
  if (suite == "engines") return pick({4, 6, 7, 8, 10, 11});
  if (suite == "properties") {
    auto out = pick({9});
    out.push_back(check("cluster variables of reflected simples", 1, theorem_property));
    out.push_back(check("finite-type coverage", 1, finite_type_coverage));
    out.push_back(check("JSON round trip", 1, json_round_trip));
    return out;
  }
  throw ValidationError("unknown suite '" + suite + "' (paper-tables, engines, properties)");
}

bool Report::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

Report run_checks(const std::string& suite, const std::vector<Check>& checks, double budget) {
  Report rep{suite, {}, {}};
  for (const auto& c : checks) {
    if (c.cost > budget) {
      rep.skipped.push_back(c.name);
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = CheckResult{c.name, false, std::string("exception: ") + e.what(), 0};
    }
    r.name = c.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.results.push_back(std::move(r));
  }
  return rep;
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.results)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"seconds", c.seconds}, {"detail", c.detail}});
  return {{"suite", r.suite}, {"pass", r.all_pass()}, {"checks", checks}, {"skipped", r.skipped}};
}

}  // namespace qcc
