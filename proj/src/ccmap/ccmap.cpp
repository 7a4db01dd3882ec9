#include "qcc/ccmap.hpp"

#include <algorithm>

#include "qcc/errors.hpp"

namespace qcc {

namespace {

ExponentVec minus(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

void check_rank(const CCInput& in) {
  if (static_cast<int>(in.counts.dims.size()) != in.ctx.n() || !in.form || in.form->n() != in.ctx.n())
    throw ValidationError("count table, root context and form have different ranks");
}

CountTable normalized(const CCInput& in) {
  switch (in.counts.mode) {
    case CountMode::NormalizedA:
      return in.counts;
    case CountMode::Polynomial:
      return normalized_from_polynomial(in.counts, in.ctx);
    case CountMode::IntegerAtQ0:
      break;
  }
  throw ValidationError("integer counts need a specialized expansion");
}

CountTable polynomial(const CCInput& in) {
  if (in.counts.mode == CountMode::Polynomial) return in.counts;
  if (in.counts.mode == CountMode::NormalizedA) return polynomial_from_normalized(in.counts, in.ctx);
  throw ValidationError("integer counts need a specialized expansion");
}

}  // namespace

CCInput cc_input(const ValuedQuiver& q, CountTable counts) {
  return CCInput{root_context(q), make_form(lambda_from_B(q)), std::move(counts)};
}

ExponentVec cc_exponent(const RootContext& ctx, const ExponentVec& e, const ExponentVec& dims) {
  auto [se, es] = star_vectors(ctx, e);
  auto sv = star_vectors(ctx, dims).first;
  ExponentVec r(e.size());
  for (size_t i = 0; i < e.size(); ++i) r[i] = se[i] - es[i] - sv[i];
  return r;
}

TorusElement cc_expand(const CCInput& in) {
  check_rank(in);
  CountTable a = normalized(in);
  TorusElement x(in.form);
  for (const auto& [e, v] : a.entries) x.add_term(cc_exponent(in.ctx, e, a.dims), v);
  return x;
}

SpecializedElement cc_expand_specialized(const CCInput& in) {
  check_rank(in);
  if (in.counts.mode != CountMode::IntegerAtQ0) throw ValidationError("specialized expansion needs integer counts");
  const BigInt q0 = in.counts.q0;
  SpecializedElement x(in.ctx.n());
  for (const auto& [e, v] : in.counts.entries) {
    long long shift = -euler_form(in.ctx, e, minus(in.counts.dims, e));
    x.add_term(cc_exponent(in.ctx, e, in.counts.dims), SpecializedScalar::of(v.shifted(shift, 2), q0));
  }
  return x;
}

FormPtr rank2_form() {
  static const FormPtr form = make_form(SkewForm(IntMatrix::from_rows({{0, 1}, {-1, 0}}), 1));
  return form;
}

TorusElement cc_expand_rank2(long long b, long long c, const CountTable& counts) {
  if (counts.dims.size() != 2) throw ValidationError("rank-2 expansion needs a rank-2 count table");
  CountTable t = counts;
  if (t.mode == CountMode::NormalizedA)
    t = polynomial_from_normalized(t, root_context(ValuedQuiver::rank2(b, c)));
  if (t.mode != CountMode::Polynomial) throw ValidationError("rank-2 expansion needs symbolic counts");
  const long long v1 = t.dims[0], v2 = t.dims[1];
  TorusElement x(rank2_form());
  for (const auto& [e, v] : t.entries) {
    long long d = c * e[0] * (v1 - e[0]) - b * (c * e[0] - e[1]) * (v2 - e[1]);
    x.add_term({-v1 + b * v2 - b * e[1], c * e[0] - v2}, v.shifted(-d, 2));
  }
  return x;
}

TorusElement kronecker_closed_form(long long n, bool negative_side) {
  if (n < 0) throw ValidationError("closed form index must be nonnegative");
  TorusElement x(rank2_form());
  x.add_term(negative_side ? ExponentVec{n + 2, -n - 1} : ExponentVec{-n - 1, n + 2}, 1);
  for (long long p = 0; p <= n; ++p)
    for (long long r = 0; p + r <= n; ++r) {
      QScalar coeff = qbinom_sym(n - r, p) * qbinom_sym(n + 1 - p, r);
      x.add_term(negative_side ? ExponentVec{2 * r - n, 2 * p - n - 1} : ExponentVec{2 * p - n - 1, 2 * r - n}, coeff);
    }
  return x;
}

FFactor f_factor(const CCInput& in) {
  check_rank(in);
  CountTable t = polynomial(in);
  FFactor f;
  f.g = star_vectors(in.ctx, t.dims).first;
  for (auto& x : f.g) x = -x;
  for (const auto& [e, v] : t.entries) f.F[e] = v.shifted(euler_form(in.ctx, e, e), 2);
  return f;
}

TorusElement recombine(const FFactor& f, const IntMatrix& B, const FormPtr& form) {
  const int n = B.rows();
  TorusElement jf(form);
  for (const auto& [e, v] : f.F) {
    ExponentVec a(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i] -= B(i, j) * e[j];
    jf.add_term(a, v);
  }
  return TorusElement::monomial(form, f.g) * jf;
}

FFactor b_compatible_check(const TorusElement& x, const IntMatrix& B, const ExponentVec& g) {
  const int n = B.rows();
  if (x.rank() != n || static_cast<int>(g.size()) != n) throw ValidationError("rank mismatch in B-compatibility check");
  RationalMatrix inv = rational_inverse(B);
  ExponentVec ng = g;
  for (auto& v : ng) v = -v;
  TorusElement y = TorusElement::monomial(x.form(), ng) * x;
  FFactor f{g, {}};
  for (const auto& [a, v] : y.terms()) {
    ExponentVec e(n);
    for (int i = 0; i < n; ++i) {
      BigRational s = 0;
      for (int j = 0; j < n; ++j) s -= inv[i][j] * a[j];
      if (denominator(s) != 1) throw NotBCompatible("exponent outside the column lattice of B");
      e[i] = static_cast<long long>(numerator(s));
    }
    f.F[e] = v;
  }
  return f;
}

bool ffactor_positive(const FFactor& f) {
  bool has_one = false;
  for (const auto& [e, v] : f.F) {
    bool zero = std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; });
    if (zero) {
      if (!v.is_one()) return false;
      has_one = true;
      continue;
    }
    if (!v.nonnegative()) return false;
    for (const auto& term : v.terms())
      if (term.first <= 0) return false;
  }
  return has_one;
}

bool cc_verify_mutation(const ValuedQuiver& q, int i, const CountTable& counts_N, const CountTable& counts_SiN) {
  if (i < 0 || i >= q.n) throw ValidationError("mutation direction out of range");
  if (!is_sink(q.B, i) && !is_source(q.B, i))
    throw NotAdmissible("vertex " + std::to_string(i + 1) + " is neither a sink nor a source");
  const ValuedQuiver mq(matrix_mutation(q.B, i), q.D);
  const TorusElement xn = cc_expand(cc_input(q, counts_N));
  const TorusElement xs = cc_expand(cc_input(mq, counts_SiN));
  const QuantumSeed s = mutate_seed(initial_seed(compatible_pair(q)), i);
  const SkewForm& lam = *s.pair.lambda;

  long long p = 0;
  for (const auto& [a, v] : xs.terms()) p = std::max(p, -a[i]);
  ExponentVec pa(q.n, 0);
  pa[i] = p;
  // X'^(a) X'^(p a_i) = q^(Lambda'(a, p a_i)/2) X'^(a + p a_i), then read off in the mutated frame.
  TorusElement lhs(s.initial_form);
  for (const auto& [a, v] : xs.terms()) {
    ExponentVec b = a;
    b[i] += p;
    QScalar twist = QScalar::from_terms(lam.d(), {{lam.pair(a, pa), BigInt(1)}});
    lhs += (v * twist) * frame_monomial(s, b);
  }
  TorusElement rhs = xn.with_form(s.initial_form) * s.vars[i].pow(static_cast<unsigned>(p));
  return lhs == rhs;
}

}  // namespace qcc
