#include "qcc/seed.hpp"

#include "qcc/errors.hpp"

namespace qcc {

ValuedQuiver::ValuedQuiver(IntMatrix b, std::vector<long long> d) : n(b.rows()), B(std::move(b)), D(std::move(d)) {
  if (B.rows() != B.cols()) throw ValidationError("exchange matrix must be square");
  if (static_cast<int>(D.size()) != n) throw ValidationError("symmetrizer length does not match rank");
  for (int i = 0; i < n; ++i) {
    if (D[i] <= 0) throw ValidationError("valuations must be positive");
    if (B(i, i) != 0) throw ValidationError("exchange matrix diagonal must vanish");
    for (int j = 0; j < n; ++j)
      if (D[i] * B(i, j) != -D[j] * B(j, i))
        throw ValidationError("DB is not skew-symmetric at (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ")");
  }
}

ValuedQuiver ValuedQuiver::rank2(long long b, long long c) {
  if (b <= 0 || c <= 0) throw ValidationError("rank-2 valuations must be positive");
  return ValuedQuiver(IntMatrix::from_rows({{0, b}, {-c, 0}}), {c, b});
}

ValuedQuiver named_quiver(const std::string& name) {
  if (name == "A2") return ValuedQuiver::rank2(1, 1);
  if (name == "C2") return ValuedQuiver::rank2(2, 1);
  if (name == "G2") return ValuedQuiver::rank2(3, 1);
  if (name == "Kronecker") return ValuedQuiver::rank2(2, 2);
  if (name == "rank4")
    return ValuedQuiver(IntMatrix::from_rows({{0, 2, 0, 0}, {-2, 0, 2, 0}, {0, -2, 0, 2}, {0, 0, -2, 0}}),
                        {1, 1, 1, 1});
  throw ValidationError("unknown quiver name: " + name);
}

SkewForm lambda_from_B(const ValuedQuiver& q) {
  RationalMatrix inv = rational_inverse(q.B);
  RationalMatrix lam(q.n, std::vector<BigRational>(q.n));
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) lam[i][j] = -BigRational(q.D[i]) * inv[i][j];
  return SkewForm::from_rational(lam);
}

CompatiblePair principal_completion(const ValuedQuiver& q) {
  int n = q.n;
  IntMatrix B(2 * n, 2 * n), L(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) B(i, j) = q.B(i, j);
    B(i, n + i) = -1;
    B(n + i, i) = 1;
    L(i, n + i) = -q.D[i];
    L(n + i, i) = q.D[i];
  }
  // lower-right block -DB
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) L(n + i, n + j) = -q.D[i] * q.B(i, j);
  std::vector<long long> D(q.D);
  D.insert(D.end(), q.D.begin(), q.D.end());
  return CompatiblePair{B, D, make_form(SkewForm(L, 1)), n};
}

CompatiblePair compatible_pair(const ValuedQuiver& q) {
  if (determinant(q.B) == 0) return principal_completion(q);
  return CompatiblePair{q.B, q.D, make_form(lambda_from_B(q)), q.n};
}

bool is_compatible(const CompatiblePair& p) {
  const IntMatrix& L = p.lambda->scaled();
  if (L.rows() != p.B.rows()) return false;
  IntMatrix prod = p.B.transpose() * L;
  for (int i = 0; i < prod.rows(); ++i)
    for (int j = 0; j < prod.cols(); ++j)
      if (prod(i, j) != (i == j ? p.D[i] * p.lambda->d() : 0)) return false;
  return true;
}

IntMatrix matrix_mutation(const IntMatrix& B, int k) {
  if (k < 0 || k >= B.cols() || k >= B.rows()) throw ValidationError("mutation direction out of range");
  IntMatrix r = B;
  for (int i = 0; i < B.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) {
      if (i == k || j == k) {
        r(i, j) = -B(i, j);
      } else {
        long long prod = B(i, k) * B(k, j);
        if (prod > 0) r(i, j) = B(i, j) + (B(i, k) > 0 ? prod : -prod);
      }
    }
  return r;
}

SkewForm lambda_mutation(const CompatiblePair& p, int k) {
  int m = p.B.rows();
  if (k < 0 || k >= p.mutable_n) throw ValidationError("mutation direction out of range");
  IntMatrix E = IntMatrix::identity(m);
  E(k, k) = -1;
  for (int i = 0; i < m; ++i)
    if (i != k) E(i, k) = std::max(0LL, -p.B(i, k));
  return p.lambda->transformed(E);
}

CompatiblePair pair_mutation(const CompatiblePair& p, int k) {
  CompatiblePair r = p;
  r.lambda = make_form(lambda_mutation(p, k));
  r.B = matrix_mutation(p.B, k);
  return r;
}

QuantumSeed initial_seed(const CompatiblePair& p) {
  if (!is_compatible(p)) throw ValidationError("pair is not compatible");
  QuantumSeed s{p, {}, {}, p.lambda};
  for (int i = 0; i < p.B.rows(); ++i) s.vars.push_back(TorusElement::generator(p.lambda, i));
  return s;
}

namespace {

// Ordered product with q-prefactor; negative powers only of monomial variables.
TorusElement ordered_product(const QuantumSeed& s, const ExponentVec& c) {
  const SkewForm& lam = *s.pair.lambda;
  long long k = 0;
  int m = static_cast<int>(c.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) k += c[i] * c[j] * lam.scaled()(j, i);
  TorusElement r(s.initial_form, QScalar::from_terms(lam.d(), {{k, BigInt(1)}}));
  for (int i = 0; i < m; ++i) {
    if (c[i] > 0) {
      r = r * s.vars[i].pow(static_cast<unsigned>(c[i]));
    } else if (c[i] < 0) {
      r = r * s.vars[i].monomial_inverse().pow(static_cast<unsigned>(-c[i]));
    }
  }
  return r;
}

}  // namespace

TorusElement frame_monomial(const QuantumSeed& s, const ExponentVec& c) {
  int m = static_cast<int>(s.vars.size());
  if (static_cast<int>(c.size()) != m) throw ValidationError("frame_monomial: length mismatch");
  int hard = -1;
  for (int i = 0; i < m; ++i)
    if (c[i] < 0 && !s.vars[i].is_monomial()) {
      if (hard >= 0) throw ValidationError("frame_monomial: more than one non-invertible negative power");
      hard = i;
    }
  if (hard < 0) return ordered_product(s, c);
  // M(c) = q^(-Lambda(c', c_k a_k)/2) M(c') Y_k^(c_k)
  ExponentVec cp = c, ck(m, 0);
  cp[hard] = 0;
  ck[hard] = c[hard];
  const SkewForm& lam = *s.pair.lambda;
  QScalar twist = QScalar::from_terms(lam.d(), {{-lam.pair(cp, ck), BigInt(1)}});
  TorusElement r = twist * ordered_product(s, cp);
  for (long long t = 0; t < -c[hard]; ++t) r = exact_div_right(r, s.vars[hard]);
  return r;
}

QuantumSeed mutate_seed(const QuantumSeed& s, int k) {
  const CompatiblePair& p = s.pair;
  if (k < 0 || k >= p.mutable_n)
    throw ValidationError("mutation direction " + std::to_string(k + 1) + " out of range");
  int m = p.B.rows();
  ExponentVec cplus(m, 0), cminus(m, 0);
  for (int l = 0; l < m; ++l) {
    cplus[l] = std::max(0LL, p.B(l, k));
    cminus[l] = std::max(0LL, -p.B(l, k));
  }
  // Each M(c) alone need not be Laurent; only the exchange sum is, so the
  // common right factor Y_k^(-1) is divided off once from the sum.
  ExponentVec ek(m, 0);
  ek[k] = -1;
  const SkewForm& lam = *p.lambda;
  auto part = [&](const ExponentVec& c) {
    QScalar twist = QScalar::from_terms(lam.d(), {{-lam.pair(c, ek), BigInt(1)}});
    return twist * ordered_product(s, c);
  };
  TorusElement nv;
  if (s.vars[k].is_monomial()) {
    cplus[k] = -1;
    cminus[k] = -1;
    nv = ordered_product(s, cminus) + ordered_product(s, cplus);
  } else {
    nv = exact_div_right(part(cminus) + part(cplus), s.vars[k]);
  }
  QuantumSeed r = s;
  r.vars[k] = std::move(nv);
  r.pair = pair_mutation(p, k);
  r.history.push_back(k);
  return r;
}

QuantumSeed mutate_sequence(QuantumSeed s, const std::vector<int>& seq) {
  for (int k : seq) s = mutate_seed(s, k);
  return s;
}

TorusElement variable_by_label(const ValuedQuiver& q, int a0, const std::vector<int>& seq) {
  if (a0 < 0 || a0 >= q.n) throw ValidationError("variable index out of range");
  QuantumSeed s = mutate_sequence(initial_seed(compatible_pair(q)), seq);
  return s.vars[a0];
}

bool check_commutation(const QuantumSeed& s) {
  const SkewForm& lam = *s.pair.lambda;
  int m = static_cast<int>(s.vars.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      QScalar t = QScalar::from_terms(lam.d(), {{2 * lam.scaled()(i, j), BigInt(1)}});
      if (s.vars[i] * s.vars[j] != t * (s.vars[j] * s.vars[i])) return false;
    }
  return true;
}

bool is_sink(const IntMatrix& B, int i) {
  for (int j = 0; j < B.cols(); ++j)
    if (B(i, j) > 0) return false;
  return true;
}

bool is_source(const IntMatrix& B, int i) {
  for (int j = 0; j < B.cols(); ++j)
    if (B(i, j) < 0) return false;
  return true;
}

bool is_sink_on(const IntMatrix& B, int i, const std::vector<bool>& support) {
  for (int j = 0; j < B.cols(); ++j)
    if (support[j] && B(i, j) > 0) return false;
  return true;
}

bool is_source_on(const IntMatrix& B, int i, const std::vector<bool>& support) {
  for (int j = 0; j < B.cols(); ++j)
    if (support[j] && B(i, j) < 0) return false;
  return true;
}

bool is_admissible(const ValuedQuiver& q, const std::vector<int>& seq) {
  if (seq.empty()) return false;
  for (int k : seq)
    if (k < 0 || k >= q.n) return false;
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (seq[i] == seq[i + 1]) return false;
  IntMatrix B = q.B;
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    int k = seq[i];
    if (!is_sink(B, k) && !is_source(B, k)) return false;
    B = matrix_mutation(B, k);
  }
  return true;
}

RootContext root_context(const ValuedQuiver& q) {
  RootContext ctx{q.B, IntMatrix(q.n, q.n), IntMatrix(q.n, q.n), q.D};
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) {
      ctx.C(i, j) = i == j ? 2 : -std::abs(q.B(i, j));
      ctx.gram(i, j) = i == j ? q.D[i] : -std::max(0LL, q.D[i] * q.B(i, j));
    }
  return ctx;
}

long long euler_form(const RootContext& ctx, const ExponentVec& e, const ExponentVec& f) {
  long long s = 0;
  for (int i = 0; i < ctx.n(); ++i)
    for (int j = 0; j < ctx.n(); ++j) s += e[i] * ctx.gram(i, j) * f[j];
  return s;
}

std::pair<ExponentVec, ExponentVec> star_vectors(const RootContext& ctx, const ExponentVec& e) {
  int n = ctx.n();
  ExponentVec left(n, 0), right(n, 0);
  for (int i = 0; i < n; ++i) {
    long long l = 0, r = 0;
    for (int j = 0; j < n; ++j) {
      l += ctx.gram(i, j) * e[j];
      r += e[j] * ctx.gram(j, i);
    }
    left[i] = l / ctx.D[i];
    right[i] = r / ctx.D[i];
  }
  return {left, right};
}

ExponentVec reflect(const RootContext& ctx, int i, const ExponentVec& e) {
  ExponentVec r = e;
  long long s = 0;
  for (int j = 0; j < ctx.n(); ++j) s += ctx.C(i, j) * e[j];
  r[i] -= s;
  return r;
}

ExponentVec rank2_root(long long b, long long c, long long m, long long max_steps) {
  if (m == 1 || m == 2) throw ValidationError("rank2_root: m must not be 1 or 2");
  if (b <= 0 || c <= 0) throw ValidationError("rank2_root: b and c must be positive");
  using V = std::pair<long long, long long>;
  auto comb = [](long long f, const V& x, const V& y) { return V{f * x.first - y.first, f * x.second - y.second}; };
  auto coef = [&](long long idx) { return (idx % 2 != 0) ? b : c; };
  V result;
  if (m <= 0) {
    // alpha_{k-1} = coef(k) alpha_k - alpha_{k+1}, from (alpha_1, alpha_0)
    V next{1, 0}, cur{0, -1};
    long long k = 0;
    if (-m > max_steps) throw ValidationError("rank2_root: iteration bound exceeded");
    while (k > m) {
      V prev = comb(coef(k), cur, next);
      next = cur;
      cur = prev;
      --k;
    }
    result = cur;
  } else {
    // alpha_{k+1} = coef(k) alpha_k - alpha_{k-1}, from (alpha_2, alpha_3)
    V prev{0, 1}, cur{-1, 0};
    long long k = 3;
    if (m > max_steps) throw ValidationError("rank2_root: iteration bound exceeded");
    while (k < m) {
      V nxt = comb(coef(k), cur, prev);
      prev = cur;
      cur = nxt;
      ++k;
    }
    result = cur;
  }
  ExponentVec dim{-result.first, -result.second};
  if (dim[0] < 0 || dim[1] < 0 || (dim[0] == 0 && dim[1] == 0))
    throw ValidationError("rank2_root: alpha_" + std::to_string(m) + " is not a negative root");
  return dim;
}

}  // namespace qcc
