#include "qcc/count_table.hpp"

#include "qcc/errors.hpp"

namespace qcc {

std::string mode_name(CountMode m) {
  switch (m) {
    case CountMode::IntegerAtQ0:
      return "integer";
    case CountMode::Polynomial:
      return "polynomial";
    case CountMode::NormalizedA:
      return "normalized";
  }
  return "polynomial";
}

CountMode parse_mode(const std::string& s) {
  if (s == "integer") return CountMode::IntegerAtQ0;
  if (s == "polynomial") return CountMode::Polynomial;
  if (s == "normalized") return CountMode::NormalizedA;
  throw ValidationError("unknown count mode '" + s + "'");
}

QScalar CountTable::at(const ExponentVec& e) const {
  auto it = entries.find(e);
  return it == entries.end() ? QScalar() : it->second;
}

void CountTable::set(const ExponentVec& e, const QScalar& v) {
  if (v.is_zero())
    entries.erase(e);
  else
    entries[e] = v;
}

std::vector<ExponentVec> box_vectors(const ExponentVec& dims) {
  std::vector<ExponentVec> out;
  for (long long d : dims)
    if (d < 0) return out;
  ExponentVec e(dims.size(), 0);
  while (true) {
    out.push_back(e);
    int i = static_cast<int>(e.size()) - 1;
    while (i >= 0 && e[i] == dims[i]) e[i--] = 0;
    if (i < 0) break;
    ++e[i];
  }
  return out;
}

namespace {

ExponentVec minus(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

CountTable rescale(const CountTable& t, const RootContext& ctx, CountMode from, CountMode to, int sign) {
  if (t.mode != from) throw ValidationError("count table is in " + mode_name(t.mode) + " mode");
  if (static_cast<int>(t.dims.size()) != ctx.n()) throw ValidationError("count table rank mismatch");
  CountTable out{to, 0, t.dims, {}};
  for (const auto& [e, v] : t.entries) {
    long long x = euler_form(ctx, e, minus(t.dims, e));
    out.set(e, v.shifted(sign * x, 2));
  }
  return out;
}

}  // namespace

CountTable normalized_from_polynomial(const CountTable& t, const RootContext& ctx) {
  return rescale(t, ctx, CountMode::Polynomial, CountMode::NormalizedA, -1);
}

CountTable polynomial_from_normalized(const CountTable& t, const RootContext& ctx) {
  return rescale(t, ctx, CountMode::NormalizedA, CountMode::Polynomial, 1);
}

CountTable specialize_table(const CountTable& t, const RootContext& ctx, long long q0) {
  if (t.mode == CountMode::IntegerAtQ0) {
    if (t.q0 != q0) throw ValidationError("count table was counted at a different q");
    return t;
  }
  CountTable poly = t.mode == CountMode::NormalizedA ? polynomial_from_normalized(t, ctx) : t;
  CountTable out{CountMode::IntegerAtQ0, q0, t.dims, {}};
  for (const auto& [e, v] : poly.entries) out.set(e, QScalar(specialize_integer(v, q0)));
  return out;
}

}  // namespace qcc
