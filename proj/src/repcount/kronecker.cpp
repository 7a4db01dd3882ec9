#include "qcc/errors.hpp"
#include "qcc/repcount.hpp"

namespace qcc {

QScalar kronecker_count(KroneckerKind kind, long long n, long long a, long long b) {
  if (n < 0) throw ValidationError("Kronecker index must be nonnegative");
  if (kind == KroneckerKind::P) {
    if (a < 0 || b < 0 || a > n || b > n + 1) return {};
    if (a >= b && !(a == 0 && b == 0)) return {};
    return gauss_binom(n + 1 - a, n + 1 - b, 2) * gauss_binom(b - 1, a, 2);
  }
  if (a < 0 || b < 0 || a > n + 1 || b > n) return {};
  if (a > b && !(a == n + 1 && b == n)) return {};
  return gauss_binom(n - a, n - b, 2) * gauss_binom(b + 1, a, 2);
}

CountTable kronecker_table(KroneckerKind kind, long long n) {
  ExponentVec dims = kind == KroneckerKind::P ? ExponentVec{n, n + 1} : ExponentVec{n + 1, n};
  CountTable t{CountMode::Polynomial, 0, dims, {}};
  for (const auto& e : box_vectors(dims)) t.set(e, kronecker_count(kind, n, e[0], e[1]));
  return t;
}

}  // namespace qcc
