#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcc/bigint.hpp"

namespace qcc {

// Element of Z[q^(+-1/2d)]. A term (k, c) stands for c * q^(k/(2d)).
// Stored normalized: ascending k, no zero coefficients, d minimal.
class QScalar {
 public:
  using Term = std::pair<long long, BigInt>;

  QScalar() = default;
  QScalar(long long c);  // NOLINT(google-explicit-constructor)
  QScalar(const BigInt& c);  // NOLINT(google-explicit-constructor)

  // coeff * q^(num/den)
  static QScalar q_power(long long num, long long den = 1, const BigInt& coeff = 1);
  // Takes terms in units of 1/(2d); duplicates are merged.
  static QScalar from_terms(long long d, std::vector<Term> terms);

  long long denom_scale() const { return d_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term> terms_at_scale(long long d) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_only_integral_powers() const { return d_ == 1 && all_even(); }

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

  // this * q^(num/den)
  QScalar shifted(long long num, long long den = 1) const;
  // substitute q -> q^(num/den)
  QScalar substitute_power(long long num, long long den) const;
  QScalar pow(unsigned e) const;
  // q^(1/2) -> q^(-1/2)
  QScalar bar() const;
  // Exact quotient; throws NonExactDivision if this / b is not a Laurent polynomial.
  QScalar div_exact(const QScalar& b) const;

  // true iff every coefficient is >= 0
  bool nonnegative() const;

  std::string to_string() const;
  std::string to_latex() const;

 private:
  bool all_even() const;
  void normalize();

  long long d_ = 1;
  std::vector<Term> terms_;
};

// Exponent of a term as a reduced fraction (num, den).
std::pair<long long, long long> reduced_exponent(long long k, long long d);

// Symmetrized binomial [n r] at base t = q^(s_num/s_den):
// prod_{j=1..r} (t^(n-r+j) - t^-(n-r+j)) / (t^j - t^-j).
QScalar qbinom_sym(long long n, long long r, long long s_num = 1, long long s_den = 1);

// Gaussian binomial (n k) at base t = q^p: prod_{j=1..k} (t^(n-k+j) - 1) / (t^j - 1).
QScalar gauss_binom(long long n, long long k, long long p = 1);

// Evaluate at q = q0; throws FractionalPowerError on fractional powers or a non-integral value.
BigInt specialize_integer(const QScalar& s, const BigInt& q0);

QScalar parse_qscalar(const std::string& text);

}  // namespace qcc
