#pragma once

#include <map>
#include <string>
#include <utility>

#include "qcc/qscalar.hpp"
#include "qcc/torus.hpp"

namespace qcc {

// Exact element of Q(p^(1/N)) obtained by setting q = q0 = p^t (or q0 = 1).
// Keys are fractional exponents r in [0,1) of p as reduced fractions; the
// powers p^r are linearly independent over Q, so equality is structural.
class SpecializedScalar {
 public:
  using Key = std::pair<long long, long long>;

  SpecializedScalar() = default;
  SpecializedScalar(long long prime, const BigRational& v);
  static SpecializedScalar of(const QScalar& s, const BigInt& q0);

  long long prime() const { return p_; }
  const std::map<Key, BigRational>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  bool is_rational() const { return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first.first == 0); }
  BigRational rational_value() const;

  SpecializedScalar& operator+=(const SpecializedScalar& o);
  friend SpecializedScalar operator+(SpecializedScalar a, const SpecializedScalar& b) { return a += b; }
  friend SpecializedScalar operator*(const SpecializedScalar& a, const SpecializedScalar& b);
  friend bool operator==(const SpecializedScalar& a, const SpecializedScalar& b) {
    return a.parts_ == b.parts_ && (a.parts_.empty() || a.p_ == b.p_);
  }
  friend bool operator!=(const SpecializedScalar& a, const SpecializedScalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void add_part(long long num, long long den, const BigRational& v);
  void check_prime(const SpecializedScalar& o);
  long long p_ = 1;
  std::map<Key, BigRational> parts_;
};

class SpecializedElement {
 public:
  using TermMap = std::map<ExponentVec, SpecializedScalar, LexDescending>;

  SpecializedElement() = default;
  explicit SpecializedElement(int rank) : rank_(rank) {}
  static SpecializedElement of(const TorusElement& x, const BigInt& q0);

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  void add_term(const ExponentVec& a, const SpecializedScalar& c);
  friend bool operator==(const SpecializedElement& a, const SpecializedElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SpecializedElement& a, const SpecializedElement& b) { return !(a == b); }
  std::string to_string() const;

 private:
  int rank_ = 0;
  TermMap terms_;
};

// Returns (p, t) with q0 = p^t, or (1, 0) for q0 = 1; throws for other values.
std::pair<long long, long long> prime_power(const BigInt& q0);

}  // namespace qcc
