#include "qcc/specialized.hpp"

#include <sstream>

#include "qcc/errors.hpp"
#include "qcc/render.hpp"

namespace qcc {

std::pair<long long, long long> prime_power(const BigInt& q0) {
  if (q0 <= 0) throw ValidationError("specialization value must be positive");
  if (q0 == 1) return {1, 0};
  if (q0 > BigInt(1) << 62) throw ValidationError("specialization value too large");
  long long v = static_cast<long long>(q0);
  long long p = 0;
  for (long long f = 2; f * f <= v; ++f)
    if (v % f == 0) {
      p = f;
      break;
    }
  if (p == 0) return {v, 1};
  long long t = 0;
  while (v % p == 0) {
    v /= p;
    ++t;
  }
  if (v != 1) throw ValidationError("specialization value must be 1 or a prime power");
  return {p, t};
}

namespace {

BigRational rational_pow(long long p, long long e) {
  BigRational r = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? 1 / r : r;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SpecializedScalar::SpecializedScalar(long long prime, const BigRational& v) : p_(prime) {
  if (v != 0) parts_[{0, 1}] = v;
}

void SpecializedScalar::add_part(long long num, long long den, const BigRational& v) {
  // p^(num/den) = p^floor * p^(frac)
  long long g = gcd_ll(num, den);
  if (g == 0) g = 1;
  num /= g;
  den /= g;
  long long fl = floor_div(num, den);
  long long rem = num - fl * den;
  Key key = rem == 0 ? Key{0, 1} : Key{rem, den};
  BigRational val = v * (p_ == 1 ? BigRational(1) : rational_pow(p_, fl));
  auto it = parts_.find(key);
  if (it == parts_.end()) {
    if (val != 0) parts_.emplace(key, val);
  } else {
    it->second += val;
    if (it->second == 0) parts_.erase(it);
  }
}

SpecializedScalar SpecializedScalar::of(const QScalar& s, const BigInt& q0) {
  auto [p, t] = prime_power(q0);
  SpecializedScalar r;
  r.p_ = p;
  for (const auto& [k, c] : s.terms()) {
    if (p == 1) {
      r.add_part(0, 1, BigRational(c));
    } else {
      // q0^(k/2d) = p^(t k / 2d)
      r.add_part(t * k, 2 * s.denom_scale(), BigRational(c));
    }
  }
  return r;
}

BigRational SpecializedScalar::rational_value() const {
  if (!is_rational()) throw FractionalPowerError("specialized value is irrational");
  return parts_.empty() ? BigRational(0) : parts_.begin()->second;
}

void SpecializedScalar::check_prime(const SpecializedScalar& o) {
  if (parts_.empty()) {
    p_ = o.p_;
    return;
  }
  if (!o.parts_.empty() && o.p_ != p_) throw ValidationError("specialized values at different primes");
}

SpecializedScalar& SpecializedScalar::operator+=(const SpecializedScalar& o) {
  check_prime(o);
  for (const auto& [key, v] : o.parts_) add_part(key.first, key.second, v);
  return *this;
}

SpecializedScalar operator*(const SpecializedScalar& a, const SpecializedScalar& b) {
  SpecializedScalar r;
  r.p_ = a.p_;
  r.check_prime(b);
  if (a.parts_.empty()) r.p_ = b.p_;
  for (const auto& [ka, va] : a.parts_)
    for (const auto& [kb, vb] : b.parts_) {
      long long den = lcm_ll(ka.second, kb.second);
      long long num = ka.first * (den / ka.second) + kb.first * (den / kb.second);
      r.add_part(num, den, va * vb);
    }
  return r;
}

std::string SpecializedScalar::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, v] : parts_) {
    if (!first) os << " + ";
    first = false;
    os << v;
    if (key.first != 0) os << "*" << p_ << "^(" << key.first << "/" << key.second << ")";
  }
  return os.str();
}

SpecializedElement SpecializedElement::of(const TorusElement& x, const BigInt& q0) {
  SpecializedElement r(x.rank());
  for (const auto& [a, c] : x.terms()) r.add_term(a, SpecializedScalar::of(c, q0));
  return r;
}

void SpecializedElement::add_term(const ExponentVec& a, const SpecializedScalar& c) {
  if (static_cast<int>(a.size()) != rank_) throw ValidationError("exponent length does not match rank");
  if (c.is_zero()) return;
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    terms_.emplace(a, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string SpecializedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool one = c.is_rational() && c.rational_value() == 1;
    if (!one) {
      if (c.parts().size() > 1)
        os << "(" << c.to_string() << ")*";
      else
        os << c.to_string() << "*";
    }
    os << monomial_text(a);
  }
  return os.str();
}

}  // namespace qcc
