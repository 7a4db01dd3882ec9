#include "qcc/qscalar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qcc/errors.hpp"

namespace qcc {

QScalar::QScalar(long long c) {
  if (c != 0) terms_.emplace_back(0, BigInt(c));
}

QScalar::QScalar(const BigInt& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

QScalar QScalar::q_power(long long num, long long den, const BigInt& coeff) {
  if (den <= 0) throw ValidationError("q_power: denominator must be positive");
  // num/den = (2*num)/(2*den)
  return from_terms(den, {{2 * num, coeff}});
}

QScalar QScalar::from_terms(long long d, std::vector<Term> terms) {
  if (d <= 0) throw ValidationError("QScalar: denom_scale must be positive");
  QScalar r;
  r.d_ = d;
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
      if (r.terms_.back().second == 0) r.terms_.pop_back();
    } else if (t.second != 0) {
      r.terms_.push_back(std::move(t));
    }
  }
  r.normalize();
  return r;
}

void QScalar::normalize() {
  if (terms_.empty()) {
    d_ = 1;
    return;
  }
  long long g = d_;
  for (const auto& t : terms_) g = gcd_ll(g, t.first);
  if (g > 1) {
    d_ /= g;
    for (auto& t : terms_) t.first /= g;
  }
}

std::vector<QScalar::Term> QScalar::terms_at_scale(long long d) const {
  long long f = d / d_;
  std::vector<Term> out = terms_;
  for (auto& t : out) t.first *= f;
  return out;
}

bool QScalar::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool QScalar::all_even() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first % 2 == 0; });
}

bool QScalar::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second >= 0; });
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.is_zero()) return *this;
  long long d = lcm_ll(d_, o.d_);
  std::vector<Term> all = terms_at_scale(d);
  std::vector<Term> rhs = o.terms_at_scale(d);
  all.insert(all.end(), rhs.begin(), rhs.end());
  *this = from_terms(d, std::move(all));
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
  if (is_zero() || o.is_zero()) {
    *this = QScalar();
    return *this;
  }
  long long d = lcm_ll(d_, o.d_);
  std::map<long long, BigInt> acc;
  auto a = terms_at_scale(d);
  auto b = o.terms_at_scale(d);
  for (const auto& x : a)
    for (const auto& y : b) acc[x.first + y.first] += x.second * y.second;
  std::vector<Term> out(acc.begin(), acc.end());
  *this = from_terms(d, std::move(out));
  return *this;
}

QScalar QScalar::shifted(long long num, long long den) const {
  return *this * q_power(num, den);
}

QScalar QScalar::substitute_power(long long num, long long den) const {
  if (den <= 0) throw ValidationError("substitute_power: denominator must be positive");
  // k/(2d) * num/den = (k*num)/(2*d*den)
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.emplace_back(t.first * num, t.second);
  return from_terms(d_ * den, std::move(out));
}

QScalar QScalar::pow(unsigned e) const {
  QScalar r(1), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

QScalar QScalar::bar() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.first = -t.first;
  return from_terms(d_, std::move(out));
}

QScalar QScalar::div_exact(const QScalar& b) const {
  if (b.is_zero()) throw NonExactDivision("QScalar division by zero");
  if (is_zero()) return QScalar();
  long long d = lcm_ll(d_, b.d_);
  std::map<long long, BigInt> rem;
  for (auto& t : terms_at_scale(d)) rem.emplace(t.first, t.second);
  auto bt = b.terms_at_scale(d);
  const long long b_lo = bt.front().first;
  const long long b_hi = bt.back().first;
  const BigInt& b_top = bt.back().second;
  const long long q_lo = rem.begin()->first - b_lo;
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    long long e = top->first - b_hi;
    if (e < q_lo) throw NonExactDivision("QScalar quotient is not a Laurent polynomial");
    BigInt c = top->second / b_top;
    if (c * b_top != top->second)
      throw NonExactDivision("QScalar quotient has non-integral coefficient");
    for (const auto& t : bt) {
      auto it = rem.find(t.first + e);
      if (it == rem.end()) {
        rem.emplace(t.first + e, -c * t.second);
      } else {
        it->second -= c * t.second;
        if (it->second == 0) rem.erase(it);
      }
    }
    quot.emplace_back(e, std::move(c));
  }
  return from_terms(d, std::move(quot));
}

std::pair<long long, long long> reduced_exponent(long long k, long long d) {
  long long den = 2 * d;
  long long g = gcd_ll(k, den);
  if (g == 0) return {0, 1};
  return {k / g, den / g};
}

namespace {

std::string power_text(long long num, long long den) {
  if (den == 1 && num == 1) return "q";
  if (den == 1 && num > 0) return "q^" + std::to_string(num);
  if (den == 1) return "q^(" + std::to_string(num) + ")";
  return "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::string power_latex(long long num, long long den) {
  if (den == 1 && num == 1) return "q";
  if (den == 1) return "q^{" + std::to_string(num) + "}";
  if (num < 0) return "q^{-" + std::to_string(-num) + "/" + std::to_string(den) + "}";
  return "q^{" + std::to_string(num) + "/" + std::to_string(den) + "}";
}

template <class PowerFn>
std::string render(const QScalar& s, PowerFn power, const char* times) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : s.terms()) {
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    auto [num, den] = reduced_exponent(k, s.denom_scale());
    if (num == 0) {
      os << a;
    } else {
      if (a != 1) os << a << times;
      os << power(num, den);
    }
  }
  return os.str();
}

}  // namespace

std::string QScalar::to_string() const { return render(*this, power_text, "*"); }

std::string QScalar::to_latex() const { return render(*this, power_latex, ""); }

namespace {

// t^a - t^-a in units where t = q
QScalar sym_factor(long long a) {
  return QScalar::q_power(a) - QScalar::q_power(-a);
}

}  // namespace

QScalar qbinom_sym(long long n, long long r, long long s_num, long long s_den) {
  if (r < 0) throw ValidationError("qbinom_sym: r must be nonnegative");
  QScalar num(1), den(1);
  for (long long j = 1; j <= r; ++j) {
    long long a = n - r + j;
    if (a == 0) return QScalar();
    num *= sym_factor(a);
    den *= sym_factor(j);
  }
  return num.div_exact(den).substitute_power(s_num, s_den);
}

QScalar gauss_binom(long long n, long long k, long long p) {
  if (k < 0) throw ValidationError("gauss_binom: k must be nonnegative");
  if (p <= 0) throw ValidationError("gauss_binom: base power must be positive");
  QScalar num(1), den(1);
  for (long long j = 1; j <= k; ++j) {
    long long a = n - k + j;
    if (a == 0) return QScalar();
    num *= QScalar::q_power(a) - QScalar(1);
    den *= QScalar::q_power(j) - QScalar(1);
  }
  return num.div_exact(den).substitute_power(p, 1);
}

BigInt specialize_integer(const QScalar& s, const BigInt& q0) {
  if (!s.has_only_integral_powers())
    throw FractionalPowerError("specialize_integer: fractional power of q in " + s.to_string());
  if (q0 <= 0) throw ValidationError("specialize_integer: q0 must be positive");
  BigInt num = 0;
  long long lo = s.terms().empty() ? 0 : s.terms().front().first / 2;
  long long shift = lo < 0 ? -lo : 0;
  for (const auto& [k, c] : s.terms()) {
    num += c * boost::multiprecision::pow(q0, static_cast<unsigned>(k / 2 + shift));
  }
  BigInt den = boost::multiprecision::pow(q0, static_cast<unsigned>(shift));
  if (num % den != 0)
    throw FractionalPowerError("specialize_integer: value is not an integer");
  return num / den;
}

}  // namespace qcc
