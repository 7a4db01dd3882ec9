#include "qcc/finite_field.hpp"

#include <string>

#include "qcc/errors.hpp"

namespace qcc {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

using Poly = std::vector<int>;  // low degree first, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  int r = 1;
  for (int e = p - 2, b = a % p; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  int dm = static_cast<int>(m.size()) - 1;
  int lead_inv = inv_mod(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    int shift = static_cast<int>(a.size()) - 1 - dm;
    int f = a.back() * lead_inv % p;
    for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - f * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible(int p, const std::vector<int>& low) {
  int m = static_cast<int>(low.size());
  if (m <= 1) return m == 1;
  Poly f = low;
  f.push_back(1);
  // trial division by every monic polynomial of degree 1..m/2
  for (int deg = 1; deg <= m / 2; ++deg) {
    long long count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly g(deg + 1);
      long long c = code;
      for (int i = 0; i < deg; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[deg] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw ValidationError("field degree must be positive");
  unsigned long long size = 1;
  for (int i = 0; i < m; ++i) {
    size *= static_cast<unsigned long long>(p);
    if (size > (1ULL << 22)) throw ValidationError("field too large for table arithmetic");
  }
  size_ = static_cast<Elem>(size);
  // smallest code sum c_i p^i over the low coefficients
  for (Elem code = 0; code < size_; ++code) {
    std::vector<int> low(m);
    Elem c = code;
    for (int i = 0; i < m; ++i) {
      low[i] = static_cast<int>(c % p);
      c /= p;
    }
    if (is_irreducible(p, low)) {
      modulus_ = low;
      break;
    }
  }
  if (modulus_.empty()) throw ValidationError("no irreducible polynomial found");
  if (size_ <= 1024 && p_ != 2) {
    add_table_.resize(static_cast<size_t>(size_) * size_);
    for (Elem a = 0; a < size_; ++a)
      for (Elem b = 0; b < size_; ++b) add_table_[static_cast<size_t>(a) * size_ + b] = add_slow(a, b);
  }
  neg_table_.resize(size_);
  for (Elem a = 0; a < size_; ++a) {
    Elem r = 0, pw = 1, x = a;
    for (int i = 0; i < m_; ++i) {
      Elem d = x % p_;
      x /= p_;
      r += ((p_ - d) % p_) * pw;
      pw *= p_;
    }
    neg_table_[a] = r;
  }
  gen_ = m_ == 1 ? static_cast<Elem>((p_ - modulus_[0]) % p_) : static_cast<Elem>(p_);
  // find a primitive element and fill log/exp tables
  exp_.assign(size_ - 1, 0);
  log_.assign(size_, 0);
  for (Elem g = 1; g < size_; ++g) {
    Elem x = 1;
    Elem order = 0;
    do {
      x = mul_slow(x, g);
      ++order;
    } while (x != 1 && order < size_);
    if (order != size_ - 1) continue;
    x = 1;
    for (Elem k = 0; k + 1 < size_; ++k) {
      exp_[k] = x;
      log_[x] = k;
      x = mul_slow(x, g);
    }
    return;
  }
  throw ValidationError("no primitive element found");
}

FiniteField::Elem FiniteField::add_slow(Elem a, Elem b) const {
  Elem r = 0, pw = 1;
  for (int i = 0; i < m_; ++i) {
    Elem d = (a % p_ + b % p_) % p_;
    a /= p_;
    b /= p_;
    r += d * pw;
    pw *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::mul_slow(Elem a, Elem b) const {
  std::vector<int> x = coeffs(a), y = coeffs(b);
  Poly prod(2 * m_, 0);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  Poly mod = modulus_;
  mod.push_back(1);
  Poly r = poly_mod(prod, mod, p_);
  r.resize(m_, 0);
  return from_coeffs(r);
}

FiniteField::Elem FiniteField::neg(Elem a) const { return neg_table_[a]; }

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw ValidationError("inverse of zero");
  unsigned k = log_[a];
  return exp_[k == 0 ? 0 : size_ - 1 - k];
}

FiniteField::Elem FiniteField::pow(Elem a, unsigned long long e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  unsigned long long k = (static_cast<unsigned long long>(log_[a]) * (e % (size_ - 1))) % (size_ - 1);
  return exp_[k];
}

std::vector<int> FiniteField::coeffs(Elem a) const {
  std::vector<int> c(m_);
  for (int i = 0; i < m_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return c;
}

FiniteField::Elem FiniteField::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > m_) throw ValidationError("too many field coefficients");
  Elem r = 0, pw = 1;
  for (size_t i = 0; i < c.size(); ++i) {
    int v = ((c[i] % p_) + p_) % p_;
    r += static_cast<Elem>(v) * pw;
    pw *= p_;
  }
  return r;
}

FiniteField gf_make(int p, int m) { return FiniteField(p, m); }

Embedding::Embedding(const FiniteField& sub, const FiniteField& sup) {
  if (sub.p() != sup.p()) throw NonDividingDegree("embedding between fields of different characteristic");
  if (sup.m() % sub.m() != 0) throw NonDividingDegree("subfield degree does not divide field degree");
  // smallest root of sub's modulus in sup
  const auto& low = sub.modulus();
  long long root = -1;
  for (FiniteField::Elem r = 0; r < sup.size() && root < 0; ++r) {
    FiniteField::Elem v = sup.pow(r, static_cast<unsigned long long>(sub.m()));
    FiniteField::Elem pw = 1;
    for (int i = 0; i < sub.m(); ++i) {
      v = sup.add(v, sup.mul(static_cast<FiniteField::Elem>(low[i]), pw));
      pw = sup.mul(pw, r);
    }
    if (v == 0) root = r;
  }
  if (root < 0) throw std::logic_error("embedding: no root of the subfield modulus");
  map_.resize(sub.size());
  for (FiniteField::Elem x = 0; x < sub.size(); ++x) {
    auto c = sub.coeffs(x);
    FiniteField::Elem v = 0, pw = 1;
    for (int i = 0; i < sub.m(); ++i) {
      v = sup.add(v, sup.mul(static_cast<FiniteField::Elem>(c[i]), pw));
      pw = sup.mul(pw, static_cast<FiniteField::Elem>(root));
    }
    map_[x] = v;
    inverse_[v] = x;
  }
}

long long Embedding::preimage(FiniteField::Elem y) const {
  auto it = inverse_.find(y);
  return it == inverse_.end() ? -1 : static_cast<long long>(it->second);
}

FiniteField::Elem gf_embed(const FiniteField& sub, const FiniteField& sup, FiniteField::Elem x) {
  return Embedding(sub, sup)(x);
}

}  // namespace qcc
