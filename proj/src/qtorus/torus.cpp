#include "qcc/torus.hpp"

#include <algorithm>
#include <limits>

#include "qcc/errors.hpp"

namespace qcc {

SkewForm::SkewForm(IntMatrix scaled, long long d) : L_(std::move(scaled)), d_(d) {
  if (d_ <= 0) throw ValidationError("skew form denominator must be positive");
  if (L_.rows() != L_.cols()) throw ValidationError("skew form must be square");
  long long g = d_;
  for (int i = 0; i < L_.rows(); ++i)
    for (int j = 0; j < L_.cols(); ++j) {
      if (L_(i, j) != -L_(j, i)) throw ValidationError("form is not skew-symmetric");
      g = gcd_ll(g, L_(i, j));
    }
  if (g > 1) {
    d_ /= g;
    for (int i = 0; i < L_.rows(); ++i)
      for (int j = 0; j < L_.cols(); ++j) L_(i, j) /= g;
  }
}

SkewForm SkewForm::from_rational(const RationalMatrix& m) {
  int n = static_cast<int>(m.size());
  BigInt d = 1;
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) throw ValidationError("skew form must be square");
    for (const auto& v : row) d = boost::multiprecision::lcm(d, boost::multiprecision::denominator(v));
  }
  IntMatrix L(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BigRational v = m[i][j] * BigRational(d);
      L(i, j) = static_cast<long long>(boost::multiprecision::numerator(v));
    }
  return SkewForm(L, static_cast<long long>(d));
}

RationalMatrix SkewForm::to_rational() const {
  RationalMatrix m(n(), std::vector<BigRational>(n()));
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) m[i][j] = lambda(i, j);
  return m;
}

long long SkewForm::pair(const ExponentVec& e, const ExponentVec& f) const {
  long long s = 0;
  int m = n();
  for (int i = 0; i < m; ++i) {
    if (!e[i]) continue;
    long long row = 0;
    for (int j = 0; j < m; ++j) row += L_(i, j) * f[j];
    s += e[i] * row;
  }
  return s;
}

SkewForm SkewForm::transformed(const IntMatrix& E) const {
  return SkewForm(E.transpose() * L_ * E, d_);
}

SkewForm SkewForm::extended(int m) const {
  IntMatrix L(m, m);
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) L(i, j) = L_(i, j);
  return SkewForm(L, d_);
}

FormPtr make_form(SkewForm f) { return std::make_shared<const SkewForm>(std::move(f)); }

namespace {

bool same_form(const FormPtr& a, const FormPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

ExponentVec add_vec(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExponentVec sub_vec(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace

TorusElement::TorusElement(FormPtr form, const QScalar& c) : form_(std::move(form)) {
  if (!c.is_zero()) terms_.emplace(ExponentVec(form_->n(), 0), c);
}

TorusElement TorusElement::monomial(FormPtr form, const ExponentVec& a, const QScalar& c) {
  if (static_cast<int>(a.size()) != form->n())
    throw ValidationError("exponent length " + std::to_string(a.size()) + " does not match rank " +
                          std::to_string(form->n()));
  TorusElement x(std::move(form));
  if (!c.is_zero()) x.terms_.emplace(a, c);
  return x;
}

TorusElement TorusElement::generator(FormPtr form, int i) {
  ExponentVec a(form->n(), 0);
  a.at(i) = 1;
  return monomial(std::move(form), a);
}

QScalar TorusElement::coefficient(const ExponentVec& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? QScalar() : it->second;
}

void TorusElement::add_term(const ExponentVec& a, const QScalar& c) {
  if (static_cast<int>(a.size()) != rank()) throw ValidationError("exponent length does not match rank");
  if (c.is_zero()) return;
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    terms_.emplace(a, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TorusElement::check_same(const TorusElement& o) const {
  if (!same_form(form_, o.form_)) throw FormMismatch("torus elements over different skew forms");
}

TorusElement TorusElement::operator-() const {
  TorusElement r = *this;
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  check_same(o);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  check_same(o);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

TorusElement operator*(const TorusElement& x, const TorusElement& y) {
  x.check_same(y);
  TorusElement r(x.form_);
  const long long d = x.form_->d();
  for (const auto& [a, ca] : x.terms_)
    for (const auto& [b, cb] : y.terms_) {
      long long k = x.form_->pair(a, b);
      // q^(Lambda(a,b)/2) = q^(k/(2d))
      r.add_term(add_vec(a, b), (ca * cb) * QScalar::from_terms(d, {{k, BigInt(1)}}));
    }
  return r;
}

TorusElement operator*(const QScalar& c, const TorusElement& x) {
  TorusElement r(x.form_);
  if (c.is_zero()) return r;
  for (const auto& [a, v] : x.terms_) r.terms_.emplace(a, c * v);
  return r;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  return same_form(a.form_, b.form_) && a.terms_ == b.terms_;
}

TorusElement TorusElement::pow(unsigned e) const {
  TorusElement r(form_, QScalar(1)), base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

TorusElement TorusElement::monomial_inverse() const {
  if (!is_monomial()) throw NonExactDivision("inverse of a non-monomial element");
  const auto& [a, c] = *terms_.begin();
  const auto& [k, v] = c.terms().front();
  if (v != 1 && v != -1) throw NonExactDivision("inverse of a monomial with non-unit coefficient");
  ExponentVec neg(a.size());
  for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
  QScalar inv = QScalar::from_terms(c.denom_scale(), {{-k, v}});
  return monomial(form_, neg, inv);
}

TorusElement TorusElement::bar() const {
  TorusElement r(form_);
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, c.bar());
  return r;
}

TorusElement TorusElement::with_form(FormPtr form) const {
  if (form->n() != rank()) throw FormMismatch("with_form: rank mismatch");
  TorusElement r(std::move(form));
  r.terms_ = terms_;
  return r;
}

TorusElement TorusElement::map_exponents(FormPtr form,
                                         const std::function<ExponentVec(const ExponentVec&)>& f) const {
  TorusElement r(std::move(form));
  for (const auto& [a, c] : terms_) r.add_term(f(a), c);
  return r;
}

TorusElement add(const TorusElement& x, const TorusElement& y) { return x + y; }
TorusElement mul(const TorusElement& x, const TorusElement& y) { return x * y; }
TorusElement scalar_mul(const QScalar& c, const TorusElement& x) { return c * x; }

TorusElement exact_div_right(const TorusElement& numerator, const TorusElement& divisor) {
  if (divisor.is_zero()) throw NonExactDivision("division by zero");
  if (numerator.form() && divisor.form() && !(*numerator.form() == *divisor.form()))
    throw FormMismatch("exact_div_right: different skew forms");
  const FormPtr& form = divisor.form();
  TorusElement quot(form);
  if (numerator.is_zero()) return quot;
  const int n = form->n();
  // Newton polytopes add under products, so the quotient lives in this box.
  ExponentVec lo(n), hi(n), dlo(n, std::numeric_limits<long long>::max()),
      dhi(n, std::numeric_limits<long long>::min());
  ExponentVec nlo = dlo, nhi = dhi;
  for (const auto& [a, c] : divisor.terms())
    for (int i = 0; i < n; ++i) {
      dlo[i] = std::min(dlo[i], a[i]);
      dhi[i] = std::max(dhi[i], a[i]);
    }
  for (const auto& [a, c] : numerator.terms())
    for (int i = 0; i < n; ++i) {
      nlo[i] = std::min(nlo[i], a[i]);
      nhi[i] = std::max(nhi[i], a[i]);
    }
  for (int i = 0; i < n; ++i) {
    lo[i] = nlo[i] - dlo[i];
    hi[i] = nhi[i] - dhi[i];
    if (lo[i] > hi[i]) throw NonExactDivision("exact_div_right: Newton polytopes incompatible");
  }
  const auto& [eD, cD] = *divisor.terms().begin();
  const long long d = form->d();
  TorusElement rem = numerator;
  size_t steps = 0;
  const size_t cap = (numerator.size() + 1) * (divisor.size() + 1) + 100000;
  while (!rem.is_zero()) {
    if (++steps > cap) throw NonExactDivision("exact_div_right: iteration bound exceeded");
    const auto [eR, cR] = *rem.terms().begin();
    ExponentVec eq = sub_vec(eR, eD);
    for (int i = 0; i < n; ++i)
      if (eq[i] < lo[i] || eq[i] > hi[i])
        throw NonExactDivision("exact_div_right: remainder leaves the quotient support");
    QScalar twist = QScalar::from_terms(d, {{form->pair(eq, eD), BigInt(1)}});
    QScalar cq = cR.div_exact(cD * twist);
    TorusElement t = TorusElement::monomial(form, eq, cq);
    rem -= t * divisor;
    quot += t;
  }
  return quot;
}

}  // namespace qcc
