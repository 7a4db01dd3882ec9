#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qcc/matrix.hpp"
#include "qcc/qscalar.hpp"

namespace qcc {

using ExponentVec = std::vector<long long>;

// Skew form Lambda stored as the integer matrix L = d * Lambda.
class SkewForm {
 public:
  SkewForm() = default;
  SkewForm(IntMatrix scaled, long long d);  // validates and reduces d
  static SkewForm zero(int n) { return SkewForm(IntMatrix(n, n), 1); }
  static SkewForm from_rational(const RationalMatrix& m);

  int n() const { return L_.rows(); }
  long long d() const { return d_; }
  const IntMatrix& scaled() const { return L_; }
  BigRational lambda(int i, int j) const { return BigRational(L_(i, j)) / d_; }
  RationalMatrix to_rational() const;
  // d * Lambda(e, f)
  long long pair(const ExponentVec& e, const ExponentVec& f) const;
  // Lambda' = E^T Lambda E
  SkewForm transformed(const IntMatrix& E) const;
  // Block-diagonal extension by zeros up to rank m.
  SkewForm extended(int m) const;

  friend bool operator==(const SkewForm& a, const SkewForm& b) {
    return a.d_ == b.d_ && a.L_ == b.L_;
  }
  friend bool operator!=(const SkewForm& a, const SkewForm& b) { return !(a == b); }

 private:
  IntMatrix L_;
  long long d_ = 1;
};

using FormPtr = std::shared_ptr<const SkewForm>;
FormPtr make_form(SkewForm f);

struct LexDescending {
  bool operator()(const ExponentVec& a, const ExponentVec& b) const { return a > b; }
};

// Element of the based quantum torus with basis X^(a):
//   X^(a) X^(b) = q^(Lambda(a,b)/2) X^(a+b).
// X^(a) = q^(-1/2 sum_{i<j} lambda_ij a_i a_j) X_1^a_1 ... X_n^a_n, which equals
// q^(1/2 sum_{i<j} a_i a_j lambda_ji) X_1^a_1 ... X_n^a_n by skew-symmetry.
class TorusElement {
 public:
  using TermMap = std::map<ExponentVec, QScalar, LexDescending>;

  TorusElement() = default;
  explicit TorusElement(FormPtr form) : form_(std::move(form)) {}
  TorusElement(FormPtr form, const QScalar& c);  // constant

  static TorusElement monomial(FormPtr form, const ExponentVec& a, const QScalar& c = 1);
  static TorusElement generator(FormPtr form, int i);  // X_i, 0-based

  const FormPtr& form() const { return form_; }
  int rank() const { return form_ ? form_->n() : 0; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1 && terms_.begin()->second.is_monomial(); }
  QScalar coefficient(const ExponentVec& a) const;

  void add_term(const ExponentVec& a, const QScalar& c);

  TorusElement operator-() const;
  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator*(const QScalar& c, const TorusElement& x);
  friend bool operator==(const TorusElement& a, const TorusElement& b);
  friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

  TorusElement pow(unsigned e) const;
  // Inverse of a single-term element with unit coefficient +-q^s.
  TorusElement monomial_inverse() const;
  TorusElement bar() const;
  // Same terms over another form of equal rank.
  TorusElement with_form(FormPtr form) const;
  // Maps each exponent through f and sums the results over a new form.
  TorusElement map_exponents(FormPtr form, const std::function<ExponentVec(const ExponentVec&)>& f) const;

 private:
  void check_same(const TorusElement& o) const;
  FormPtr form_;
  TermMap terms_;
};

TorusElement add(const TorusElement& x, const TorusElement& y);
TorusElement mul(const TorusElement& x, const TorusElement& y);
TorusElement scalar_mul(const QScalar& c, const TorusElement& x);

// Q with numerator = Q * divisor; throws NonExactDivision.
TorusElement exact_div_right(const TorusElement& numerator, const TorusElement& divisor);

}  // namespace qcc
