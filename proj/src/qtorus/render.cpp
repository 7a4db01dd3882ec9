#include "qcc/render.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "qcc/errors.hpp"

namespace qcc {

std::string monomial_text(const ExponentVec& a) {
  std::ostringstream os;
  os << "X^(";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

namespace {

bool negative_single(const QScalar& c) {
  return c.is_monomial() && c.terms().front().second < 0;
}

template <class ScalarFn, class MonoFn>
std::string render_element(const TorusElement& x, ScalarFn scalar, MonoFn mono, const char* times) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c0] : x.terms()) {
    QScalar c = c0;
    if (negative_single(c)) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (!c.is_one()) {
      if (c.is_monomial())
        os << scalar(c) << times;
      else
        os << "(" << scalar(c) << ")" << times;
    }
    os << mono(a);
  }
  return os.str();
}

}  // namespace

std::string to_text(const TorusElement& x) {
  return render_element(
      x, [](const QScalar& c) { return c.to_string(); }, monomial_text, "*");
}

std::string to_latex(const TorusElement& x) {
  auto mono = [](const ExponentVec& a) {
    std::ostringstream os;
    os << "X^{(";
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ")}";
    return os.str();
  };
  return render_element(
      x, [](const QScalar& c) { return c.to_latex(); }, mono, "");
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, int rank) : s_(s), rank_(rank) {}

  struct Term {
    QScalar coeff = QScalar(1);
    std::optional<ExponentVec> mono;
  };

  std::vector<Term> parse_sum(bool allow_mono) {
    std::vector<Term> out;
    skip();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      Term t = parse_product(allow_mono);
      if (sign < 0) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      skip();
      char c = peek();
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
        continue;
      }
      break;
    }
    return out;
  }

  void expect_end() {
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError("parse error at position " + std::to_string(pos_) + ": " + msg + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  BigInt parse_uint() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(s_.substr(start, pos_ - start));
  }
  long long parse_int() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    BigInt v = parse_uint();
    if (v > BigInt(1) << 62) fail("integer too large");
    long long r = static_cast<long long>(v);
    return neg ? -r : r;
  }
  bool starts_factor() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'X' || c == '(';
  }

  Term parse_product(bool allow_mono) {
    Term t;
    bool any = false;
    while (true) {
      if (!starts_factor()) {
        if (!any) fail("expected a term");
        break;
      }
      any = true;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= QScalar(parse_uint());
      } else if (c == 'q') {
        ++pos_;
        long long num = 1, den = 1;
        if (peek() == '^') {
          ++pos_;
          if (peek() == '(') {
            ++pos_;
            num = parse_int();
            if (peek() == '/') {
              ++pos_;
              den = parse_int();
              if (den <= 0) fail("exponent denominator must be positive");
            }
            expect(')');
          } else {
            num = parse_int();
          }
        }
        t.coeff *= QScalar::q_power(num, den);
      } else if (c == 'X') {
        if (!allow_mono) fail("monomial not allowed here");
        if (t.mono) fail("two monomials in one term");
        ++pos_;
        ExponentVec a(rank_, 0);
        if (peek() == '_') {
          ++pos_;
          long long k = parse_int();
          if (k < 1 || k > rank_) fail("generator index out of range");
          a[k - 1] = 1;
        } else {
          expect('^');
          expect('(');
          for (int i = 0; i < rank_; ++i) {
            if (i) expect(',');
            a[i] = parse_int();
          }
          expect(')');
        }
        t.mono = a;
      } else {  // '('
        ++pos_;
        auto inner = parse_sum(false);
        expect(')');
        QScalar s;
        for (auto& x : inner) s += x.coeff;
        t.coeff *= s;
      }
      if (peek() == '*') {
        ++pos_;
        if (!starts_factor()) fail("dangling '*'");
      }
    }
    return t;
  }

  const std::string& s_;
  int rank_;
  size_t pos_ = 0;
};

}  // namespace

TorusElement parse_element(const FormPtr& form, const std::string& text) {
  Parser p(text, form->n());
  auto terms = p.parse_sum(true);
  p.expect_end();
  TorusElement x(form);
  for (auto& t : terms) {
    if (t.coeff.is_zero() && !t.mono) continue;
    x.add_term(t.mono ? *t.mono : ExponentVec(form->n(), 0), t.coeff);
  }
  return x;
}

QScalar parse_qscalar(const std::string& text) {
  Parser p(text, 0);
  auto terms = p.parse_sum(false);
  p.expect_end();
  QScalar s;
  for (auto& t : terms) s += t.coeff;
  return s;
}

}  // namespace qcc
