#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace qcc {

// GF(p^m) with elements encoded as sum c_i p^i for the residue sum c_i x^i
// modulo the lexicographically smallest monic irreducible polynomial.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  FiniteField() = default;
  FiniteField(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  Elem size() const { return size_; }
  // c_0..c_{m-1}; the leading coefficient 1 is implicit
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<size_t>(a) * size_ + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    unsigned s = log_[a] + log_[b];
    if (s >= size_ - 1) s -= size_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, unsigned long long e) const;
  // class of x
  Elem generator() const { return gen_; }

  std::vector<int> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<int>& c) const;

 private:
  Elem add_slow(Elem a, Elem b) const;
  Elem mul_slow(Elem a, Elem b) const;

  int p_ = 2, m_ = 1;
  Elem size_ = 2;
  std::vector<int> modulus_;
  Elem gen_ = 0;
  std::vector<Elem> exp_;
  std::vector<unsigned> log_;
  std::vector<Elem> add_table_;
  std::vector<Elem> neg_table_;
};

FiniteField gf_make(int p, int m);
bool is_irreducible(int p, const std::vector<int>& monic_low_coeffs);

// Ring embedding sub -> sup sending x to the smallest root of sub's modulus.
class Embedding {
 public:
  Embedding() = default;
  Embedding(const FiniteField& sub, const FiniteField& sup);
  FiniteField::Elem operator()(FiniteField::Elem x) const { return map_[x]; }
  // -1 if y is not in the image
  long long preimage(FiniteField::Elem y) const;
  const std::vector<FiniteField::Elem>& table() const { return map_; }

 private:
  std::vector<FiniteField::Elem> map_;
  std::map<FiniteField::Elem, FiniteField::Elem> inverse_;
};

FiniteField::Elem gf_embed(const FiniteField& sub, const FiniteField& sup, FiniteField::Elem x);

}  // namespace qcc
