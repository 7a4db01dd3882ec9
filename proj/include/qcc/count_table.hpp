#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcc/seed.hpp"

namespace qcc {

enum class CountMode { IntegerAtQ0, Polynomial, NormalizedA };

std::string mode_name(CountMode m);
CountMode parse_mode(const std::string& s);

// Grassmannian counts indexed by dimension vector; only nonzero entries are stored.
// IntegerAtQ0 entries are constant scalars counted over a field with q0 elements.
struct CountTable {
  CountMode mode = CountMode::Polynomial;
  long long q0 = 0;
  ExponentVec dims;
  std::map<ExponentVec, QScalar> entries;

  QScalar at(const ExponentVec& e) const;
  void set(const ExponentVec& e, const QScalar& v);
  friend bool operator==(const CountTable& a, const CountTable& b) {
    return a.mode == b.mode && a.q0 == b.q0 && a.dims == b.dims && a.entries == b.entries;
  }
};

// All e with 0 <= e <= dims, lexicographically ascending.
std::vector<ExponentVec> box_vectors(const ExponentVec& dims);

// A_e = q^(-<e, dims - e>/2) |Gr_e| and back.
CountTable normalized_from_polynomial(const CountTable& t, const RootContext& ctx);
CountTable polynomial_from_normalized(const CountTable& t, const RootContext& ctx);
// Evaluate a polynomial (or normalized) table at q = q0.
CountTable specialize_table(const CountTable& t, const RootContext& ctx, long long q0);

}  // namespace qcc
