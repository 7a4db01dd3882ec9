#pragma once

#include <functional>
#include <vector>

#include "qcc/finite_field.hpp"

namespace qcc {

using FieldVec = std::vector<FiniteField::Elem>;

// Reduced row echelon basis of a subspace; pivots[r] is the pivot column of rows[r].
struct Subspace {
  std::vector<int> pivots;
  std::vector<FieldVec> rows;
  int dim() const { return static_cast<int>(rows.size()); }
};

// Visits every k-dimensional subspace of S^n exactly once, where S is the
// field whose element codes are listed in `scalars` (0 and 1 must be codes 0 and 1).
void for_each_subspace(const std::vector<FiniteField::Elem>& scalars, int n, int k,
                       const std::function<void(const Subspace&)>& visit);

std::vector<Subspace> subspaces(const FiniteField& F, int n, int k);

// Number of k-subspaces of an n-space over a field with s elements, as a double.
double grassmannian_size(double s, int n, int k);

}  // namespace qcc
