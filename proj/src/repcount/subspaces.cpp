#include "qcc/subspaces.hpp"

#include <cmath>

#include "qcc/errors.hpp"

namespace qcc {

void for_each_subspace(const std::vector<FiniteField::Elem>& scalars, int n, int k,
                       const std::function<void(const Subspace&)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  const size_t s = scalars.size();
  while (true) {
    // free slots: (row, col) with col > pivot and col not a pivot
    std::vector<std::pair<int, int>> slots;
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    for (int r = 0; r < k; ++r)
      for (int c = piv[r] + 1; c < n; ++c)
        if (!is_piv[c]) slots.emplace_back(r, c);
    Subspace sub;
    sub.pivots = piv;
    sub.rows.assign(k, FieldVec(n, 0));
    for (int r = 0; r < k; ++r) sub.rows[r][piv[r]] = 1;
    std::vector<size_t> digit(slots.size(), 0);
    while (true) {
      for (size_t t = 0; t < slots.size(); ++t) sub.rows[slots[t].first][slots[t].second] = scalars[digit[t]];
      visit(sub);
      size_t t = 0;
      while (t < digit.size() && ++digit[t] == s) digit[t++] = 0;
      if (t == digit.size()) break;
    }
    // next pivot combination
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

std::vector<Subspace> subspaces(const FiniteField& F, int n, int k) {
  std::vector<FiniteField::Elem> scalars(F.size());
  for (FiniteField::Elem x = 0; x < F.size(); ++x) scalars[x] = x;
  std::vector<Subspace> out;
  for_each_subspace(scalars, n, k, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

double grassmannian_size(double s, int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int j = 1; j <= k; ++j) r *= (std::pow(s, n - k + j) - 1) / (std::pow(s, j) - 1);
  return std::round(r);
}

}  // namespace qcc
