#include <cstdlib>

#include "qcc/errors.hpp"
#include "qcc/repcount.hpp"

namespace qcc {

namespace {

void check_sequence(const ValuedQuiver& q, const std::vector<int>& seq) {
  if (seq.empty()) throw NotAdmissible("empty reflection sequence");
  for (int k : seq)
    if (k < 0 || k >= q.n) throw NotAdmissible("direction " + std::to_string(k + 1) + " out of range");
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (seq[i] == seq[i + 1]) throw NotAdmissible("repeated consecutive direction " + std::to_string(seq[i] + 1));
}

// quivers[j] = mu_seq[j-1] ... mu_seq[0] Q
std::vector<IntMatrix> mutated_chain(const ValuedQuiver& q, const std::vector<int>& seq) {
  std::vector<IntMatrix> out{q.B};
  for (size_t j = 0; j + 1 < seq.size(); ++j) out.push_back(matrix_mutation(out.back(), seq[j]));
  return out;
}

ExponentVec simple_root(int n, int k) {
  ExponentVec a(n, 0);
  a[k] = 1;
  return a;
}

}  // namespace

ExponentVec reflected_dims(const ValuedQuiver& q, const std::vector<int>& seq) {
  check_sequence(q, seq);
  auto chain = mutated_chain(q, seq);
  ExponentVec dims = simple_root(q.n, seq.back());
  for (int j = static_cast<int>(seq.size()) - 1; j >= 1; --j)
    dims = reflect(root_context(ValuedQuiver(chain[j], q.D)), seq[j - 1], dims);
  return dims;
}

CountTable recursion_counts(const ValuedQuiver& q, const std::vector<int>& seq) {
  check_sequence(q, seq);
  auto chain = mutated_chain(q, seq);
  const int n = q.n;

  CountTable known{CountMode::NormalizedA, 0, simple_root(n, seq.back()), {}};
  known.set(ExponentVec(n, 0), 1);
  known.set(known.dims, 1);

  for (int j = static_cast<int>(seq.size()) - 1; j >= 1; --j) {
    const int i = seq[j - 1];
    const IntMatrix& B = chain[j];
    std::vector<bool> support(n);
    for (int l = 0; l < n; ++l) support[l] = known.dims[l] > 0 || l == i;
    const bool source = is_source_on(B, i, support);
    if (!source && !is_sink_on(B, i, support))
      throw NotAdmissible("vertex " + std::to_string(i + 1) + " is neither a sink nor a source at step " +
                          std::to_string(j));
    const ExponentVec m = reflect(root_context(ValuedQuiver(B, q.D)), i, known.dims);
    for (long long x : m)
      if (x < 0) throw NotAdmissible("reflection at vertex " + std::to_string(i + 1) + " leaves the positive cone");

    auto shift_of = [&](const ExponentVec& e) {
      long long s = 0;
      for (int l = 0; l < n; ++l)
        if (l != i) s += std::abs(B(i, l)) * e[l];
      return s;
    };
    auto binom = [&](long long top, long long c) { return qbinom_sym(top, c, q.D[i], 2); };

    CountTable next{CountMode::NormalizedA, 0, m, {}};
    if (source) {
      for (const auto& e : box_vectors(m)) {
        const long long s = shift_of(e);
        QScalar val;
        ExponentVec f = e;
        for (long long c = 0; s - e[i] + c <= known.dims[i]; ++c) {
          f[i] = s - e[i] + c;
          if (f[i] < 0) continue;
          QScalar a = known.at(f);
          if (!a.is_zero()) val += binom(m[i] - s, c) * a;
        }
        next.set(e, val);
      }
    } else {
      ExponentVec outer = m;
      outer[i] = 0;
      for (auto e : box_vectors(outer)) {
        const long long s = shift_of(e);
        const long long top = known.dims[i] - s;
        for (long long t = m[i]; t >= 0; --t) {
          ExponentVec f = e;
          f[i] = s - t;
          QScalar val = (f[i] >= 0 && f[i] <= known.dims[i]) ? known.at(f) : QScalar();
          for (long long c = 1; t + c <= m[i]; ++c) {
            ExponentVec g = e;
            g[i] = t + c;
            QScalar a = next.at(g);
            if (!a.is_zero()) val -= binom(top, c) * a;
          }
          ExponentVec target = e;
          target[i] = t;
          next.set(target, val);
        }
      }
    }
    known = std::move(next);
  }
  return known;
}

}  // namespace qcc
