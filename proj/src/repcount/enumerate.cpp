#include <cmath>
#include <numeric>

#include "qcc/errors.hpp"
#include "qcc/repcount.hpp"

namespace qcc {

namespace {

using Elem = FiniteField::Elem;

// One edge with matrices lifted into the top field.
struct LiftedArrow {
  int from, to;
  long long g, ri, rj;
  std::vector<FieldMatrix> mats;
};

struct Setup {
  explicit Setup(const ValuedRep& rep) : v(rep), tw(rep.p, rep.m, rep.quiver.D) {
    validate_rep(v);
    for (const auto& a : v.arrows) {
      long long g = std::gcd(v.quiver.D[a.from], v.quiver.D[a.to]);
      LiftedArrow la{a.from, a.to, g, v.quiver.D[a.from] / g, v.quiver.D[a.to] / g, {}};
      for (const auto& mat : a.matrices) {
        FieldMatrix lifted = mat;
        for (auto& row : lifted)
          for (auto& x : row) x = tw.embedding(g)(x);
        la.mats.push_back(std::move(lifted));
      }
      arrows.push_back(std::move(la));
    }
    q0 = 1;
    for (int i = 0; i < v.m; ++i) q0 *= v.p;
  }

  // Image of w in V_from under one matrix, as a vector in V_to.
  FieldVec apply(const LiftedArrow& a, const FieldMatrix& mat, const FieldVec& w) const {
    const FiniteField& L = tw.big();
    long long di = v.quiver.D[a.from], dj = v.quiver.D[a.to];
    FieldVec x(w.size() * a.ri);
    for (size_t s = 0; s < w.size(); ++s) {
      const FieldVec& c = tw.coordinates(di, a.g, w[s]);
      for (long long t = 0; t < a.ri; ++t) x[s * a.ri + t] = c[t];
    }
    FieldVec out(v.dims[a.to], 0);
    Elem th = tw.theta(dj);
    for (int s = 0; s < v.dims[a.to]; ++s) {
      Elem pw = 1;
      for (long long t = 0; t < a.rj; ++t) {
        Elem y = 0;
        for (size_t col = 0; col < x.size(); ++col) y = L.add(y, L.mul(mat[s * a.rj + t][col], x[col]));
        out[s] = L.add(out[s], L.mul(y, pw));
        pw = L.mul(pw, th);
      }
    }
    return out;
  }

  // theta^t b for every basis row b of M and t < r: spans M over the subfield.
  std::vector<FieldVec> subfield_span(const Subspace& M, int vertex, long long r) const {
    const FiniteField& L = tw.big();
    Elem th = tw.theta(v.quiver.D[vertex]);
    std::vector<FieldVec> out;
    for (const auto& row : M.rows) {
      Elem pw = 1;
      for (long long t = 0; t < r; ++t) {
        FieldVec w(row.size());
        for (size_t s = 0; s < row.size(); ++s) w[s] = L.mul(pw, row[s]);
        out.push_back(std::move(w));
        pw = L.mul(pw, th);
      }
    }
    return out;
  }

  bool contains(const Subspace& M, FieldVec y) const {
    const FiniteField& L = tw.big();
    for (int r = 0; r < M.dim(); ++r) {
      Elem c = y[M.pivots[r]];
      if (c == 0) continue;
      for (size_t s = 0; s < y.size(); ++s) y[s] = L.sub(y[s], L.mul(c, M.rows[r][s]));
    }
    for (Elem x : y)
      if (x != 0) return false;
    return true;
  }

  std::vector<Subspace> list_subspaces(int vertex, int k) const {
    std::vector<Subspace> out;
    for_each_subspace(tw.elements(v.quiver.D[vertex]), v.dims[vertex], k,
                      [&](const Subspace& s) { out.push_back(s); });
    return out;
  }

  const ValuedRep& v;
  FieldTower tw;
  std::vector<LiftedArrow> arrows;
  long long q0 = 1;
};

void check_budget(const ValuedRep& v, double budget) {
  double est = enumeration_estimate(v);
  if (est > budget)
    throw BudgetExceeded("enumeration needs about " + std::to_string(static_cast<long long>(est)) +
                             " candidates, budget is " + std::to_string(static_cast<long long>(budget)),
                         est);
}

CountTable make_table(const Setup& st, const std::vector<ExponentVec>& es,
                      const std::vector<unsigned long long>& counts) {
  CountTable t{CountMode::IntegerAtQ0, st.q0, dimension_vector(st.v), {}};
  for (size_t i = 0; i < es.size(); ++i)
    if (counts[i]) t.set(es[i], QScalar(BigInt(counts[i])));
  return t;
}

}  // namespace

double enumeration_estimate(const ValuedRep& v) {
  double q = 1;
  for (int i = 0; i < v.m; ++i) q *= v.p;
  double total = 0;
  for (const auto& e : box_vectors(dimension_vector(v))) {
    double prod = 1;
    for (int i = 0; i < v.quiver.n; ++i)
      prod *= grassmannian_size(std::pow(q, static_cast<double>(v.quiver.D[i])), v.dims[i], static_cast<int>(e[i]));
    total += prod;
  }
  return total;
}

CountTable enumerate_subreps(const ValuedRep& rep, double budget) {
  check_budget(rep, budget);
  Setup st(rep);
  const int n = rep.quiver.n;

  // subs[i][k]: k-subspaces of V_i; images[a][k][idx]: images of the subfield span of subs[from][k][idx]
  std::vector<std::vector<std::vector<Subspace>>> subs(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= rep.dims[i]; ++k) subs[i].push_back(st.list_subspaces(i, k));
  std::vector<std::vector<std::vector<std::vector<FieldVec>>>> images(st.arrows.size());
  std::vector<std::vector<int>> arrows_at(n);
  for (size_t ai = 0; ai < st.arrows.size(); ++ai) {
    const auto& a = st.arrows[ai];
    arrows_at[std::max(a.from, a.to)].push_back(static_cast<int>(ai));
    for (int k = 0; k <= rep.dims[a.from]; ++k) {
      std::vector<std::vector<FieldVec>> per_sub;
      for (const auto& M : subs[a.from][k]) {
        std::vector<FieldVec> imgs;
        for (const auto& w : st.subfield_span(M, a.from, a.ri))
          for (const auto& mat : a.mats) imgs.push_back(st.apply(a, mat, w));
        per_sub.push_back(std::move(imgs));
      }
      images[ai].push_back(std::move(per_sub));
    }
  }

  const std::vector<ExponentVec> es = box_vectors(dimension_vector(rep));
  std::vector<unsigned long long> counts(es.size(), 0);

#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < static_cast<long long>(es.size()); ++idx) {
    const ExponentVec& e = es[idx];
    std::vector<int> choice(n, 0);
    unsigned long long found = 0;
    auto fits = [&](int j) {
      for (int ai : arrows_at[j]) {
        const auto& a = st.arrows[ai];
        const Subspace& target = subs[a.to][e[a.to]][choice[a.to]];
        for (const auto& y : images[ai][e[a.from]][choice[a.from]])
          if (!st.contains(target, y)) return false;
      }
      return true;
    };
    // iterative depth-first search over vertices 0..n-1
    int depth = 0;
    choice[0] = -1;
    while (depth >= 0) {
      const auto& options = subs[depth][e[depth]];
      if (++choice[depth] >= static_cast<int>(options.size())) {
        --depth;
        continue;
      }
      if (!fits(depth)) continue;
      if (depth == n - 1) {
        ++found;
      } else {
        ++depth;
        choice[depth] = -1;
      }
    }
    counts[idx] = found;
  }
  return make_table(st, es, counts);
}

CountTable enumerate_subreps_reference(const ValuedRep& rep, double budget) {
  check_budget(rep, budget);
  Setup st(rep);
  const int n = rep.quiver.n;
  const std::vector<ExponentVec> es = box_vectors(dimension_vector(rep));
  std::vector<unsigned long long> counts(es.size(), 0);
  for (size_t idx = 0; idx < es.size(); ++idx) {
    const ExponentVec& e = es[idx];
    std::vector<std::vector<Subspace>> lists(n);
    for (int i = 0; i < n; ++i) lists[i] = st.list_subspaces(i, static_cast<int>(e[i]));
    std::vector<size_t> digit(n, 0);
    while (true) {
      bool ok = true;
      for (const auto& a : st.arrows) {
        const Subspace& src = lists[a.from][digit[a.from]];
        const Subspace& dst = lists[a.to][digit[a.to]];
        for (const auto& mat : a.mats) {
          for (const auto& w : st.subfield_span(src, a.from, a.ri))
            if (!st.contains(dst, st.apply(a, mat, w))) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
        if (!ok) break;
      }
      if (ok) ++counts[idx];
      int i = 0;
      while (i < n && ++digit[i] == lists[i].size()) digit[i++] = 0;
      if (i == n) break;
    }
  }
  return make_table(st, es, counts);
}

}  // namespace qcc
