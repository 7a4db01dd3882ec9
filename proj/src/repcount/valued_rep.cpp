#include "qcc/valued_rep.hpp"

#include <numeric>
#include <set>

#include "qcc/errors.hpp"

namespace qcc {

long long arrow_multiplicity(const ValuedQuiver& q, int i, int j) {
  if (q.B(i, j) <= 0) return 0;
  return std::gcd(std::abs(q.B(i, j)), std::abs(q.B(j, i)));
}

ExponentVec dimension_vector(const ValuedRep& v) { return ExponentVec(v.dims.begin(), v.dims.end()); }

void validate_rep(const ValuedRep& v) {
  const ValuedQuiver& q = v.quiver;
  if (static_cast<int>(v.dims.size()) != q.n) throw ValidationError("dims length does not match rank");
  for (int d : v.dims)
    if (d < 0) throw ValidationError("negative dimension");
  std::set<std::pair<int, int>> seen;
  for (const auto& a : v.arrows) {
    if (a.from < 0 || a.from >= q.n || a.to < 0 || a.to >= q.n) throw ValidationError("arrow endpoint out of range");
    long long mult = arrow_multiplicity(q, a.from, a.to);
    if (mult == 0)
      throw ValidationError("no arrow " + std::to_string(a.from + 1) + "->" + std::to_string(a.to + 1) + " in the quiver");
    if (!seen.insert({a.from, a.to}).second) throw ValidationError("edge listed twice");
    if (static_cast<long long>(a.matrices.size()) != mult)
      throw ValidationError("edge " + std::to_string(a.from + 1) + "->" + std::to_string(a.to + 1) + " needs " +
                            std::to_string(mult) + " matrices");
    long long g = std::gcd(q.D[a.from], q.D[a.to]);
    size_t rows = static_cast<size_t>(v.dims[a.to] * (q.D[a.to] / g));
    size_t cols = static_cast<size_t>(v.dims[a.from] * (q.D[a.from] / g));
    unsigned long long field_size = 1;
    for (long long i = 0; i < v.m * g; ++i) field_size *= static_cast<unsigned long long>(v.p);
    for (const auto& mat : a.matrices) {
      if (mat.size() != rows) throw ValidationError("arrow matrix has wrong number of rows");
      for (const auto& row : mat) {
        if (row.size() != cols) throw ValidationError("arrow matrix has wrong number of columns");
        for (auto x : row)
          if (x >= field_size) throw ValidationError("matrix entry outside the subfield");
      }
    }
  }
}

FieldTower::FieldTower(int p, int m, const std::vector<long long>& D) : p_(p), m_(m) {
  top_ = 1;
  for (long long d : D) top_ = std::lcm(top_, d);
  if (m_ * top_ > 64) throw ValidationError("field tower too large");
  big_ = FiniteField(p_, static_cast<int>(m_ * top_));
  for (long long t = 1; t <= top_; ++t) {
    if (top_ % t) continue;
    Level lv;
    lv.field = FiniteField(p_, static_cast<int>(m_ * t));
    lv.embed = Embedding(lv.field, big_);
    lv.theta = lv.embed(lv.field.generator());
    levels_.emplace(t, std::move(lv));
  }
  for (const auto& [t, lt] : levels_)
    for (const auto& [g, lg] : levels_)
      if (t % g == 0) build_coords(t, g);
}

const FieldTower::Level& FieldTower::level(long long t) const {
  auto it = levels_.find(t);
  if (it == levels_.end()) throw ValidationError("degree " + std::to_string(t) + " not in the field tower");
  return it->second;
}

void FieldTower::build_coords(long long t, long long g) {
  long long r = t / g;
  const FieldVec& sub = elements(g);
  FiniteField::Elem th = theta(t);
  FieldVec basis(r);
  basis[0] = 1;
  for (long long u = 1; u < r; ++u) basis[u] = big_.mul(basis[u - 1], th);
  Coords c;
  c.index.assign(big_.size(), -1);
  std::vector<size_t> digit(r, 0);
  while (true) {
    FieldVec coords(r);
    FiniteField::Elem y = 0;
    for (long long u = 0; u < r; ++u) {
      coords[u] = sub[digit[u]];
      y = big_.add(y, big_.mul(coords[u], basis[u]));
    }
    if (c.index[y] != -1) throw std::logic_error("field basis is not independent");
    c.index[y] = static_cast<int>(c.rows.size());
    c.rows.push_back(std::move(coords));
    long long u = 0;
    while (u < r && ++digit[u] == sub.size()) digit[u++] = 0;
    if (u == r) break;
  }
  coords_.emplace(std::make_pair(t, g), std::move(c));
}

const FieldVec& FieldTower::coordinates(long long t, long long g, FiniteField::Elem y) const {
  auto it = coords_.find({t, g});
  if (it == coords_.end()) throw ValidationError("no coordinate table for this field pair");
  int idx = it->second.index[y];
  if (idx < 0) throw ValidationError("element outside the field of coordinates");
  return it->second.rows[idx];
}

namespace {

// Images (in the top field) of the K_ij-basis vectors of V_i, one per column.
using Images = std::vector<FieldVec>;

RepArrow arrow_from_images(const FieldTower& tw, const ValuedQuiver& q, const std::vector<int>& dims, int i, int j,
                           const std::vector<Images>& copies) {
  long long g = std::gcd(q.D[i], q.D[j]);
  long long rj = q.D[j] / g;
  RepArrow a{i, j, {}};
  for (const auto& imgs : copies) {
    FieldMatrix mat(dims[j] * rj, FieldVec(imgs.size(), 0));
    for (size_t col = 0; col < imgs.size(); ++col)
      for (int s = 0; s < dims[j]; ++s) {
        const FieldVec& c = tw.coordinates(q.D[j], g, imgs[col][s]);
        for (long long t = 0; t < rj; ++t) {
          long long pre = tw.embedding(g).preimage(c[t]);
          mat[s * rj + t][col] = static_cast<FiniteField::Elem>(pre);
        }
      }
    a.matrices.push_back(std::move(mat));
  }
  return a;
}

}  // namespace

std::vector<std::string> example_rep_names(const std::string& quiver) {
  if (quiver == "A2") return {"S1", "S2", "I1"};
  if (quiver == "C2") return {"S1", "S2", "I1", "I2"};
  if (quiver == "G2") return {"S1", "S2", "I1", "I2", "I3", "I4"};
  if (quiver == "Kronecker") return {"P0", "P1", "P2", "P3", "I0", "I1", "I2", "I3"};
  throw ValidationError("no example representations for quiver " + quiver);
}

ValuedRep build_example_rep(const std::string& quiver, const std::string& name, int p, int m) {
  ValuedRep v;
  v.quiver = named_quiver(quiver);
  v.p = p;
  v.m = m;
  FieldTower tw(p, m, v.quiver.D);
  const FiniteField& L = tw.big();
  auto unknown = [&]() { return ValidationError("unknown representation " + name + " for quiver " + quiver); };
  if (name.size() < 2) throw unknown();

  if (quiver == "Kronecker") {
    char kind = name[0];
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(name.substr(1), &used);
      if (used != name.size() - 1 || n < 0) throw unknown();
    } catch (const std::logic_error&) {
      throw unknown();
    }
    if (kind != 'P' && kind != 'I') throw unknown();
    int d1 = kind == 'P' ? n : n + 1, d2 = kind == 'P' ? n + 1 : n;
    v.dims = {d1, d2};
    std::vector<Images> copies(2, Images(d1, FieldVec(d2, 0)));
    for (int i = 0; i < d1; ++i) {
      if (kind == 'P') {
        copies[0][i][i] = 1;
        copies[1][i][i + 1] = 1;
      } else {
        if (i < n) copies[0][i][i] = 1;
        if (i > 0) copies[1][i][i - 1] = 1;
      }
    }
    if (d1 > 0 && d2 > 0) v.arrows.push_back(arrow_from_images(tw, v.quiver, v.dims, 0, 1, copies));
    validate_rep(v);
    return v;
  }

  std::map<std::string, std::vector<int>> dims;
  if (quiver == "A2") {
    dims = {{"S1", {1, 0}}, {"S2", {0, 1}}, {"I1", {1, 1}}};
  } else if (quiver == "C2") {
    dims = {{"S1", {1, 0}}, {"S2", {0, 1}}, {"I1", {1, 1}}, {"I2", {2, 1}}};
  } else if (quiver == "G2") {
    dims = {{"S1", {1, 0}}, {"S2", {0, 1}}, {"I1", {1, 1}}, {"I2", {2, 1}}, {"I3", {3, 1}}, {"I4", {3, 2}}};
  } else {
    throw ValidationError("no example representations for quiver " + quiver);
  }
  auto it = dims.find(name);
  if (it == dims.end()) throw unknown();
  v.dims = it->second;
  if (v.dims[0] > 0 && v.dims[1] > 0) {
    // V_1 = k^v1 (r_1 = 1); e_t goes to theta^t, and for G2's I4 to (theta^t, theta^(t|k|)).
    FiniteField::Elem th = tw.theta(v.quiver.D[1]);
    unsigned long long k_size = tw.field(1).size();
    Images imgs;
    for (int t = 0; t < v.dims[0]; ++t) {
      FieldVec w(v.dims[1], 0);
      FiniteField::Elem x = L.pow(th, static_cast<unsigned long long>(t));
      w[0] = x;
      if (v.dims[1] == 2) w[1] = L.pow(x, k_size);
      imgs.push_back(w);
    }
    v.arrows.push_back(arrow_from_images(tw, v.quiver, v.dims, 0, 1, {imgs}));
  }
  validate_rep(v);
  return v;
}

ValuedRep dual_rep(const ValuedRep& v) {
  ValuedRep d;
  IntMatrix B(v.quiver.n, v.quiver.n);
  for (int i = 0; i < v.quiver.n; ++i)
    for (int j = 0; j < v.quiver.n; ++j) B(i, j) = -v.quiver.B(i, j);
  d.quiver = ValuedQuiver(B, v.quiver.D);
  d.p = v.p;
  d.m = v.m;
  d.dims = v.dims;
  for (const auto& a : v.arrows) {
    if (v.quiver.D[a.from] != v.quiver.D[a.to]) throw ValidationError("dual_rep needs equal valuations on every edge");
    RepArrow r{a.to, a.from, {}};
    for (const auto& mat : a.matrices) {
      size_t rows = mat.size(), cols = v.dims[a.from] * 1;
      FieldMatrix t(cols, FieldVec(rows, 0));
      for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) t[j][i] = mat[i][j];
      r.matrices.push_back(std::move(t));
    }
    d.arrows.push_back(std::move(r));
  }
  validate_rep(d);
  return d;
}

}  // namespace qcc
