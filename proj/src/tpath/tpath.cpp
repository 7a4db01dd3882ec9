#include "qcc/tpath.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "qcc/errors.hpp"

namespace qcc {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

std::pair<int, int> ordered(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

// x strictly inside the counterclockwise arc from a to b
bool inside_arc(int n, int a, int b, int x) {
  int dx = mod(x - a, n), db = mod(b - a, n);
  return dx > 0 && dx < db;
}

}  // namespace

bool adjacent(int vertices, int a, int b) { return mod(a - b, vertices) == 1 || mod(b - a, vertices) == 1; }

bool crosses(int vertices, std::pair<int, int> d1, std::pair<int, int> d2) {
  auto [a, b] = d1;
  auto [c, d] = d2;
  if (a == c || a == d || b == c || b == d) return false;
  return inside_arc(vertices, a, b, c) != inside_arc(vertices, a, b, d);
}

Triangulation::Triangulation(int n, std::vector<std::pair<int, int>> diagonals) : n_(n) {
  if (n < 0) throw ValidationError("triangulation rank must be nonnegative");
  if (static_cast<int>(diagonals.size()) != n)
    throw ValidationError("a triangulation of the " + std::to_string(n + 3) + "-gon has " + std::to_string(n) +
                          " diagonals");
  const int N = n + 3;
  for (auto& [a, b] : diagonals) {
    if (a < 0 || b < 0 || a >= N || b >= N || a == b) throw ValidationError("diagonal endpoint out of range");
    if (adjacent(N, a, b)) throw ValidationError("(" + std::to_string(a) + "," + std::to_string(b) + ") is a boundary edge");
    std::tie(a, b) = ordered(a, b);
  }
  for (size_t i = 0; i < diagonals.size(); ++i)
    for (size_t j = i + 1; j < diagonals.size(); ++j) {
      if (diagonals[i] == diagonals[j]) throw ValidationError("repeated diagonal");
      if (crosses(N, diagonals[i], diagonals[j])) throw ValidationError("diagonals cross");
    }
  diag_ = std::move(diagonals);
}

Triangulation Triangulation::fan(int n) {
  std::vector<std::pair<int, int>> d;
  for (int k = 2; k <= n + 1; ++k) d.emplace_back(0, k);
  return Triangulation(n, d);
}

Triangulation Triangulation::random(int n, std::mt19937_64& rng) {
  Triangulation t = fan(n);
  if (n == 0) return t;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int s = 0; s < 4 * n + 4; ++s) t = flip(t, pick(rng));
  return t;
}

std::pair<int, int> Triangulation::edge(int label) const {
  if (label < 0 || label >= 2 * n_ + 3) throw ValidationError("edge label out of range");
  if (label < n_) return diag_[label];
  int i = label - n_;
  return ordered(i, (i + 1) % vertices());
}

int Triangulation::label_of(int a, int b) const {
  const int N = vertices();
  auto e = ordered(a, b);
  if (adjacent(N, a, b)) {
    // edge (i, i+1 mod N)
    int i = (e.first == 0 && e.second == N - 1) ? N - 1 : e.first;
    return n_ + i;
  }
  for (int k = 0; k < n_; ++k)
    if (diag_[k] == e) return k;
  return -1;
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
  std::vector<std::array<int, 3>> out;
  const int N = vertices();
  for (int x = 0; x < N; ++x)
    for (int y = x + 1; y < N; ++y) {
      if (label_of(x, y) < 0) continue;
      for (int z = y + 1; z < N; ++z)
        if (label_of(y, z) >= 0 && label_of(x, z) >= 0) out.push_back({x, y, z});
    }
  return out;
}

IntMatrix b_from_triangulation(const Triangulation& t) {
  const int n = t.n(), N = t.vertices();
  IntMatrix B(n, n);
  for (const auto& tri : t.triangles()) {
    for (int s = 0; s < 3; ++s)
      for (int r = 0; r < 3; ++r) {
        if (s == r) continue;
        // sides opposite to tri[s] and tri[r] share the third vertex v
        int v = tri[3 - s - r];
        int u = tri[r], w = tri[s];  // side i = (v,u), side j = (v,w)
        int i = t.label_of(v, u), j = t.label_of(v, w);
        if (i >= n || j >= n) continue;
        // rotating (v,u) counterclockwise about v reaches (v,w)
        B(i, j) = mod(u - v, N) < mod(w - v, N) ? 1 : -1;
      }
  }
  return B;
}

Triangulation flip(const Triangulation& t, int k) {
  if (k < 0 || k >= t.n()) throw ValidationError("flip direction out of range");
  auto [a, b] = t.diagonals()[k];
  std::vector<int> apex;
  for (const auto& tri : t.triangles()) {
    bool has_a = std::find(tri.begin(), tri.end(), a) != tri.end();
    bool has_b = std::find(tri.begin(), tri.end(), b) != tri.end();
    if (has_a && has_b)
      for (int v : tri)
        if (v != a && v != b) apex.push_back(v);
  }
  if (apex.size() != 2) throw std::logic_error("flip: diagonal does not bound two triangles");
  auto d = t.diagonals();
  d[k] = ordered(apex[0], apex[1]);
  return Triangulation(t.n(), d);
}

namespace {

// Distances from a of the two endpoints of an edge crossing (a, b), one per side.
std::pair<int, int> crossing_key(int N, int a, int b, std::pair<int, int> e) {
  int l = inside_arc(N, a, b, e.first) ? e.first : e.second;
  int r = l == e.first ? e.second : e.first;
  return {mod(l - a, N), mod(a - r, N)};
}

// Crossing point of e1 with (a,b) strictly closer to a than that of e2 (edges of T never cross).
bool closer(int N, int a, int b, std::pair<int, int> e1, std::pair<int, int> e2) {
  auto k1 = crossing_key(N, a, b, e1), k2 = crossing_key(N, a, b, e2);
  return k1 != k2 && k1.first <= k2.first && k1.second <= k2.second;
}

void check_target(const Triangulation& t, int a, int b) {
  const int N = t.vertices();
  if (a < 0 || b < 0 || a >= N || b >= N || a == b) throw ValidationError("diagonal endpoint out of range");
  if (adjacent(N, a, b))
    throw AdjacentVertices("vertices " + std::to_string(a) + " and " + std::to_string(b) + " are adjacent");
}

}  // namespace

bool is_tpath(const Triangulation& t, int a, int b, const TPath& p) {
  const int N = t.vertices();
  const size_t len = p.labels.size();
  if (p.vertices.size() != len + 1 || p.vertices.front() != a || p.vertices.back() != b) return false;
  for (int v : p.vertices)
    if (v < 0 || v >= N) return false;
  for (size_t k = 0; k < len; ++k) {
    int l = p.labels[k];
    if (l < 0 || l >= 2 * t.n() + 3) return false;
    if (t.edge(l) != ordered(p.vertices[k], p.vertices[k + 1])) return false;
  }
  std::vector<int> sorted = p.labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (len % 2 == 0) return false;
  const std::pair<int, int> D{a, b};
  for (size_t k = 1; k < len; k += 2)
    if (!crosses(N, D, t.edge(p.labels[k]))) return false;
  for (size_t j = 0; j < len; ++j)
    for (size_t k = j + 1; k < len; ++k) {
      auto ej = t.edge(p.labels[j]), ek = t.edge(p.labels[k]);
      if (crosses(N, D, ej) && crosses(N, D, ek) && !closer(N, a, b, ej, ek)) return false;
    }
  return true;
}

std::vector<TPath> enumerate_tpaths(const Triangulation& t, int a, int b) {
  check_target(t, a, b);
  const int N = t.vertices(), m = 2 * t.n() + 3;
  const std::pair<int, int> D{a, b};
  std::vector<std::vector<int>> incident(N);
  std::vector<bool> crossing(m);
  for (int l = 0; l < m; ++l) {
    auto [u, v] = t.edge(l);
    incident[u].push_back(l);
    incident[v].push_back(l);
    crossing[l] = crosses(N, D, t.edge(l));
  }
  std::vector<TPath> out;
  TPath cur{{a}, {}};
  std::vector<bool> used(m, false);
  int last_cross = -1;
  auto dfs = [&](auto&& self) -> void {
    int v = cur.vertices.back();
    if (v == b && cur.labels.size() % 2 == 1) out.push_back(cur);
    const size_t k = cur.labels.size() + 1;  // position of the next edge
    for (int l : incident[v]) {
      if (used[l]) continue;
      if (k % 2 == 0 && !crossing[l]) continue;
      if (crossing[l] && last_cross >= 0 && !closer(N, a, b, t.edge(last_cross), t.edge(l))) continue;
      auto [x, y] = t.edge(l);
      int w = x == v ? y : x;
      int saved = last_cross;
      if (crossing[l]) last_cross = l;
      used[l] = true;
      cur.labels.push_back(l);
      cur.vertices.push_back(w);
      self(self);
      cur.vertices.pop_back();
      cur.labels.pop_back();
      used[l] = false;
      last_cross = saved;
    }
  };
  dfs(dfs);
  return out;
}

ExponentVec path_exponent(const Triangulation& t, const TPath& p) {
  ExponentVec a(2 * t.n() + 3, 0);
  for (size_t k = 0; k < p.labels.size(); ++k) a[p.labels[k]] += k % 2 == 0 ? 1 : -1;
  return a;
}

FormPtr diagonal_form(const Triangulation& t) {
  const int n = t.n();
  IntMatrix B = b_from_triangulation(t);
  if (n > 0 && determinant(B) != 0) return make_form(lambda_from_B(ValuedQuiver(B, std::vector<long long>(n, 1))));
  return make_form(SkewForm::zero(n));
}

TorusElement project_frozen(const TorusElement& x, const FormPtr& form) {
  const int n = form->n();
  return x.map_exponents(form, [n](const ExponentVec& a) { return ExponentVec(a.begin(), a.begin() + n); });
}

TorusElement tpath_expand(const Triangulation& t, int a, int b, Frozen frozen) {
  FormPtr base = diagonal_form(t);
  FormPtr full = make_form(base->extended(2 * t.n() + 3));
  TorusElement x(full);
  for (const auto& p : enumerate_tpaths(t, a, b)) x += TorusElement::monomial(full, path_exponent(t, p));
  return frozen == Frozen::Keep ? x : project_frozen(x, base);
}

std::pair<std::vector<int>, int> flip_sequence_to(const Triangulation& t, int a, int b) {
  check_target(t, a, b);
  const auto target = ordered(a, b);
  std::map<std::vector<std::pair<int, int>>, std::vector<int>> seen{{t.diagonals(), {}}};
  std::deque<Triangulation> queue{t};
  while (!queue.empty()) {
    Triangulation cur = queue.front();
    queue.pop_front();
    const std::vector<int> seq = seen[cur.diagonals()];
    for (int k = 0; k < cur.n(); ++k)
      if (cur.diagonals()[k] == target) return {seq, k};
    for (int k = 0; k < cur.n(); ++k) {
      Triangulation nxt = flip(cur, k);
      if (seen.count(nxt.diagonals())) continue;
      auto s = seq;
      s.push_back(k);
      seen.emplace(nxt.diagonals(), s);
      queue.push_back(nxt);
    }
  }
  throw std::logic_error("flip graph search did not reach the diagonal");
}

}  // namespace qcc
