#pragma once

#include <array>
#include <random>
#include <utility>
#include <vector>

#include "qcc/seed.hpp"

namespace qcc {

// Triangulation of the (n+3)-gon with vertices 0..n+2 in counterclockwise order.
// Labels 0..n-1 are the diagonals; boundary edge (i, i+1 mod n+3) has label n+i.
class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(int n, std::vector<std::pair<int, int>> diagonals);  // validates
  static Triangulation fan(int n);  // all diagonals from vertex 0
  static Triangulation random(int n, std::mt19937_64& rng);

  int n() const { return n_; }
  int vertices() const { return n_ + 3; }
  const std::vector<std::pair<int, int>>& diagonals() const { return diag_; }
  // Endpoints of edge label i (0..2n+2), smaller vertex first.
  std::pair<int, int> edge(int label) const;
  int label_of(int a, int b) const;  // -1 if (a, b) is not an edge of T
  // Triangles as counterclockwise vertex triples.
  std::vector<std::array<int, 3>> triangles() const;

  friend bool operator==(const Triangulation& x, const Triangulation& y) { return x.n_ == y.n_ && x.diag_ == y.diag_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> diag_;
};

bool adjacent(int vertices, int a, int b);
// Interiors of segments (a,b) and (c,d) between polygon vertices intersect.
bool crosses(int vertices, std::pair<int, int> d1, std::pair<int, int> d2);

IntMatrix b_from_triangulation(const Triangulation& t);
Triangulation flip(const Triangulation& t, int k);

struct TPath {
  std::vector<int> vertices;  // a_0 .. a_l
  std::vector<int> labels;    // i_1 .. i_l
  friend bool operator==(const TPath& x, const TPath& y) { return x.vertices == y.vertices && x.labels == y.labels; }
};

bool is_tpath(const Triangulation& t, int a, int b, const TPath& p);
std::vector<TPath> enumerate_tpaths(const Triangulation& t, int a, int b);
// sum over odd k of alpha_(i_k) minus sum over even k, length 2n+3.
ExponentVec path_exponent(const Triangulation& t, const TPath& p);

enum class Frozen { Keep, One };
// Form on the n diagonal coordinates: -B_T^-1 when B_T is invertible, zero otherwise.
FormPtr diagonal_form(const Triangulation& t);
TorusElement tpath_expand(const Triangulation& t, int a, int b, Frozen frozen);
// Drops coordinates n.. of every exponent and reads the result over form.
TorusElement project_frozen(const TorusElement& x, const FormPtr& form);

// Shortest flip sequence from t to a triangulation containing (a, b), and the label
// that ends up on (a, b).
std::pair<std::vector<int>, int> flip_sequence_to(const Triangulation& t, int a, int b);

}  // namespace qcc
