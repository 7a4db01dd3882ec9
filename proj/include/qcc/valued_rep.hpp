#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcc/finite_field.hpp"
#include "qcc/seed.hpp"
#include "qcc/subspaces.hpp"

namespace qcc {

using FieldMatrix = std::vector<FieldVec>;

// Maps for one edge i -> j. Each matrix acts on K_ij-coordinates: V_i has
// coordinates indexed s*r_i + t for the vector theta_i^t e_s, r_i = d_i / gcd(d_i, d_j),
// where theta_i is the class of x in F_(d_i). Entries are K_ij elements in
// K_ij's own encoding.
struct RepArrow {
  int from = 0, to = 0;
  std::vector<FieldMatrix> matrices;
};

struct ValuedRep {
  ValuedQuiver quiver;
  int p = 2, m = 1;  // base field F = GF(p^m)
  std::vector<int> dims;
  std::vector<RepArrow> arrows;
};

// gcd(|b_ij|, |b_ji|) when b_ij > 0, else 0.
long long arrow_multiplicity(const ValuedQuiver& q, int i, int j);
void validate_rep(const ValuedRep& v);
ExponentVec dimension_vector(const ValuedRep& v);

// F_(t) = GF(p^(m t)) for every t dividing lcm(D), all embedded in the top field.
class FieldTower {
 public:
  FieldTower(int p, int m, const std::vector<long long>& D);

  const FiniteField& big() const { return big_; }
  long long top_degree() const { return top_; }
  const FiniteField& field(long long t) const { return level(t).field; }
  const Embedding& embedding(long long t) const { return level(t).embed; }
  // element codes of F_(t) inside the top field, in F_(t)'s own code order
  const FieldVec& elements(long long t) const { return level(t).embed.table(); }
  // image of the class of x of F_(t)
  FiniteField::Elem theta(long long t) const { return level(t).theta; }
  // coordinates of y in F_(t) over F_(g) in the basis theta_t^0..theta_t^(t/g-1)
  const FieldVec& coordinates(long long t, long long g, FiniteField::Elem y) const;

 private:
  struct Level {
    FiniteField field;
    Embedding embed;
    FiniteField::Elem theta = 0;
  };
  struct Coords {
    std::vector<int> index;  // big code -> row, -1 outside F_(t)
    std::vector<FieldVec> rows;
  };
  const Level& level(long long t) const;
  void build_coords(long long t, long long g);

  int p_, m_;
  long long top_;
  FiniteField big_;
  std::map<long long, Level> levels_;
  std::map<std::pair<long long, long long>, Coords> coords_;
};

// Names per quiver: A2 {S1,S2,I1}; C2 {S1,S2,I1,I2}; G2 {S1,S2,I1..I4};
// Kronecker {Pn, In} for n >= 0.
ValuedRep build_example_rep(const std::string& quiver, const std::string& name, int p, int m = 1);
std::vector<std::string> example_rep_names(const std::string& quiver);
// Representation of the opposite quiver with transposed maps (needs K_ij = K_i = K_j).
ValuedRep dual_rep(const ValuedRep& v);

}  // namespace qcc
