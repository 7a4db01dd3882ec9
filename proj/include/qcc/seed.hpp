#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcc/torus.hpp"

namespace qcc {

// Vertices are 0-based in the library; the CLI and file formats are 1-based.
struct ValuedQuiver {
  ValuedQuiver() = default;
  ValuedQuiver(IntMatrix B, std::vector<long long> D);  // validates DB skew-symmetric

  int n = 0;
  IntMatrix B;
  std::vector<long long> D;

  // B = [[0,b],[-c,0]], D = diag(c,b)
  static ValuedQuiver rank2(long long b, long long c);
  friend bool operator==(const ValuedQuiver& x, const ValuedQuiver& y) {
    return x.B == y.B && x.D == y.D;
  }
};

// Quivers used throughout: "A2", "C2", "G2", "Kronecker", "rank4".
ValuedQuiver named_quiver(const std::string& name);

struct CompatiblePair {
  IntMatrix B;                 // square, invertible
  std::vector<long long> D;    // length B.rows()
  FormPtr lambda;
  int mutable_n = 0;           // directions 0..mutable_n-1 may be mutated
};

SkewForm lambda_from_B(const ValuedQuiver& q);
CompatiblePair principal_completion(const ValuedQuiver& q);
// lambda_from_B when B is invertible, principal_completion otherwise.
CompatiblePair compatible_pair(const ValuedQuiver& q);
// B^T Lambda == diag(D) exactly.
bool is_compatible(const CompatiblePair& p);

IntMatrix matrix_mutation(const IntMatrix& B, int k);
SkewForm lambda_mutation(const CompatiblePair& p, int k);
CompatiblePair pair_mutation(const CompatiblePair& p, int k);

struct QuantumSeed {
  CompatiblePair pair;           // current exchange matrix and form
  std::vector<TorusElement> vars;  // over the initial torus
  std::vector<int> history;
  FormPtr initial_form;
};

QuantumSeed initial_seed(const CompatiblePair& p);
TorusElement frame_monomial(const QuantumSeed& s, const ExponentVec& c);
QuantumSeed mutate_seed(const QuantumSeed& s, int k);
QuantumSeed mutate_sequence(QuantumSeed s, const std::vector<int>& seq);
// Mutate along seq from the initial seed of q and return variable a0.
TorusElement variable_by_label(const ValuedQuiver& q, int a0, const std::vector<int>& seq);
// Y_i Y_j == q^(lambda'_ij) Y_j Y_i for all current variables.
bool check_commutation(const QuantumSeed& s);

bool is_sink(const IntMatrix& B, int i);
bool is_source(const IntMatrix& B, int i);
// Same tests restricted to the full subquiver on the given vertex set.
bool is_sink_on(const IntMatrix& B, int i, const std::vector<bool>& support);
bool is_source_on(const IntMatrix& B, int i, const std::vector<bool>& support);
bool is_admissible(const ValuedQuiver& q, const std::vector<int>& seq);

struct RootContext {
  IntMatrix B;
  IntMatrix C;      // Cartan counterpart
  IntMatrix gram;   // <alpha_i, alpha_j>
  std::vector<long long> D;
  int n() const { return B.rows(); }
};

RootContext root_context(const ValuedQuiver& q);
long long euler_form(const RootContext& ctx, const ExponentVec& e, const ExponentVec& f);
// (*e, e*) with *e_i = <alpha_i, e>/d_i and e*_i = <e, alpha_i>/d_i.
std::pair<ExponentVec, ExponentVec> star_vectors(const RootContext& ctx, const ExponentVec& e);
// sigma_i(e) = e - (sum_j c_ij e_j) alpha_i
ExponentVec reflect(const RootContext& ctx, int i, const ExponentVec& e);
// -alpha_m for the rank-2 labeling with alpha_0 = -alpha_2, alpha_3 = -alpha_1.
ExponentVec rank2_root(long long b, long long c, long long m, long long max_steps = 10000);

}  // namespace qcc
