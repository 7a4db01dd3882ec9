#pragma once

#include <vector>

#include "qcc/count_table.hpp"
#include "qcc/valued_rep.hpp"

namespace qcc {

inline constexpr double kDefaultBudget = 1e7;

// Sum over e of the product of Grassmannian sizes; the number of candidate tuples.
double enumeration_estimate(const ValuedRep& v);

// Counts of subrepresentations per dimension vector, integer mode at q0 = p^m.
// Pruned backtracking, parallel over e.
CountTable enumerate_subreps(const ValuedRep& v, double budget = kDefaultBudget);
// Serial reference: full product of subspace choices, each tuple checked from scratch.
CountTable enumerate_subreps_reference(const ValuedRep& v, double budget = kDefaultBudget);

// Normalized counts A_e of M = S_k1 ... S_kr (S_k(r+1)) over q, where seq = (k1, ..., k(r+1))
// and each S_k is a reflection. Throws NotAdmissible when a step is neither a sink nor a
// source on the support of the module it is applied to.
CountTable recursion_counts(const ValuedQuiver& q, const std::vector<int>& seq);
// sigma_k1 ... sigma_kr (alpha_k(r+1)).
ExponentVec reflected_dims(const ValuedQuiver& q, const std::vector<int>& seq);

enum class KroneckerKind { P, I };
// |Gr_(a,b)| of P_n or I_n for the Kronecker quiver with degree-2 valuations, in q.
QScalar kronecker_count(KroneckerKind kind, long long n, long long a, long long b);
CountTable kronecker_table(KroneckerKind kind, long long n);

}  // namespace qcc
