#pragma once

#include <map>

#include "qcc/count_table.hpp"
#include "qcc/specialized.hpp"

namespace qcc {

struct CCInput {
  RootContext ctx;
  FormPtr form;
  CountTable counts;
};

// Context and form Lambda = -D B^-1 of an invertible quiver.
CCInput cc_input(const ValuedQuiver& q, CountTable counts);

// *e - e* - *[V], the exponent attached to e.
ExponentVec cc_exponent(const RootContext& ctx, const ExponentVec& e, const ExponentVec& dims);

// Sum over e of A_e X^(*e - e* - *[V]) for polynomial or normalized counts.
TorusElement cc_expand(const CCInput& in);
// Same sum for integer counts at q0, exact in Q(p^(1/N)).
SpecializedElement cc_expand_specialized(const CCInput& in);

// Rank 2 literal formula: sum q^(-d_e/2) |Gr_e| X^(-v1 + b v2 - b e2, c e1 - v2).
TorusElement cc_expand_rank2(long long b, long long c, const CountTable& counts);
FormPtr rank2_form();

// Closed forms for b = c = 2: X_(-n) (negative side) or X_(n+3).
TorusElement kronecker_closed_form(long long n, bool negative_side);

struct FFactor {
  ExponentVec g;
  std::map<ExponentVec, QScalar> F;  // exponent e of Z^(e) -> coefficient
};

// g = -*[V], F = sum q^(<e,e>/2) |Gr_e| Z^(e).
FFactor f_factor(const CCInput& in);
// X^(g) j(F) with j(Z^(e)) = X^(-B e).
TorusElement recombine(const FFactor& f, const IntMatrix& B, const FormPtr& form);
// Factors x as X^(g) j(F); throws NotBCompatible if an exponent leaves the lattice -B Z^n.
FFactor b_compatible_check(const TorusElement& x, const IntMatrix& B, const ExponentVec& g);
// Constant term 1, every other coefficient has nonnegative coefficients and only positive powers.
bool ffactor_positive(const FFactor& f);

// Expresses X_N (over Q) in the cluster mu_i of the initial one and compares with X_(S_i N)
// over mu_i Q. Both sides are multiplied on the right by a power of the new variable so
// that no inverse of a non-monomial is needed.
bool cc_verify_mutation(const ValuedQuiver& q, int i, const CountTable& counts_N, const CountTable& counts_SiN);

}  // namespace qcc
