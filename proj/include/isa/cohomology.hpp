#ifndef ISA_COHOMOLOGY_HPP
#define ISA_COHOMOLOGY_HPP

#include "isa/module_algebra.hpp"

namespace isa {

// Explicit finite-dimensional A-l1(E)-bimodule: one action matrix per basis
// element of A and per idempotent.  Columns act on coordinate vectors of X.
struct FiniteBimodule {
  int dim = 0;
  std::vector<RationalMatrix> a_left, a_right;  // indexed by S
  std::vector<RationalMatrix> e_left, e_right;  // indexed by position in S.idempotents
};

FiniteBimodule regular_bimodule(const FiniteInverseSemigroup& s);
FiniteBimodule zero_action_bimodule(const FiniteInverseSemigroup& s, int dim);

// Verifies multiplicativity of the actions and every action-compatibility
// identity as exact matrix identities on basis elements.  Throws
// IncompatibleModule on the first failure.
void validate_bimodule(const FiniteInverseSemigroup& s, const FiniteBimodule& x);

struct CohomologyResult {
  int dim_z = 0;   // module derivations A -> X^* (taken linear)
  int dim_b = 0;   // inner ones among them
  int dim_h1 = 0;  // dim_z - dim_b
};

// Derivations D : A -> X^* with the Leibniz rule on all basis pairs and the
// module conditions on all (idempotent, basis) pairs, as a subspace of
// Q^(n * dim X).  X^* carries the canonical dual actions (transposes).
Subspace derivation_space(const FiniteInverseSemigroup& s, const FiniteBimodule& x);

// Span of the inner maps D_f = a.f - f.a for f in X^*.
Subspace inner_derivation_space(const FiniteInverseSemigroup& s, const FiniteBimodule& x);

// dim_b counts the inner derivations that are module derivations, so the
// quotient is well-defined and dim_h1 >= 0.
CohomologyResult h1_dimension(const FiniteInverseSemigroup& s, const FiniteBimodule& x);

}  // namespace isa

#endif  // ISA_COHOMOLOGY_HPP
