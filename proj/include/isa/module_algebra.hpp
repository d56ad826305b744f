#ifndef ISA_MODULE_ALGEBRA_HPP
#define ISA_MODULE_ALGEBRA_HPP

#include "isa/linalg.hpp"
#include "isa/semigroup.hpp"

namespace isa {

class AlgebraError : public std::runtime_error {
public:
  enum class Kind { CompatibilityViolation, IncompatibleModule };
  AlgebraError(Kind kind, const std::string& msg, std::vector<int> witness = {})
      : std::runtime_error(msg), kind(kind), witness(std::move(witness)) {}
  Kind kind;
  std::vector<int> witness;
};

// l1(S) together with its l1(E)-module structure: the right action is
// multiplication, the left action is the identity.
struct SemigroupAlgebra {
  FiniteInverseSemigroup s;

  int dim() const { return s.order; }
  int product_index(int a, int b) const { return s.table[a][b]; }

  // delta_e . delta_a  (identity action)
  int module_left_index(int /*e*/, int a) const { return a; }
  // delta_a . delta_e  (multiplication action)
  int module_right_index(int a, int e) const { return s.table[a][e]; }

  RatVector multiply(const RatVector& x, const RatVector& y) const;
};

// Builds the algebra and verifies every action-compatibility identity on
// basis triples.  Throws CompatibilityViolation naming (alpha, a, b) on the
// first failure (a construction bug, never expected on validated input).
SemigroupAlgebra build_algebra(const FiniteInverseSemigroup& s);

// l1(S x S) with the bimodule actions
//   delta_a . (delta_s (x) delta_t) = delta_{a s} (x) delta_t
//   (delta_s (x) delta_t) . delta_a = delta_s (x) delta_{t a}.
struct TensorSquare {
  const FiniteInverseSemigroup* s;
  int n;

  explicit TensorSquare(const FiniteInverseSemigroup& sg) : s(&sg), n(sg.order) {}

  int dim() const { return n * n; }
  int index(int a, int b) const { return a * n + b; }
  std::pair<int, int> unindex(int k) const { return {k / n, k % n}; }

  int left_target(int a, int k) const {
    auto [x, y] = unindex(k);
    return index(s->table[a][x], y);
  }
  int right_target(int k, int a) const {
    auto [x, y] = unindex(k);
    return index(x, s->table[y][a]);
  }

  RatVector act_left(int a, const RatVector& m) const;
  RatVector act_right(const RatVector& m, int a) const;
};

// I (span of delta_{(s e t, x)} - delta_{(s t, x)}), J = omega(I), and the
// annihilators, all in canonical subspace form.
struct IdealData {
  Subspace i;        // subspace of the n^2-dim tensor space
  Subspace j;        // subspace of the n-dim space
  Subspace i_perp;   // nullspace of i's basis matrix
  Subspace j_perp;   // nullspace of j's basis matrix
};

IdealData ideal_I(const FiniteInverseSemigroup& s);

// omega(delta_{(s,t)}) = delta_{s t} as an n x n^2 matrix.
RationalMatrix omega_matrix(const FiniteInverseSemigroup& s);

RatVector omega_apply(const FiniteInverseSemigroup& s, const RatVector& m);
// omega^*(h)(s, t) = h(s t).
RatVector omega_star_apply(const FiniteInverseSemigroup& s, const RatVector& h);

// True iff the smallest subspace containing the module defects
// delta_{(s e, x)} - delta_{(s, x)} and closed under both tensor-square
// actions equals ideal_I's span (canonical subspace comparison).
bool ideal_closure_crosscheck(const FiniteInverseSemigroup& s);

// True iff omega(u v) = omega(u) omega(v) on all basis quadruples, for the
// tensor-square product (a (x) b)(c (x) d) = a c (x) d b.  Holds exactly
// when the algebra is commutative.
bool omega_multiplicative_on_basis(const FiniteInverseSemigroup& s);

// True iff omega(a.x) = a omega(x) and omega(x.a) = omega(x) a on basis
// elements; this is the property the diagonal systems rely on.
bool omega_bimodule_map_on_basis(const FiniteInverseSemigroup& s);

}  // namespace isa

#endif  // ISA_MODULE_ALGEBRA_HPP
