#ifndef ISA_MEAN_HPP
#define ISA_MEAN_HPP

#include <optional>

#include "isa/linalg.hpp"
#include "isa/semigroup.hpp"

namespace isa {

enum class MeanSide { Left, Right, Both };

// Nonnegative rational vector mu with sum 1, invariant under the requested
// translations: sum_{t : s t = u} mu(t) = mu(u) (left) and
// sum_{t : t s = u} mu(t) = mu(u) (right), for all s, u.
struct MeanCertificate {
  RatVector mu;
};

struct MeanViolation {
  enum class Kind { Negative, Normalization, Invariance };
  Kind kind;
  MeanSide side = MeanSide::Both;  // meaningful for Invariance only
  int s = -1;                      // translating element (Invariance) or index (Negative)
  int u = -1;
  Rational residual;
};

// Decides amenability of S by exact LP feasibility over the simplex with
// the invariance equalities.  Any feasible vertex is returned.
std::optional<MeanCertificate> find_invariant_mean(const FiniteInverseSemigroup& s,
                                                   MeanSide side = MeanSide::Both);

// Lists every violated constraint with its exact residual; empty iff valid.
// Throws std::invalid_argument on a length mismatch.
std::vector<MeanViolation> verify_mean(const FiniteInverseSemigroup& s, const RatVector& mu,
                                       MeanSide side = MeanSide::Both);

}  // namespace isa

#endif  // ISA_MEAN_HPP
