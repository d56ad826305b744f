#ifndef ISA_DIAGONALS_HPP
#define ISA_DIAGONALS_HPP

#include <optional>
#include <string>

#include "isa/group_image.hpp"
#include "isa/mean.hpp"
#include "isa/module_algebra.hpp"

namespace isa {

enum class DiagonalKind { Classical, Module };

struct DiagonalViolation {
  std::string condition;  // "commutator", "unit-left", "unit-right", "annihilator", "omega-unit"
  int s = -1;             // acting element
  int i = -1, j = -1;     // coordinate / basis-functional index, when meaningful
  Rational residual;
};

// Rational vector M over S x S (flattened s*n + t) with an exact residual
// report; the certificate is valid iff the report is empty.
struct DiagonalCertificate {
  DiagonalKind kind;
  RatVector m;  // length n^2
  std::vector<DiagonalViolation> residual_report;
};

class DiagonalError : public std::runtime_error {
public:
  enum class Kind { ConstructionFailed, PushforwardInvalid };
  DiagonalError(Kind kind, const std::string& msg, std::vector<DiagonalViolation> residuals)
      : std::runtime_error(msg), kind(kind), residuals(std::move(residuals)) {}
  Kind kind;
  std::vector<DiagonalViolation> residuals;
};

// Checks a.M - M.a = 0 for every basis a, and omega(M) * delta_s = delta_s
// and delta_s * omega(M) = delta_s for every s (the right-unit family is
// skipped when two_sided is false).
std::vector<DiagonalViolation> verify_classical_diagonal(const FiniteInverseSemigroup& s,
                                                         const RatVector& m,
                                                         bool two_sided = true);

// Checks <M, s.f - f.s> = 0 for every s and every basis functional f of
// I-perp, and <M, s.(omega^*(h))> = h(s) for every s and basis h of J-perp.
std::vector<DiagonalViolation> verify_module_diagonal(const FiniteInverseSemigroup& s,
                                                      const IdealData& ideals,
                                                      const RatVector& m);

// Exact solvability of the classical virtual-diagonal system.  Existence
// requires omega(M) to act as a two-sided identity of the algebra; the
// weaker left-only system is available via two_sided = false.
std::optional<DiagonalCertificate> find_classical_diagonal(const FiniteInverseSemigroup& s,
                                                           bool two_sided = true);

std::optional<DiagonalCertificate> find_module_diagonal(const FiniteInverseSemigroup& s,
                                                        const IdealData& ideals);
std::optional<DiagonalCertificate> find_module_diagonal(const FiniteInverseSemigroup& s);

// Dimension of the affine solution set (nullopt when inconsistent).
std::optional<int> classical_solution_dimension(const FiniteInverseSemigroup& s,
                                                bool two_sided = true);
std::optional<int> module_solution_dimension(const FiniteInverseSemigroup& s);

// M = sum_s mu(s) delta_{(s*, s)} from a right-invariant mean.  The result
// must verify as a module diagonal with <M, 1 (x) 1> = 1; a nonempty
// residual report throws ConstructionFailed.
DiagonalCertificate diagonal_from_mean(const FiniteInverseSemigroup& s,
                                       const MeanCertificate& mean);

// (pi (x) pi)(M) over G_S x G_S, verified as a classical diagonal for the
// group algebra of G_S.  Throws PushforwardInvalid on nonzero residuals.
DiagonalCertificate pushforward_diagonal(const FiniteInverseSemigroup& s, const GroupImage& g,
                                         const RatVector& m);

}  // namespace isa

#endif  // ISA_DIAGONALS_HPP
