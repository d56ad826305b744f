#ifndef ISA_LP_HPP
#define ISA_LP_HPP

#include <optional>

#include "isa/linalg.hpp"

namespace isa {

// Decides {x >= 0 componentwise : eq x = rhs} by phase-1 simplex with
// Bland's anti-cycling rule over exact rationals.  Returns a feasible point
// or nullopt iff the polyhedron is empty.  Never approximate.
std::optional<RatVector> lp_feasible(const RationalMatrix& eq, const RatVector& rhs);

}  // namespace isa

#endif  // ISA_LP_HPP
