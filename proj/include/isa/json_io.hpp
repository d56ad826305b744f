#ifndef ISA_JSON_IO_HPP
#define ISA_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "isa/cohomology.hpp"
#include "isa/diagonals.hpp"
#include "isa/group_image.hpp"
#include "isa/mean.hpp"
#include "isa/module_algebra.hpp"
#include "isa/semigroup.hpp"

namespace isa {

using Json = nlohmann::ordered_json;

class MalformedInput : public std::runtime_error {
public:
  explicit MalformedInput(const std::string& msg) : std::runtime_error(msg) {}
};

// Semigroup file: {"name": string, "order": n, "table": [[int]], "labels": [string]?}
// with 0-based indices.  Star and idempotents are always recomputed.
FiniteInverseSemigroup load_semigroup_json(const Json& j);
FiniteInverseSemigroup load_semigroup_file(const std::string& path);
Json semigroup_to_json(const FiniteInverseSemigroup& s);
void save_semigroup_file(const FiniteInverseSemigroup& s, const std::string& path);

// Certificate encodings.  Rationals are exact integer strings, never floats.
Json mean_to_json(const MeanCertificate& mean);                 // {"mu": [["num","den"], ...]}
Json diagonal_to_json(const DiagonalCertificate& cert);         // {"kind", "M", "residuals"}
Json cohomology_to_json(const CohomologyResult& r);
Json group_image_to_json(const GroupImage& g);                  // {"classes", "quotient_table"}
Json subspace_to_json(const Subspace& s);                       // {"ambient", "dim", "basis"}
Json ideals_to_json(const IdealData& ideals);

}  // namespace isa

#endif  // ISA_JSON_IO_HPP
