#ifndef ISA_CORPUS_HPP
#define ISA_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "isa/json_io.hpp"

namespace isa {

// Pinned regression corpus: cyclic groups 2..6 and the Klein four-group,
// semilattice chains 2..4 and the four-element diamond, a Clifford chain of
// two copies of Z2, Brandt semigroups of index 2 over the trivial, Z2 and
// Z3 groups, and the symmetric inverse monoids on 1..3 points.
std::vector<FiniteInverseSemigroup> builtin_corpus();

struct MemberRecord {
  std::string name;
  bool valid = false;
  std::string error;

  int order = 0;
  int idempotent_count = 0;
  int group_image_order = 0;
  int dim_ideal = -1;        // dim I in the tensor square
  int dim_ideal_image = -1;  // dim J = dim omega(I)
  bool mean_feasible = false;
  bool classical_diagonal = false;
  bool module_diagonal = false;
  int h1_regular = -1;
  bool pushforward_ok = false;
  bool crosscheck_ok = false;
  long wall_ms = 0;

  std::optional<MeanCertificate> mean;
  std::optional<DiagonalCertificate> module_cert;
  std::optional<DiagonalCertificate> classical_cert;
  std::optional<DiagonalCertificate> pushforward_cert;
  std::optional<CohomologyResult> h1;
  std::optional<IdealData> ideals;

  // The always-expected facts: mean feasible, module diagonal feasible,
  // pushforward valid, closure cross-check true, and a feasible classical
  // witness passing the module system.
  bool invariants_hold() const;
};

MemberRecord analyze_member(const FiniteInverseSemigroup& s);

Json record_to_json(const MemberRecord& r, bool with_certificates = true);

// Full pipeline over a list of semigroups; ok is false iff some member is
// invalid or fails invariants_hold().
struct CorpusReport {
  std::vector<MemberRecord> members;
  bool ok = true;
};

CorpusReport run_corpus(const std::vector<FiniteInverseSemigroup>& members);
Json report_to_json(const CorpusReport& r, bool with_certificates = true);

}  // namespace isa

#endif  // ISA_CORPUS_HPP
