#include "isa/corpus.hpp"

#include <chrono>

#include "isa/cohomology.hpp"
#include "isa/diagonals.hpp"

namespace isa {

std::vector<FiniteInverseSemigroup> builtin_corpus() {
  std::vector<FiniteInverseSemigroup> out;
  for (int k = 2; k <= 6; ++k) out.push_back(gen_cyclic_group(k));
  {
    auto c2 = gen_cyclic_group(2);
    auto klein = gen_product(c2, c2);
    klein.name = "klein_4";
    out.push_back(std::move(klein));
  }
  for (int k = 2; k <= 4; ++k) out.push_back(gen_semilattice_chain(k));
  {
    auto c2 = gen_semilattice_chain(2);
    auto diamond = gen_product(c2, c2);
    diamond.name = "diamond";
    out.push_back(std::move(diamond));
  }
  out.push_back(gen_clifford(gen_cyclic_group(2), 2));
  out.push_back(gen_brandt(gen_cyclic_group(1), 2));
  out.push_back(gen_brandt(gen_cyclic_group(2), 2));
  out.push_back(gen_brandt(gen_cyclic_group(3), 2));
  for (int k = 1; k <= 3; ++k) out.push_back(gen_symmetric_inverse(k));
  return out;
}

bool MemberRecord::invariants_hold() const {
  if (!valid) return false;
  if (!mean_feasible || !module_diagonal || !pushforward_ok || !crosscheck_ok) return false;
  if (classical_diagonal && classical_cert && !classical_cert->residual_report.empty())
    return false;
  return true;
}

MemberRecord analyze_member(const FiniteInverseSemigroup& s) {
  MemberRecord r;
  r.name = s.name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.order = s.order;
    r.idempotent_count = static_cast<int>(s.idempotents.size());
    build_algebra(s);

    GroupImage g = quotient_group(s);
    r.group_image_order = g.order();

    IdealData ideals = ideal_I(s);
    r.dim_ideal = ideals.i.dim();
    r.dim_ideal_image = ideals.j.dim();

    auto mean = find_invariant_mean(s);
    r.mean_feasible = mean.has_value();

    auto module_cert = find_module_diagonal(s, ideals);
    r.module_diagonal = module_cert.has_value();

    auto classical_cert = find_classical_diagonal(s);
    r.classical_diagonal = classical_cert.has_value();

    if (module_cert) {
      r.pushforward_cert = pushforward_diagonal(s, g, module_cert->m);
      r.pushforward_ok = r.pushforward_cert->residual_report.empty();
    }

    r.crosscheck_ok = ideal_closure_crosscheck(s);

    auto h1 = h1_dimension(s, regular_bimodule(s));
    r.h1 = h1;
    r.h1_regular = h1.dim_h1;

    r.mean = std::move(mean);
    r.module_cert = std::move(module_cert);
    r.classical_cert = std::move(classical_cert);
    r.ideals = std::move(ideals);
    r.valid = true;
  } catch (const std::exception& e) {
    r.valid = false;
    r.error = e.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

Json record_to_json(const MemberRecord& r, bool with_certificates) {
  Json j;
  j["name"] = r.name;
  if (!r.valid) {
    j["valid"] = false;
    j["error"] = r.error;
    return j;
  }
  j["valid"] = true;
  j["order"] = r.order;
  j["idempotents"] = r.idempotent_count;
  j["group_image_order"] = r.group_image_order;
  j["dim_I"] = r.dim_ideal;
  j["dim_J"] = r.dim_ideal_image;
  j["mean_feasible"] = r.mean_feasible;
  j["classical_diagonal"] = r.classical_diagonal;
  j["module_diagonal"] = r.module_diagonal;
  j["h1_regular"] = r.h1_regular;
  j["pushforward_ok"] = r.pushforward_ok;
  j["crosscheck_ok"] = r.crosscheck_ok;
  j["wall_ms"] = r.wall_ms;
  if (with_certificates) {
    Json certs;
    if (r.mean) certs["mean"] = mean_to_json(*r.mean);
    if (r.module_cert) certs["module_diagonal"] = diagonal_to_json(*r.module_cert);
    if (r.classical_cert) certs["classical_diagonal"] = diagonal_to_json(*r.classical_cert);
    if (r.pushforward_cert) certs["pushforward"] = diagonal_to_json(*r.pushforward_cert);
    if (r.h1) certs["h1_regular"] = cohomology_to_json(*r.h1);
    if (r.ideals) certs["ideals"] = ideals_to_json(*r.ideals);
    j["certificates"] = std::move(certs);
  }
  return j;
}

CorpusReport run_corpus(const std::vector<FiniteInverseSemigroup>& members) {
  CorpusReport report;
  for (const auto& s : members) {
    report.members.push_back(analyze_member(s));
    if (!report.members.back().invariants_hold()) report.ok = false;
  }
  return report;
}

Json report_to_json(const CorpusReport& r, bool with_certificates) {
  Json j;
  Json members = Json::array();
  for (const auto& m : r.members) members.push_back(record_to_json(m, with_certificates));
  j["members"] = std::move(members);
  j["ok"] = r.ok;
  return j;
}

}  // namespace isa
