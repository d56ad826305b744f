#include "isa/json_io.hpp"

#include <fstream>

namespace isa {

FiniteInverseSemigroup load_semigroup_json(const Json& j) {
  if (!j.is_object()) throw MalformedInput("semigroup file must be a JSON object");
  if (!j.contains("table") || !j["table"].is_array())
    throw MalformedInput("missing or non-array \"table\"");
  CayleyTable table;
  for (const auto& row : j["table"]) {
    if (!row.is_array()) throw MalformedInput("table rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw MalformedInput("table entries must be integers");
      r.push_back(x.get<int>());
    }
    table.push_back(std::move(r));
  }
  const int n = static_cast<int>(table.size());
  if (n == 0) throw MalformedInput("empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw MalformedInput("table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw MalformedInput("table entry out of range");
  }
  if (j.contains("order") && (!j["order"].is_number_integer() || j["order"].get<int>() != n))
    throw MalformedInput("\"order\" does not match the table size");
  std::string name = j.value("name", std::string{});
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != n)
      throw MalformedInput("\"labels\" must list one string per element");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw MalformedInput("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return validate(table, std::move(name), std::move(labels));
}

FiniteInverseSemigroup load_semigroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  return load_semigroup_json(j);
}

Json semigroup_to_json(const FiniteInverseSemigroup& s) {
  Json j;
  j["name"] = s.name;
  j["order"] = s.order;
  j["table"] = s.table;
  if (!s.labels.empty()) j["labels"] = s.labels;
  return j;
}

void save_semigroup_file(const FiniteInverseSemigroup& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << semigroup_to_json(s).dump(2) << "\n";
}

Json mean_to_json(const MeanCertificate& mean) {
  Json mu = Json::array();
  for (const auto& x : mean.mu) mu.push_back(Json::array({x.num_string(), x.den_string()}));
  Json j;
  j["mu"] = std::move(mu);
  return j;
}

Json diagonal_to_json(const DiagonalCertificate& cert) {
  Json j;
  j["kind"] = cert.kind == DiagonalKind::Classical ? "classical" : "module";
  Json m = Json::array();
  const int total = static_cast<int>(cert.m.size());
  int n = 0;
  while (n * n < total) ++n;
  for (int k = 0; k < total; ++k)
    if (!cert.m[k].is_zero())
      m.push_back(Json::array({k / n, k % n, cert.m[k].to_fraction_string()}));
  j["M"] = std::move(m);
  Json res = Json::array();
  for (const auto& v : cert.residual_report) {
    Json r;
    r["condition"] = v.condition;
    r["s"] = v.s;
    r["i"] = v.i;
    r["j"] = v.j;
    r["residual"] = v.residual.to_fraction_string();
    res.push_back(std::move(r));
  }
  j["residuals"] = std::move(res);
  return j;
}

Json cohomology_to_json(const CohomologyResult& r) {
  Json j;
  j["dim_Z"] = r.dim_z;
  j["dim_B"] = r.dim_b;
  j["dim_H1"] = r.dim_h1;
  j["derivations"] = "linear";
  return j;
}

Json group_image_to_json(const GroupImage& g) {
  Json j;
  j["classes"] = g.classes;
  j["quotient_table"] = g.table;
  return j;
}

Json subspace_to_json(const Subspace& s) {
  Json j;
  j["ambient"] = s.ambient();
  j["dim"] = s.dim();
  Json basis = Json::array();
  for (int i = 0; i < s.basis().rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < s.basis().cols(); ++c) {
      const Rational& v = s.basis().at(i, c);
      if (!v.is_zero()) row.push_back(Json::array({c, v.to_fraction_string()}));
    }
    basis.push_back(std::move(row));
  }
  j["basis"] = std::move(basis);
  return j;
}

Json ideals_to_json(const IdealData& ideals) {
  Json j;
  j["dim_I"] = ideals.i.dim();
  j["dim_J"] = ideals.j.dim();
  j["dim_I_perp"] = ideals.i_perp.dim();
  j["dim_J_perp"] = ideals.j_perp.dim();
  j["I"] = subspace_to_json(ideals.i);
  j["J"] = subspace_to_json(ideals.j);
  return j;
}

}  // namespace isa
