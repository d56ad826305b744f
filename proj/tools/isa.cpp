// isa: decide amenability-type properties of finite inverse semigroups by
// exact rational linear algebra, emitting machine-checkable certificates.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "isa/corpus.hpp"

namespace fs = std::filesystem;
using isa::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // valid input, negative verdict
constexpr int kExitInput = 2;     // malformed or invalid input

int max_order() {
  if (const char* env = std::getenv("ISA_MAX_ORDER")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 40;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << j.dump(2) << "\n";
  }
}

isa::FiniteInverseSemigroup load_checked(const std::string& path) {
  auto s = isa::load_semigroup_file(path);
  if (s.order > max_order())
    throw isa::MalformedInput("order " + std::to_string(s.order) + " exceeds ISA_MAX_ORDER=" +
                              std::to_string(max_order()));
  return s;
}

// Mini spec grammar for generator operands: cyclic:k | chain:k | si:k.
isa::FiniteInverseSemigroup parse_operand(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw isa::MalformedInput("bad operand spec '" + spec + "'");
  const std::string family = spec.substr(0, colon);
  const int k = std::atoi(spec.c_str() + colon + 1);
  if (family == "cyclic" || family == "group") return isa::gen_cyclic_group(k);
  if (family == "chain") return isa::gen_semilattice_chain(k);
  if (family == "si") return isa::gen_symmetric_inverse(k);
  throw isa::MalformedInput("unknown operand family '" + family + "'");
}

int cmd_validate(const std::string& path) {
  Json j;
  try {
    auto s = load_checked(path);
    j["valid"] = true;
    j["name"] = s.name;
    j["order"] = s.order;
    j["idempotents"] = static_cast<int>(s.idempotents.size());
    emit(j, "");
    return kExitOk;
  } catch (const isa::SemigroupError& e) {
    j["valid"] = false;
    j["error"] = e.kind_name();
    j["witness"] = e.witness;
    j["detail"] = e.what();
    emit(j, "");
    return kExitNegative;
  } catch (const std::exception& e) {
    j["valid"] = false;
    j["error"] = "MalformedInput";
    j["detail"] = e.what();
    emit(j, "");
    return kExitInput;
  }
}

int cmd_analyze(const std::string& path, const std::string& what, const std::string& side,
                bool one_sided_omega, const std::string& out_path) {
  isa::FiniteInverseSemigroup s;
  try {
    s = load_checked(path);
  } catch (const std::exception& e) {
    Json j;
    j["error"] = "invalid input";
    j["detail"] = e.what();
    emit(j, out_path);
    return kExitInput;
  }

  Json j;
  j["name"] = s.name;
  j["what"] = what;
  int code = kExitOk;

  if (what == "mean") {
    isa::MeanSide ms = side == "left"    ? isa::MeanSide::Left
                       : side == "right" ? isa::MeanSide::Right
                                         : isa::MeanSide::Both;
    auto mean = isa::find_invariant_mean(s, ms);
    j["side"] = side.empty() ? "both" : side;
    j["feasible"] = mean.has_value();
    if (mean) j["certificate"] = isa::mean_to_json(*mean);
    code = mean ? kExitOk : kExitNegative;
  } else if (what == "diagonal-classical") {
    auto cert = isa::find_classical_diagonal(s, !one_sided_omega);
    j["feasible"] = cert.has_value();
    if (cert) j["certificate"] = isa::diagonal_to_json(*cert);
    code = cert ? kExitOk : kExitNegative;
  } else if (what == "diagonal-module") {
    auto cert = isa::find_module_diagonal(s);
    j["feasible"] = cert.has_value();
    if (cert) j["certificate"] = isa::diagonal_to_json(*cert);
    code = cert ? kExitOk : kExitNegative;
  } else if (what == "group-image") {
    j.update(isa::group_image_to_json(isa::quotient_group(s)));
  } else if (what == "h1") {
    j.update(isa::cohomology_to_json(isa::h1_dimension(s, isa::regular_bimodule(s))));
  } else if (what == "all") {
    j = isa::record_to_json(isa::analyze_member(s));
  } else {
    std::cerr << "unknown --what '" << what << "'\n";
    return kExitInput;
  }
  emit(j, out_path);
  return code;
}

int cmd_report(const std::string& corpus_dir, const std::string& out_path) {
  Json j;
  Json members = Json::array();
  bool ok = true;

  if (corpus_dir.empty()) {
    auto report = isa::run_corpus(isa::builtin_corpus());
    j = isa::report_to_json(report);
    ok = report.ok;
  } else {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      Json rec;
      try {
        auto s = load_checked(f.string());
        if (s.name.empty()) s.name = f.stem().string();
        auto member = isa::analyze_member(s);
        if (!member.invariants_hold()) ok = false;
        rec = isa::record_to_json(member);
      } catch (const std::exception& e) {
        rec["name"] = f.stem().string();
        rec["valid"] = false;
        rec["error"] = e.what();
        ok = false;
      }
      rec["file"] = f.filename().string();
      members.push_back(std::move(rec));
    }
    j["members"] = std::move(members);
    j["ok"] = ok;
  }
  emit(j, out_path);
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact amenability certificates for finite inverse semigroups"};
  app.require_subcommand(1);

  std::string path, out_path, what = "all", side = "both", corpus_dir;
  bool one_sided_omega = false;

  auto* validate = app.add_subcommand("validate", "check the inverse-semigroup axioms");
  validate->add_option("file", path, "semigroup JSON file")->required();

  auto* gen = app.add_subcommand("gen", "generate a standard family member");
  std::string family, group_spec = "cyclic:2", left_spec, right_spec;
  int gen_n = 2, gen_index = 2, gen_levels = 2;
  gen->add_option("family", family,
                  "group | brandt | symmetric-inverse | semilattice-chain | clifford | product")
      ->required();
  gen->add_option("--spec,--group", group_spec, "group spec, e.g. cyclic:3");
  gen->add_option("--n", gen_n, "size parameter");
  gen->add_option("--index", gen_index, "Brandt index-set size");
  gen->add_option("--levels", gen_levels, "Clifford chain length");
  gen->add_option("--left", left_spec, "product left operand, e.g. chain:2");
  gen->add_option("--right", right_spec, "product right operand");
  gen->add_option("--out", out_path, "output file (default: stdout)");

  auto* analyze = app.add_subcommand("analyze", "compute certificates for one semigroup");
  analyze->add_option("file", path, "semigroup JSON file")->required();
  analyze->add_option("--what", what,
                      "mean | diagonal-classical | diagonal-module | group-image | h1 | all");
  analyze->add_option("--side", side, "mean sidedness: left | right | both");
  analyze->add_flag("--one-sided-omega", one_sided_omega,
                    "classical system with the left unit family only");
  analyze->add_option("--out", out_path, "output file (default: stdout)");

  auto* report = app.add_subcommand("report", "run the corpus regression pipeline");
  report->add_option("--corpus", corpus_dir, "directory of semigroup files (default: built-in)");
  report->add_option("--out", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(path);
    if (app.got_subcommand(gen)) {
      isa::FiniteInverseSemigroup s;
      try {
        if (family == "group") {
          s = parse_operand(group_spec);
        } else if (family == "brandt") {
          s = isa::gen_brandt(parse_operand(group_spec), gen_index);
        } else if (family == "symmetric-inverse") {
          s = isa::gen_symmetric_inverse(gen_n);
        } else if (family == "semilattice-chain") {
          s = isa::gen_semilattice_chain(gen_n);
        } else if (family == "clifford") {
          s = isa::gen_clifford(parse_operand(group_spec), gen_levels);
        } else if (family == "product") {
          s = isa::gen_product(parse_operand(left_spec), parse_operand(right_spec));
        } else {
          std::cerr << "unknown family '" << family << "'\n";
          return kExitInput;
        }
        if (s.order > max_order()) {
          std::cerr << "generated order " << s.order << " exceeds ISA_MAX_ORDER=" << max_order()
                    << "\n";
          return kExitInput;
        }
      } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
      }
      emit(isa::semigroup_to_json(s), out_path);
      return kExitOk;
    }
    if (app.got_subcommand(analyze))
      return cmd_analyze(path, what, side, one_sided_omega, out_path);
    if (app.got_subcommand(report)) return cmd_report(corpus_dir, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
