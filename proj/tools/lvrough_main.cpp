#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lvrough/axiom.hpp"
#include "lvrough/fixtures.hpp"
#include "lvrough/json_io.hpp"
#include "lvrough/oracle.hpp"
#include "lvrough/product.hpp"

namespace {

using namespace lvrough;

std::uint64_t powerset_cap() {
  if (const char* env = std::getenv("LVROUGH_MAX_POWERSET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("LVROUGH_MAX_POWERSET must be an integer");
    }
  }
  return kDefaultPowersetCap;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

/// Resolves the shared inputs of most subcommands from either files or a
/// named fixture.
struct Inputs {
  std::string lattice_file, universe_file, relation_file, subset_file, m_file, q_file, op_file;
  std::string fixture;

  Fixture resolve_fixture() const { return get_fixture(fixture); }

  UniversePtr universe() const {
    if (!fixture.empty()) return resolve_fixture().universe;
    if (lattice_file.empty() || universe_file.empty())
      throw ParseError("need --lattice and --universe (or --fixture)");
    LatticePtr lat = lattice_from_json(load_json(lattice_file));
    return universe_from_json(lat, load_json(universe_file));
  }

  Relation relation(const UniversePtr& u) const {
    if (!fixture.empty()) {
      Fixture f = resolve_fixture();
      if (!f.relation) throw ParseError("fixture '" + fixture + "' carries no relation");
      return *f.relation;
    }
    if (relation_file.empty()) throw ParseError("need --relation (or --fixture)");
    return relation_from_json(u, load_json(relation_file));
  }

  Operator op(const UniversePtr& u) const {
    if (!fixture.empty()) {
      Fixture f = resolve_fixture();
      if (!f.op) throw ParseError("fixture '" + fixture + "' carries no operator");
      return *f.op;
    }
    if (op_file.empty()) throw ParseError("need --op (or --fixture)");
    return operator_from_json(u, load_json(op_file), powerset_cap());
  }

  void add_universe_options(CLI::App* cmd) {
    cmd->add_option("--lattice", lattice_file, "lattice spec JSON file");
    cmd->add_option("--universe", universe_file, "universe JSON file");
    cmd->add_option("--fixture", fixture, "named fixture instead of files");
  }
};

int run(int argc, char** argv) {
  CLI::App app{"finite-model engine for lattice-valued rough sets"};
  app.require_subcommand(1);

  // lattice check
  auto* lattice_cmd = app.add_subcommand("lattice", "lattice operations");
  lattice_cmd->require_subcommand(1);
  auto* lattice_check = lattice_cmd->add_subcommand("check", "verify the law suites");
  std::string lattice_spec;
  lattice_check->add_option("--spec", lattice_spec, "lattice spec JSON file")->required();

  // universe enumerate
  auto* universe_cmd = app.add_subcommand("universe", "universe operations");
  universe_cmd->require_subcommand(1);
  auto* universe_enum = universe_cmd->add_subcommand("enumerate", "list the powerset");
  Inputs uenum_in;
  uenum_in.add_universe_options(universe_enum);

  // relation check
  auto* relation_cmd = app.add_subcommand("relation", "relation operations");
  relation_cmd->require_subcommand(1);
  auto* relation_check = relation_cmd->add_subcommand("check", "compute property flags");
  Inputs rel_in;
  rel_in.add_universe_options(relation_check);
  relation_check->add_option("--relation", rel_in.relation_file, "relation JSON file");

  // approx
  auto* approx_cmd = app.add_subcommand("approx", "rough approximation of a subset");
  Inputs approx_in;
  approx_in.add_universe_options(approx_cmd);
  approx_cmd->add_option("--relation", approx_in.relation_file, "relation JSON file");
  approx_cmd->add_option("--subset", approx_in.subset_file, "subset JSON file");
  std::string approx_dir = "upper";
  bool approx_both = false;
  approx_cmd->add_option("--direction", approx_dir, "upper or lower");
  approx_cmd->add_flag("--both", approx_both, "print both approximations");

  // product inner|subsethood|outer
  auto* product_cmd = app.add_subcommand("product", "inner/outer products and subsethood");
  product_cmd->require_subcommand(1);
  Inputs prod_in;
  std::vector<CLI::App*> prod_subs;
  for (const char* name : {"inner", "subsethood", "outer"}) {
    auto* sub = product_cmd->add_subcommand(name, std::string(name) + " of two subsets");
    prod_in.add_universe_options(sub);
    sub->add_option("--m", prod_in.m_file, "first subset JSON file");
    sub->add_option("--q", prod_in.q_file, "second subset JSON file");
    prod_subs.push_back(sub);
  }

  // axiom check|reconstruct|verify
  auto* axiom_cmd = app.add_subcommand("axiom", "axiom checking and reconstruction");
  axiom_cmd->require_subcommand(1);
  Inputs ax_in;
  std::string axiom_name, theorem_name, recon_dir = "upper", axiom_mode = "exhaustive";
  std::uint64_t axiom_seed = 42, axiom_trials = 10000;
  auto* axiom_check = axiom_cmd->add_subcommand("check", "check one axiom on an operator");
  ax_in.add_universe_options(axiom_check);
  axiom_check->add_option("--op", ax_in.op_file, "operator JSON file");
  axiom_check->add_option("--axiom", axiom_name, "axiom name, e.g. HRTS")->required();
  axiom_check->add_option("--mode", axiom_mode, "exhaustive or sampled");
  axiom_check->add_option("--seed", axiom_seed, "sampling seed");
  axiom_check->add_option("--trials", axiom_trials, "sampling trials");
  auto* axiom_recon = axiom_cmd->add_subcommand("reconstruct", "relation from an operator");
  ax_in.add_universe_options(axiom_recon);
  axiom_recon->add_option("--op", ax_in.op_file, "operator JSON file");
  axiom_recon->add_option("--direction", recon_dir, "upper or lower");
  auto* axiom_verify = axiom_cmd->add_subcommand("verify", "characterization round trip");
  ax_in.add_universe_options(axiom_verify);
  axiom_verify->add_option("--op", ax_in.op_file, "operator JSON file");
  axiom_verify->add_option("--theorem", theorem_name, "single axiom name")->required();
  axiom_verify->add_option("--mode", axiom_mode, "exhaustive or sampled");
  axiom_verify->add_option("--seed", axiom_seed, "sampling seed");
  axiom_verify->add_option("--trials", axiom_trials, "sampling trials");

  // oracle run
  auto* oracle_cmd = app.add_subcommand("oracle", "theorem verification harness");
  oracle_cmd->require_subcommand(1);
  auto* oracle_run = oracle_cmd->add_subcommand("run", "run the verification matrix");
  std::string instance_file, oracle_fixture, checks = "soundness,completeness";
  int jobs = 1;
  oracle_run->add_option("--instance", instance_file, "instance JSON file");
  oracle_run->add_option("--fixture", oracle_fixture, "named instance fixture (or 'all')");
  oracle_run->add_option("--checks", checks,
                         "comma list of soundness,completeness,sampled,degeneracy");
  oracle_run->add_option("--jobs", jobs, "worker threads for space scans");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*lattice_check) {
    LatticePtr lat = lattice_from_json(load_json(lattice_spec));
    LawReport rep = verify_laws(*lat);
    emit(to_json(rep));
    return rep.all_pass() ? 0 : 1;
  }

  if (*universe_enum) {
    UniversePtr u = uenum_in.universe();
    json out = json::array();
    for (const LSubset& w : enumerate_powerset(u, powerset_cap())) out.push_back(to_json(w));
    emit(json{{"schema_version", kSchemaVersion}, {"count", out.size()}, {"subsets", out}});
    return 0;
  }

  if (*relation_check) {
    UniversePtr u = rel_in.universe();
    Relation r = rel_in.relation(u);
    json out = to_json(r.properties());
    out["schema_version"] = kSchemaVersion;
    emit(out);
    return 0;
  }

  if (*approx_cmd) {
    UniversePtr u = approx_in.universe();
    Relation r = approx_in.relation(u);
    LSubset q = approx_in.subset_file.empty()
                    ? zero_subset(u)
                    : subset_from_json(u, load_json(approx_in.subset_file));
    json out{{"schema_version", kSchemaVersion}};
    if (approx_both || approx_dir == "upper") out["upper"] = to_json(upper_approx(r, q));
    if (approx_both || approx_dir == "lower") out["lower"] = to_json(lower_approx(r, q));
    if (!approx_both && approx_dir != "upper" && approx_dir != "lower")
      throw ParseError("direction must be 'upper' or 'lower'");
    if (!u->lat().caps().mv_algebra && (approx_both || approx_dir == "lower"))
      out["advisory"] = "lattice is not MV; lower-side axioms do not apply";
    emit(out);
    return 0;
  }

  for (std::size_t k = 0; k < prod_subs.size(); ++k) {
    if (!*prod_subs[k]) continue;
    UniversePtr u = prod_in.universe();
    LSubset m = prod_in.m_file.empty() ? [&] {
      Fixture f = prod_in.resolve_fixture();
      if (!f.m) throw ParseError("fixture carries no subset M");
      return *f.m;
    }() : subset_from_json(u, load_json(prod_in.m_file));
    LSubset q = prod_in.q_file.empty() ? [&] {
      Fixture f = prod_in.resolve_fixture();
      if (!f.q) throw ParseError("fixture carries no subset Q");
      return *f.q;
    }() : subset_from_json(u, load_json(prod_in.q_file));
    Elem v = k == 0 ? inner_product(m, q) : k == 1 ? subsethood(m, q) : outer_product(m, q);
    json out{{"schema_version", kSchemaVersion}, {"value", u->lat().label(v).str()}};
    if (k == 2 && !u->is_constant()) out["advisory"] = "nonconstant-universe";
    emit(out);
    return 0;
  }

  if (*axiom_check || *axiom_verify) {
    UniversePtr u = ax_in.universe();
    Operator op = ax_in.op(u);
    CheckMode mode = axiom_mode == "sampled" ? CheckMode::sampled(axiom_seed, axiom_trials)
                                             : CheckMode::exhaustive_mode();
    if (axiom_mode != "sampled" && axiom_mode != "exhaustive")
      throw ParseError("mode must be 'exhaustive' or 'sampled'");
    if (*axiom_check) {
      AxiomReport rep = check_axiom(op, axiom_name, mode, powerset_cap());
      emit(to_json(rep));
      return rep.holds ? 0 : 1;
    }
    CharacterizationReport rep = verify_characterization(theorem_name, op, mode, powerset_cap());
    emit(to_json(rep));
    return rep.prediction_confirmed ? 0 : 1;
  }

  if (*axiom_recon) {
    UniversePtr u = ax_in.universe();
    Operator op = ax_in.op(u);
    Relation r = recon_dir == "lower" ? reconstruct_relation_lower(op)
                                      : reconstruct_relation_upper(op);
    json out = to_json(r);
    out["schema_version"] = kSchemaVersion;
    out["properties"] = to_json(r.properties());
    emit(out);
    return 0;
  }

  if (*oracle_run) {
    std::vector<InstanceSpec> instances;
    if (!oracle_fixture.empty()) {
      std::vector<std::string> names;
      if (oracle_fixture == "all") {
        for (const std::string& n : fixture_names())
          if (get_fixture(n).instance) names.push_back(n);
      } else {
        names.push_back(oracle_fixture);
      }
      for (const std::string& n : names) {
        Fixture f = get_fixture(n);
        if (!f.instance) throw ParseError("fixture '" + n + "' is not an oracle instance");
        instances.push_back(*f.instance);
      }
    } else if (!instance_file.empty()) {
      json j = load_json(instance_file);
      InstanceSpec inst;
      inst.name = j.value("name", instance_file);
      LatticePtr lat = lattice_from_json(detail::field(j, "lattice"));
      inst.universe = universe_from_json(lat, detail::field(j, "universe"));
      if (j.contains("scope"))
        for (const json& s : j.at("scope")) inst.scope.push_back(s.get<std::string>());
      if (j.contains("budget")) {
        const json& b = j.at("budget");
        inst.budget.max_relations = b.value("max_relations", inst.budget.max_relations);
        inst.budget.max_operators = b.value("max_operators", inst.budget.max_operators);
        inst.budget.sample_seed = b.value("sample_seed", inst.budget.sample_seed);
        inst.budget.sample_trials = b.value("sample_trials", inst.budget.sample_trials);
      }
      instances.push_back(std::move(inst));
    } else {
      throw ParseError("need --instance or --fixture");
    }
    bool any_refuted = false;
    json out = json::array();
    for (const InstanceSpec& inst : instances) {
      VerificationMatrix mat;
      mat.instance = inst.name;
      auto append = [&](const VerificationMatrix& part) {
        for (const MatrixRow& r : part.rows) mat.rows.push_back(r);
      };
      bool constant_top = inst.universe->is_constant() &&
                          inst.universe->mem(0) == inst.universe->lat().top();
      if (checks.find("soundness") != std::string::npos)
        append(verify_soundness(inst, jobs));
      if (checks.find("completeness") != std::string::npos) {
        try {
          append(verify_completeness_exhaustive(inst, jobs));
        } catch (const OperatorSpaceTooLarge& e) {
          mat.rows.push_back({"*", "completeness", "skipped", e.what(), 0});
        }
      }
      if (checks.find("sampled") != std::string::npos)
        append(verify_completeness_sampled(inst));
      if (checks.find("degeneracy") != std::string::npos) {
        if (constant_top)
          append(classical_degeneracy_suite(inst));
        else
          mat.rows.push_back(
              {"*", "degeneracy", "skipped", "universe is not constant top", 0});
      }
      any_refuted = any_refuted || !mat.all_confirmed();
      out.push_back(to_json(mat));
    }
    emit(out.size() == 1 ? out[0] : json{{"schema_version", kSchemaVersion}, {"matrices", out}});
    return any_refuted ? 1 : 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lvrough::Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == lvrough::ErrorKind::budget_exceeded ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
