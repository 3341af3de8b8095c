#include <iostream>

#include <CLI11.hpp>

#include "lib/commands.hpp"

using namespace dgfree::cli;

namespace {

int emit(const CommandResult& r, bool json_out = false) {
  if (!r.text.empty() && !json_out)
    std::cout << r.text;
  else if (!r.payload.is_null())
    std::cout << r.payload.dump(2) << '\n';
  if (!r.diagnostics.empty()) std::cerr << r.diagnostics << '\n';
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for DG free algebras with degree-one generators"};
  app.require_subcommand(1);

  std::string tuple_a, tuple_b, witness, module_path, format = "json", action;
  int max_degree = default_max_degree();
  bool hom = false, json_out = false, serial = false;

  auto* check = app.add_subcommand("check", "crisscross test with the d^2 = 0 cross-check");
  check->add_option("tuple", tuple_a, "tuple JSON file")->required();

  auto* classify = app.add_subcommand("classify", "classify an n = 2 tuple and print the witness chain");
  classify->add_option("tuple", tuple_a, "tuple JSON file")->required();

  auto* coh = app.add_subcommand("cohomology", "cohomology table of the algebra");
  coh->add_option("tuple", tuple_a, "tuple JSON file")->required();
  coh->add_option("--max-degree", max_degree, "highest degree (default 8 or DGFREE_MAX_DEGREE)");
  coh->add_option("--format", format, "json or tsv");

  auto* iso = app.add_subcommand("iso", "decide isomorphism of two tuples");
  iso->add_option("a", tuple_a)->required();
  iso->add_option("b", tuple_b)->required();
  auto* wopt = iso->add_option("--witness", witness, "witness JSON {n, entries}");

  auto* mod = app.add_subcommand("module", "free DG module checks");
  mod->add_option("action", action, "validate | cohomology | endo")->required();
  mod->add_option("module", module_path, "module JSON file")->required();
  mod->add_flag("--hom", hom, "use the complex Hom(F, A) instead of F");
  mod->add_option("--max-degree", max_degree);

  FamilyQuery fq;
  std::string case_id, lambda, mu, nu, omega, label;
  auto* fam = app.add_subcommand("families", "list case families or emit instances");
  auto* o_case = fam->add_option("--case", case_id);
  auto* o_l = fam->add_option("--lambda", lambda);
  auto* o_m = fam->add_option("--mu", mu);
  auto* o_n = fam->add_option("--nu", nu);
  auto* o_w = fam->add_option("--omega", omega);
  fam->add_flag("--grid", fq.grid, "all admissible instances over {-2,-1,1,2} (and 0)");
  auto* o_label = fam->add_option("--label", label, "print the canonical tuple of a class, e.g. B6 or B(2,1/2)");

  dgfree::suite::Options sopt;
  sopt.data_dir = dgfree::suite::default_data_dir();
  std::string data_dir = sopt.data_dir.string();
  auto* vp = app.add_subcommand("verify-paper", "run the acceptance criteria");
  vp->add_option("--only", sopt.only, "criterion groups to run")->delimiter(',');
  vp->add_option("--golden", data_dir, "directory holding golden/ and modules/");
  vp->add_option("--seed", sopt.seed, "seed for the random tuples");
  vp->add_flag("--json", json_out, "print the full JSON report");
  vp->add_flag("--serial", serial, "run criterion groups one at a time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*check) return emit(cmd_check(tuple_a));
  if (*classify) return emit(cmd_classify(tuple_a));
  if (*coh) return emit(cmd_cohomology(tuple_a, max_degree, format));
  if (*iso) return emit(cmd_iso(tuple_a, tuple_b, *wopt ? std::optional<std::filesystem::path>(witness) : std::nullopt));
  if (*mod) return emit(cmd_module(module_path, action, hom, max_degree));
  if (*fam) {
    auto set = [](CLI::Option* o, const std::string& v, std::optional<std::string>& dst) {
      if (*o) dst = v;
    };
    set(o_case, case_id, fq.case_id);
    set(o_l, lambda, fq.lambda);
    set(o_m, mu, fq.mu);
    set(o_n, nu, fq.nu);
    set(o_w, omega, fq.omega);
    set(o_label, label, fq.label);
    return emit(cmd_families(fq));
  }
  if (*vp) {
    sopt.data_dir = data_dir;
    return emit(cmd_verify_paper(sopt, !serial), json_out);
  }
  return 2;
}
