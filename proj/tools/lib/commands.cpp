#include "commands.hpp"

#include <cstdlib>
#include <future>
#include <sstream>

#include "dgfree/classify2.hpp"
#include "dgfree/cohomology.hpp"
#include "dgfree/dgmodule.hpp"
#include "dgfree/errors.hpp"
#include "json_io.hpp"

namespace dgfree::cli {

namespace {

CommandResult input_error(const std::string& msg) {
  CommandResult r;
  r.exit_code = 2;
  r.payload = {{"error", msg}};
  r.diagnostics = "error: " + msg;
  return r;
}

// wraps a command body; library errors and bad JSON become exit 2
template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return input_error(e.what());
  } catch (const nlohmann::json::exception& e) {
    return input_error(std::string("malformed input: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return input_error(e.what());
  } catch (const std::exception& e) {
    return input_error(std::string("internal failure: ") + e.what());
  }
}

MatrixTuple load_tuple(const fs::path& p) { return io::tuple_from(io::read_json_file(p)); }

std::optional<Rational> opt_rational(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return Rational::parse(*s);
}

json params_json(const CaseParams& p) {
  json out = json::object();
  for (const char* name : {"lambda", "mu", "nu", "omega"})
    if (auto* s = p.slot(name); s && s->has_value()) out[name] = io::rational_json(**s);
  return out;
}

json residuals_json(const MatrixTuple& t) {
  auto res = crisscross_equations_n2(t);
  json out = json::object();
  for (std::size_t k = 0; k < res.size(); ++k) out[kResidualNames[k]] = io::rational_json(res[k]);
  return out;
}

}  // namespace

int default_max_degree() {
  if (const char* env = std::getenv("DGFREE_MAX_DEGREE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 64) return static_cast<int>(v);
  }
  return 8;
}

CommandResult cmd_check(const fs::path& tuple_path) {
  return guarded([&] {
    auto t = load_tuple(tuple_path);
    CommandResult r;
    bool cc = is_crisscross(t);
    bool oracle = d_squared_is_zero(t, 1);
    r.payload = {{"crisscross", cc}, {"n", t.n()}, {"oracle_d2_zero", oracle}, {"oracle_agrees", cc == oracle}};
    if (t.n() == 2) r.payload["residuals"] = residuals_json(t);
    if (!cc) {
      json blocks = json::array();
      for (int i = 1; i <= t.n(); ++i)
        for (int j = 1; j <= t.n(); ++j) {
          auto T = crisscross_block(t, i, j);
          if (!T.is_zero()) blocks.push_back({{"i", i}, {"j", j}, {"block", io::matrix_json(T)}});
        }
      r.payload["nonzero_blocks"] = blocks;
    }
    r.exit_code = cc ? 0 : 1;
    if (cc != oracle) {
      r.exit_code = 2;
      r.diagnostics = "internal failure: crisscross test and d^2 oracle disagree";
    }
    return r;
  });
}

CommandResult cmd_classify(const fs::path& tuple_path) {
  return guarded([&] {
    auto t = load_tuple(tuple_path);
    CommandResult r;
    r.payload = io::label_json(classify(t));
    return r;
  });
}

CommandResult cmd_cohomology(const fs::path& tuple_path, int max_degree, const std::string& format) {
  return guarded([&] {
    if (max_degree < 0) return input_error("max degree must be >= 0, got " + std::to_string(max_degree));
    if (format != "json" && format != "tsv") return input_error("format must be json or tsv");
    auto t = load_tuple(tuple_path);
    auto rep = cohomology_table(t, max_degree, format == "json");
    CommandResult r;
    r.payload = io::cohomology_json(rep);
    if (format == "tsv") r.text = io::cohomology_tsv(rep);
    return r;
  });
}

CommandResult cmd_iso(const fs::path& a, const fs::path& b, const std::optional<fs::path>& witness) {
  return guarded([&] {
    auto ta = load_tuple(a), tb = load_tuple(b);
    if (ta.n() != tb.n()) return input_error("tuples have different n");
    if (!is_crisscross(ta) || !is_crisscross(tb)) throw NotCrisscross();
    std::optional<WitnessMatrix> w;
    if (witness) {
      w = io::witness_from(io::read_json_file(*witness));
      if (w->n() != ta.n()) return input_error("witness has the wrong size");
    }
    auto v = decide_isomorphism(ta, tb, w);
    CommandResult r;
    r.payload = io::verdict_json(v);
    r.exit_code = v.verdict == Verdict::Yes ? 0 : 1;
    return r;
  });
}

CommandResult cmd_module(const fs::path& module_path, const std::string& action, bool hom, int max_degree) {
  return guarded([&] {
    if (action != "validate" && action != "cohomology" && action != "endo")
      return input_error("module action must be validate, cohomology or endo");
    if (max_degree < 0) return input_error("max degree must be >= 0");
    json j = io::read_json_file(module_path);
    CommandResult r;
    std::optional<FreeDGModule> f;
    try {
      f = io::module_from(j, module_path.parent_path());
    } catch (const DomainError& e) {
      // d^2 != 0 is a verdict about the data, not a parse failure
      if (action != "validate") throw;
      r.exit_code = 1;
      r.payload = {{"valid", false}, {"reason", e.what()}};
      return r;
    }
    if (action == "validate") {
      r.payload = {{"valid", true}, {"rank", f->rank()}, {"n", f->n()}, {"module", io::module_json(*f)}};
    } else if (action == "cohomology") {
      std::vector<std::size_t> dims;
      for (int d = 0; d <= max_degree; ++d)
        dims.push_back(hom ? hom_into_algebra_cohomology(*f, d) : module_cohomology_dim(*f, d));
      r.payload = {{"complex", hom ? "Hom(F,A)" : "F"}, {"max_degree", max_degree}, {"dims", dims}};
    } else {
      r.payload = io::endo_json(degree_zero_endo_algebra(*f));
    }
    return r;
  });
}

CommandResult cmd_families(const FamilyQuery& q) {
  return guarded([&] {
    CommandResult r;
    if (q.label) {
      auto label = ClassLabel::parse(*q.label);
      r.payload = {{"label", label.str()}, {"tuple", io::tuple_json(canonical_tuple(label))}};
      return r;
    }
    auto describe = [](const CaseFamily& f) {
      json ps = json::array();
      for (const auto& p : f.params) ps.push_back({{"name", p.name}, {"nonzero", p.nonzero}});
      return json{{"id", f.id}, {"parent", f.parent}, {"params", ps}, {"condition", f.condition}, {"target", f.target}};
    };
    if (!q.case_id) {
      json all = json::array();
      for (const auto& f : case_families()) all.push_back(describe(f));
      r.payload = {{"families", all}};
      return r;
    }
    const CaseFamily* fam = nullptr;
    for (const auto& f : case_families())
      if (f.id == *q.case_id) fam = &f;
    if (!fam) return input_error("unknown case '" + *q.case_id + "'");
    auto instance = [&](const CaseParams& p) {
      auto t = instantiate_case(fam->id, p);
      return json{{"params", params_json(p)}, {"tuple", io::tuple_json(t)}, {"residuals", residuals_json(t)}};
    };
    if (q.grid) {
      std::vector<Rational> grid{Rational(-2), Rational(-1), Rational(1), Rational(2)};
      json list = json::array();
      for (const auto& p : suite::grid_instances(*fam, grid)) list.push_back(instance(p));
      r.payload = describe(*fam);
      r.payload["instances"] = list;
      return r;
    }
    CaseParams p;
    p.lambda = opt_rational(q.lambda);
    p.mu = opt_rational(q.mu);
    p.nu = opt_rational(q.nu);
    p.omega = opt_rational(q.omega);
    r.payload = describe(*fam);
    r.payload["instance"] = instance(p);
    return r;
  });
}

CommandResult cmd_verify_paper(const suite::Options& opt, bool parallel) {
  return guarded([&] {
    for (const auto& g : opt.only)
      if (std::find(suite::groups().begin(), suite::groups().end(), g) == suite::groups().end())
        return input_error("unknown criterion group '" + g + "'");
    std::vector<std::string> selected;
    for (const auto& g : suite::groups())
      if (opt.only.empty() || std::find(opt.only.begin(), opt.only.end(), g) != opt.only.end())
        selected.push_back(g);

    std::vector<suite::CriterionResult> results;
    if (parallel) {
      std::vector<std::future<suite::CriterionResult>> jobs;
      for (const auto& g : selected) jobs.push_back(std::async(std::launch::async, suite::run_group, g, opt));
      for (auto& j : jobs) results.push_back(j.get());
    } else {
      for (const auto& g : selected) results.push_back(suite::run_group(g, opt));
    }

    CommandResult r;
    std::ostringstream text;
    json list = json::array();
    int passed = 0;
    std::vector<std::string> failing;
    for (const auto& c : results) {
      passed += c.passed;
      if (!c.passed) failing.push_back(c.group);
      list.push_back({{"id", c.id},
                      {"group", c.group},
                      {"title", c.title},
                      {"passed", c.passed},
                      {"seconds", c.seconds},
                      {"detail", c.detail}});
      text << (c.passed ? "PASS" : "FAIL") << "  " << c.id << ' ' << c.group << "  " << c.title;
      if (!c.passed && c.detail.contains("error")) text << "  (" << c.detail["error"].get<std::string>() << ')';
      text << '\n';
    }
    text << passed << '/' << results.size() << " criteria passed\n";
    r.payload = {{"criteria", list},
                 {"total", results.size()},
                 {"passed", passed},
                 {"failed", failing},
                 {"data_dir", opt.data_dir.string()},
                 {"seed", opt.seed}};
    r.text = text.str();
    r.exit_code = failing.empty() ? 0 : 1;
    if (!failing.empty()) {
      r.diagnostics = "failing criteria:";
      for (const auto& f : failing) r.diagnostics += " " + f;
    }
    return r;
  });
}

}  // namespace dgfree::cli
