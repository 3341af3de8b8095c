#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "suite.hpp"

namespace dgfree::cli {

using nlohmann::json;
namespace fs = std::filesystem;

// exit 0 success, 1 negative verdict (or undecided), 2 input error
struct CommandResult {
  int exit_code = 0;
  json payload;
  std::string text;         // printed instead of payload when set (tsv, summaries)
  std::string diagnostics;  // stderr
};

int default_max_degree();  // DGFREE_MAX_DEGREE, else 8

CommandResult cmd_check(const fs::path& tuple_path);
CommandResult cmd_classify(const fs::path& tuple_path);
CommandResult cmd_cohomology(const fs::path& tuple_path, int max_degree, const std::string& format);
CommandResult cmd_iso(const fs::path& a, const fs::path& b, const std::optional<fs::path>& witness);

// action: validate | cohomology | endo
CommandResult cmd_module(const fs::path& module_path, const std::string& action, bool hom, int max_degree);

struct FamilyQuery {
  std::optional<std::string> case_id;
  std::optional<std::string> lambda, mu, nu, omega;
  bool grid = false;  // every admissible instance over {-2,-1,1,2} (+0)
  std::optional<std::string> label;
};
CommandResult cmd_families(const FamilyQuery& q);

CommandResult cmd_verify_paper(const suite::Options& opt, bool parallel = true);

}  // namespace dgfree::cli
