#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgfree/classify2.hpp"

namespace dgfree::suite {

using nlohmann::json;

struct CriterionResult {
  int id = 0;
  std::string group;
  std::string title;
  bool passed = false;
  json detail;
  double seconds = 0;
};

struct Options {
  std::filesystem::path data_dir;      // holds golden/ and modules/
  std::uint64_t seed = 0x5eed2024ull;  // base seed for the random tuples
  std::vector<std::string> only;       // empty = all groups
};

// oracle families witnesses cohomology ring module trivial sweep invariants
const std::vector<std::string>& groups();
std::filesystem::path default_data_dir();

CriterionResult run_group(const std::string& group, const Options& opt);
std::vector<CriterionResult> run(const Options& opt);

// admissible parameter assignments of a family over grid (plus 0 where allowed)
std::vector<CaseParams> grid_instances(const CaseFamily& f, const std::vector<Rational>& grid);

}  // namespace dgfree::suite
