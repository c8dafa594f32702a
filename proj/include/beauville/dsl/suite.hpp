#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beauville/lattice/mukai.hpp"
#include "beauville/report.hpp"

namespace beauville {

enum class Suite { llv, triple, k3_motive, theta_obstruction };

Suite parse_suite(const std::string& name);  // InvalidArgument on unknown names
const char* suite_name(Suite s);

struct SuiteParams {
  // llv and triple model
  int hdim = 6;
  Rational t{1};
  int trials = 1;
  std::uint64_t seed = 0;  // trial k uses seed + k; seed 0 is the standard quadruple
  // triple
  int genus = 3;
  std::vector<std::pair<int, int>> signs;  // (c0, c1); empty means all four
  SpacePtr space;                          // optional class-level space for the compatibility check
};

/// Reports of all selected suites, sorted for byte-stable output.
std::vector<Report> run_suite(const std::vector<Suite>& selection, const SuiteParams& params);

bool all_verified(const std::vector<Report>& reports);

}  // namespace beauville
