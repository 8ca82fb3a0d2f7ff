#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chargeshare/csv.hpp"
#include "chargeshare/params.hpp"

namespace chargeshare {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Property and fixture checks on one parameter set. Analytic only, apart
/// from one short station simulation for Little's law.
std::vector<Check> run_invariants(const ParamSet& p, std::uint64_t seed = 1);

/// Analytic vs simulated deviation tables (queue sweep, availability,
/// coverage, first contact).
std::vector<std::pair<std::string, Table>> oracle_tables(const ParamSet& p, std::uint64_t seed,
                                                          bool quick, unsigned jobs = 1);

}  // namespace chargeshare
