#pragma once

// Named groups of exact identity checks, run with a recorded seed.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "magnus.hpp"
#include "rng.hpp"

namespace tmm {

struct SuiteRow {
  std::string name;
  std::string ref;  // the identity being checked, as a formula
  bool pass = false;
  std::string witness;  // first counterexample, empty on pass
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<SuiteRow> rows;  // sorted by name

  bool passed() const;
  nlohmann::json to_json() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

const std::vector<std::string>& suite_names();
// Throws DomainError for an unknown name.
SuiteReport check_suite(const std::string& name, std::uint64_t seed = kDefaultSeed);

// Expansion with random small rational tails in degrees 2..N.
MagnusExpansion random_expansion(Rng& rng, int n, int N);

}  // namespace tmm
