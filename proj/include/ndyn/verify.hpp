#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ndyn/catalog.hpp"
#include "ndyn/stability.hpp"

namespace ndyn {

struct SuiteResult {
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few failure descriptions

  bool ok() const { return failed == 0; }
  void check(bool cond, const std::string& what);
};

/// A catalog family as a function of its single parameter, in the linear
/// coordinate when the entry has one.
FormFamily catalog_family(const CatalogEntry& entry);

/// Catalog entries whose normal-form coefficients are real-affine in the parameter.
std::vector<std::string> linearizable_families();

SuiteResult suite_root_sums(std::uint64_t seed = 11, int trials = 200);
SuiteResult suite_vieta(std::uint64_t seed = 12, int trials = 200);
SuiteResult suite_fixed_structure(std::uint64_t seed = 13, int trials = 200);
/// Against each entry's recorded degrees of lambda-oddness.
SuiteResult suite_lambda_odd(std::uint64_t seed = 14, int trials = 50);
SuiteResult suite_iota_symmetry(std::uint64_t seed = 15, int trials = 50);
SuiteResult suite_critical_pairing(std::uint64_t seed = 16, int trials = 20);
SuiteResult suite_region_oracle(std::uint64_t seed = 17, int trials = 500);
SuiteResult suite_region_boundary(int samples = 64);
SuiteResult suite_degenerate_s5(std::uint64_t seed = 18, int trials = 20);

std::vector<SuiteResult> run_all_suites();

}  // namespace ndyn
