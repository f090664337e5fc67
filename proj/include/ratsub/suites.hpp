#pragma once

// Randomized property suites. Each case draws from its own generator seeded
// by (seed, case index), so a suite is reproducible and cases are independent.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ratsub/field.hpp"

namespace ratsub {

struct SuiteOptions {
  int cases = 50;
  std::uint64_t seed = 1;
  long max_rows = 3;
  long max_cols = 4;
  int max_deg = 3;
  int max_G = 3;
  std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime(7)};
};

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;  // broken invariants or exceptions
  int findings = 0;  // disagreements with an unproved claim; never counted as failures
  std::vector<std::string> messages;
  std::map<std::string, int> stats;

  bool passed() const { return failures == 0; }
  void fail(const std::string& msg);
  void note(const std::string& msg);
};

/// Invariant polynomials vs. ratios of determinantal divisors.
SuiteResult smith_oracle_suite(const SuiteOptions& o);
/// Degree-sweep minimal indices vs. the convolution-rank oracle, plus Forney.
SuiteResult minbasis_oracle_suite(const SuiteOptions& o);
/// verify_theorem on planted and unstructured instances.
SuiteResult theorem_suite(const SuiteOptions& o);
/// G = 1 maps: structure is preserved and the inverse map undoes the substitution.
SuiteResult mobius_suite(const SuiteOptions& o);
/// Coprimality, gcd commutation, grade shift, injectivity, regular multipliers,
/// root-polynomial equivalence, preimage counts and index sums.
SuiteResult structural_suite(const SuiteOptions& o);
/// Transported root polynomials over F_p with split preimages.
SuiteResult root_transport_suite(const SuiteOptions& o);

std::uint64_t case_seed(std::uint64_t seed, int index);

}  // namespace ratsub
