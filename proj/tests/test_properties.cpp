#include <doctest.h>

#include "helpers.hpp"
#include "ratsub/suites.hpp"

using namespace th;

namespace {

SuiteOptions small(std::uint64_t seed) {
  SuiteOptions o;
  o.cases = 12;
  o.seed = seed;
  o.max_rows = 2;
  o.max_cols = 3;
  o.max_deg = 2;
  o.max_G = 2;
  return o;
}

void expect_pass(const SuiteResult& r) {
  INFO(r.name);
  for (const auto& m : r.messages) INFO(m);
  CHECK(r.failures == 0);
  CHECK(r.cases > 0);
}

}  // namespace

TEST_CASE("suites pass at small sizes over several seeds") {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    const SuiteOptions o = small(seed);
    expect_pass(smith_oracle_suite(o));
    expect_pass(minbasis_oracle_suite(o));
    expect_pass(theorem_suite(o));
    expect_pass(mobius_suite(o));
    expect_pass(structural_suite(o));
    expect_pass(root_transport_suite(o));
  }
}

TEST_CASE("suites are reproducible") {
  const SuiteOptions o = small(5);
  const SuiteResult a = theorem_suite(o), b = theorem_suite(o);
  CHECK(a.failures == b.failures);
  CHECK(a.stats == b.stats);
  CHECK(a.messages == b.messages);
}

TEST_CASE("suites run over a single field") {
  SuiteOptions o = small(3);
  o.fields = {FieldSpec::prime(3)};
  expect_pass(theorem_suite(o));
  expect_pass(smith_oracle_suite(o));
}
