#include "doctest.h"
#include "skeinwb/suites.hpp"

using namespace skeinwb;

TEST_CASE("exact suites pass and are reproducible") {
  SuiteOptions o;
  for (const char* name : {"rings", "qtorus"}) {
    CAPTURE(name);
    auto a = run_suite(name, o);
    auto b = run_suite(name, o);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].pass);
      CHECK(a[k].residual == 0.0);
      CHECK(a[k].to_json() == b[k].to_json());
    }
  }
}

TEST_CASE("suite records serialize with the required fields") {
  Record r;
  r.name = "x";
  auto j = r.to_json();
  for (const char* key : {"case", "inputs", "values", "residual", "pass"}) CHECK(j.contains(key));
  CHECK_FALSE(j.contains("note"));
}

TEST_CASE("transport suite with no samples is vacuous") {
  SuiteOptions o;
  o.samples = 0;
  auto records = run_suite("transport", o);
  bool found = false;
  for (const auto& r : records) {
    CHECK(r.pass);
    if (r.name == "transport.residuals") found = !r.note.empty();
  }
  CHECK(found);
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
  CHECK_THROWS_AS(selflink_group("nope", 1, 1), std::invalid_argument);
}
