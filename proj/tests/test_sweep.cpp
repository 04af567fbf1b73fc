#include <doctest.h>

#include "oracle.hpp"

using namespace chromo;

TEST_CASE("exhaustive sweep over F_5 finds no failures") {
  SweepOptions o;
  o.prime = 5;
  SweepSummary s = run_sweep(o);
  CHECK(s.total == 15625);
  CHECK(s.triangles_checked + s.collinear_skipped == s.total);
  CHECK(s.total_failures() == 0);
  CHECK(s.counterexamples.empty());
  CHECK(s.check_names.size() == check_catalog().size());
  for (std::size_t i = 0; i < s.counts.size(); ++i) {
    CAPTURE(s.check_names[i]);
    CHECK(s.counts[i].failed == 0);
    CHECK(s.counts[i].passed + s.counts[i].skipped > 0);
  }
}

TEST_CASE("sweep results do not depend on the thread count") {
  SweepOptions o;
  o.prime = 5;
  o.exhaustive = false;
  o.samples = 20000;
  o.seed = 99;
  o.jobs = 1;
  auto one = to_json(run_sweep(o), false);
  o.jobs = 4;
  auto four = to_json(run_sweep(o), false);
  CHECK(one == four);
  o.seed = 100;
  CHECK(to_json(run_sweep(o), false) != one);
}

TEST_CASE("sweeps restricted to a group only run that group") {
  SweepOptions o;
  o.prime = 7;
  o.exhaustive = false;
  o.samples = 2000;
  o.groups = {CheckGroup::laws};
  SweepSummary s = run_sweep(o);
  CHECK(s.total == 2000);
  for (const auto& name : s.check_names) {
    CAPTURE(name);
    bool is_law = false;
    for (const auto& info : check_catalog()) {
      if (info.name == name) is_law = info.group == CheckGroup::laws;
    }
    CHECK(is_law);
  }
  CHECK(s.total_failures() == 0);
}

TEST_CASE("sweep over F_3 tolerates characteristic three") {
  SweepOptions o;
  o.prime = 3;
  SweepSummary s = run_sweep(o);
  CHECK(s.total == 729);
  CHECK(s.unexpected_errors == 0);
  CHECK(s.total_failures() == 0);
}

TEST_CASE("sweep rejects a composite modulus") {
  SweepOptions o;
  o.prime = 9;
  CHECK_THROWS_AS(run_sweep(o), InvalidField);
}

TEST_CASE("sweep JSON layout") {
  SweepOptions o;
  o.prime = 3;
  auto j = to_json(run_sweep(o), false);
  CHECK(j["modulus"] == 3);
  CHECK(j["mode"] == "exhaustive");
  CHECK(j["total_failures"] == 0);
  CHECK(j.contains("checks"));
  CHECK_FALSE(j.contains("elapsed_seconds"));
  CHECK(to_json(run_sweep(o), true).contains("elapsed_seconds"));
}
