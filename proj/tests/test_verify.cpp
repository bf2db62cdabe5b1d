#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "skewcat/json_io.hpp"
#include "skewcat/verify.hpp"

using namespace skewcat;

namespace {

void dump_failures(const Report& report) {
  for (const auto& c : report.cases)
    if (c.status != CaseStatus::Pass) MESSAGE(c.description, " -- ", c.witness);
}

}  // namespace

TEST_CASE("functor suite at small sizes") {
  for (int n = 1; n <= 2; ++n) {
    const Report report = suite_functor(n, 3);
    dump_failures(report);
    CHECK(report.failures() == 0);
    CHECK(report.unknowns() == 0);
  }
  CHECK_THROWS_AS(suite_functor(5, 3), ResourceError);
  CHECK_THROWS_AS(suite_functor(3, 7), ResourceError);
}

TEST_CASE("section five suite") {
  const Report report = section_five_suite(4);
  dump_failures(report);
  CHECK(report.failures() == 0);
  CHECK(report.unknowns() == 0);
  CHECK(report.cases.size() >= 15);
}

TEST_CASE("correspondence suite on the worked example") {
  const std::vector<Partition> gens{primary_partition(), example_s::h3(), example_s::r()};
  const Report report =
      suite_skew_word_correspondence(gens, example_s::oracle(4), {6, std::nullopt});
  dump_failures(report);
  CHECK(report.failures() == 0);
}

TEST_CASE("correspondence suite detects a corrupted oracle") {
  // The smallest discriminating configurations have seven points.
  const std::vector<Partition> gens{primary_partition(), example_s::h3(), example_s::r()};
  const Report report =
      suite_skew_word_correspondence(gens, example_s::corrupted_oracle(4), {7, std::nullopt});
  CHECK(report.failures() > 0);
  bool witnessed = false;
  for (const auto& c : report.cases)
    if (c.status == CaseStatus::Fail && !c.witness.empty()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("easiness suite with the exhaustive rank-3 cross-check") {
  const Report non_easy =
      suite_easiness(example_s::subgroup_generators(3), example_s::oracle(3));
  dump_failures(non_easy);
  CHECK(non_easy.failures() == 0);

  BoundedSearchSpec trivial;
  trivial.rank = 3;
  const Report easy = suite_easiness({}, SubgroupOracle::search(trivial));
  dump_failures(easy);
  CHECK(easy.failures() == 0);
}

TEST_CASE("tensor category suite") {
  const SubgroupOracle oracle = example_s::oracle(3);
  const std::vector<Partition> gens{primary_partition(), example_s::h3(), example_s::r()};
  const Report report =
      suite_tensor_category(gens, &oracle, 2, {6, std::nullopt}, 3);
  dump_failures(report);
  CHECK(report.failures() == 0);
}

TEST_CASE("report serialisation") {
  Report report = section_five_suite(4);
  const Json j = to_json(report);
  CHECK(j["suite"] == "section-five");
  CHECK(j["failures"] == 0);
  CHECK(j["cases"].is_array());
  CHECK(j["cases"].size() == report.cases.size());
}
