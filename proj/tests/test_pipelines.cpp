#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>

#include "artin/pipelines.hpp"

using namespace artin;

namespace {

VerificationReport strip_times(VerificationReport r) {
  for (auto& s : r.steps) s.runtime_ms = 0;
  return r;
}

bool same(VerificationReport const& a, VerificationReport const& b) {
  return to_json(strip_times(a)) == to_json(strip_times(b));
}

}  // namespace

TEST_CASE("report JSON round-trips and validates", "[report]") {
  VerificationReport r{"demo", {}};
  StepRunner run(r, Deadline());
  run.run("a", "holds", [] { return Outcome{true, "w"}; });
  run.run("b", "fails", [] { return Outcome{false, ""}; });
  run.run("c", "throws", []() -> Outcome { throw std::runtime_error("boom"); });
  run.run("d", "runs out", []() -> Outcome { throw BudgetExhausted("late"); });
  run.assume("e", "cited", citation_whitelist().front());
  CHECK_THROWS_AS(run.assume("f", "uncited", "my own lemma"), std::logic_error);
  REQUIRE(r.steps.size() == 5);
  CHECK(r.steps[0].status == StepStatus::Verified);
  CHECK(r.steps[1].status == StepStatus::Falsified);
  CHECK(r.steps[2].status == StepStatus::Falsified);
  CHECK(r.steps[3].status == StepStatus::BudgetExhausted);
  CHECK(r.steps[4].status == StepStatus::AssumedTheory);
  CHECK(r.falsified());
  auto j = to_json(r);
  CHECK(validate_report_json(j).empty());
  CHECK(same(report_from_json(j), r));
  auto bad = j;
  bad["steps"][4]["witness"] = "my own lemma";
  CHECK(validate_report_json(bad).size() == 1);
  bad["steps"][0]["status"] = "probably";
  CHECK(validate_report_json(bad).size() == 2);
  bad.erase("pipeline");
  CHECK(validate_report_json(bad).size() == 3);
  CHECK(validate_report_json(nlohmann::json::array()).size() == 1);
}

TEST_CASE("an expired budget is reported, not falsified", "[pipeline]") {
  PipelineOptions opts;
  opts.deadline = Deadline(std::chrono::milliseconds(0));
  auto r = cmd_run_all(opts);
  CHECK_FALSE(r.falsified());
  CHECK(r.count(StepStatus::BudgetExhausted) > 0);
  CHECK(r.count(StepStatus::Verified) == 0);
  CHECK(validate_report_json(to_json(r)).empty());
}

TEST_CASE("a corrupted table row is falsified", "[pipeline]") {
  auto rows = parse_table_override(nlohmann::json::parse(R"({"rows": [{"type": "F4",
      "basic_elements": [{"order": 6, "word": [1, 2, 3, 3]}, {"order": 4, "word": [1, 2, 3, 4, 2, 3]}],
      "relations": [[6, 3, 4, 2]]}]})"));
  PipelineOptions opts;
  opts.specs = {CoxeterSpec(Family::F, 4), CoxeterSpec(Family::B, 3)};
  opts.table_rows = rows;
  auto r = cmd_verify_torsion(opts);
  CHECK(r.falsified());
  REQUIRE(r.find("torsion.F4.eps6.power"));
  CHECK(r.find("torsion.F4.eps6.power")->status == StepStatus::Falsified);
  CHECK(r.find("torsion.B3.eps3.power")->status == StepStatus::Verified);
  CHECK_THROWS(parse_table_override(nlohmann::json::parse(R"({"rows": [{"type": "Q4", "basic_elements": []}]})")));
  CHECK_THROWS(parse_table_override(
      nlohmann::json::parse(R"({"rows": [{"type": "F4", "basic_elements": [], "relations": [[1, 2]]}]})")));
  opts.specs = {CoxeterSpec(Family::A, 1)};
  CHECK_THROWS_AS(cmd_verify_torsion(opts), std::invalid_argument);
}

TEST_CASE("pipelines on a fresh checkout", "[pipeline]") {
  PipelineOptions opts;
  opts.threads = 4;
  auto r = cmd_run_all(opts);
  CHECK_FALSE(r.falsified());
  CHECK(r.count(StepStatus::Verified) >= 20);
  CHECK(validate_report_json(to_json(r)).empty());
  for (char const* id : {"h4.2.order15", "f4.1.target-order", "f4.4.census", "f4.5.order6", "f4.6.graph-auto",
                         "f4.7.degenerate", "f4.9.hard", "f4.10.image-order", "f4.11.asymmetry", "ex13.2.relators",
                         "ex13.3.center", "ex13.6.index", "torsion.E8.eps10.power", "torsion.E6.relation.eps12^4"}) {
    CAPTURE(id);
    REQUIRE(r.find(id));
    CHECK(r.find(id)->status == StepStatus::Verified);
  }
  CHECK(r.find("f4.1.target-order")->witness->find("1156") != std::string::npos);
  // ids are unique and the order is stable across runs and thread counts
  std::set<std::string> ids;
  for (auto const& s : r.steps) CHECK(ids.insert(s.claim_id).second);
  opts.threads = 1;
  CHECK(same(r, cmd_run_all(opts)));
}

TEST_CASE("JSON written by the command line tool", "[cli-json]") {
  char const* path = std::getenv("ARTIN_RUN_ALL_JSON");
  if (!path) SKIP("ARTIN_RUN_ALL_JSON not set");
  std::ifstream in(path);
  REQUIRE(in);
  auto j = nlohmann::json::parse(in);
  CHECK(validate_report_json(j).empty());
  auto r = report_from_json(j);
  CHECK(r.pipeline == "run-all");
  CHECK_FALSE(r.falsified());
}
