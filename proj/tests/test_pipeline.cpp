#include <doctest.h>

#include "dezaforge/pipeline.hpp"

using namespace dezaforge;

namespace {

const nlohmann::json& stage(const nlohmann::json& report, const std::string& name) {
  for (const auto& s : report.at("stages"))
    if (s.at("name") == name) return s;
  throw std::runtime_error("no stage " + name);
}

nlohmann::json without_timings(nlohmann::json report) {
  for (auto& s : report.at("stages")) s.erase("elapsed_ms");
  return report;
}

}  // namespace

TEST_CASE("named graphs") {
  CHECK(named_graph("gamma").order() == 243);
  CHECK(named_graph("delta-k2").order() == 486);
  CHECK(named_graph("c5").label() == "c5");
  CHECK_THROWS_AS(named_graph("gamma-k3"), UnknownGraph);
  CHECK(graph_names().size() == 7);
}

TEST_CASE("default pipeline passes and is reproducible") {
  const auto report = run_full_pipeline({});
  CHECK(report.at("schema") == "deza-forge/1");
  CHECK(report.at("overall_pass") == true);
  std::size_t strict = 0;
  for (const auto& s : report.at("stages")) {
    CHECK_MESSAGE(s.at("pass") == true, s.at("name"));
    if (s.at("certificate").contains("deza") && s.at("certificate").at("deza").at("parameters").at("strict") == true)
      ++strict;
  }
  CHECK(strict == 3);
  CHECK_FALSE(report.at("stages").dump().find("aut-gamma") != std::string::npos);
  CHECK(without_timings(report) == without_timings(run_full_pipeline({})));
}

TEST_CASE("deep pipeline reports exact automorphism group orders") {
  PipelineConfig config;
  config.deep = true;
  const auto report = run_full_pipeline(config);
  CHECK(report.at("overall_pass") == true);
  CHECK(stage(report, "aut-delta").at("certificate").at("order") == 2592);
  CHECK(stage(report, "aut-gamma").at("certificate").at("order") == 3849120);
}

TEST_CASE("a tiny budget falls back to verified lower bounds") {
  PipelineConfig config;
  config.deep = true;
  config.aut_node_budget = 2;
  const auto report = run_full_pipeline(config);
  const auto& delta = stage(report, "aut-delta").at("certificate");
  CHECK(delta.at("status") == "lower-bound only");
  CHECK(delta.at("lower_bound") == 2592);
  CHECK(stage(report, "aut-gamma").at("certificate").at("lower_bound") == 3849120);
  CHECK(report.at("overall_pass") == true);
}

TEST_CASE("corrupted connection set fails the SRG stage with witnesses") {
  PipelineConfig config;
  auto reps = s1_representatives();
  std::size_t outside = 1;
  while (connection_set_s1().contains(outside)) ++outside;
  reps.back() = index_to_vector(outside, 5);
  config.s1_override = reps;
  const auto report = run_full_pipeline(config);
  CHECK(report.at("overall_pass") == false);
  const auto& srg = stage(report, "gamma-srg");
  CHECK(srg.at("pass") == false);
  CHECK(srg.at("certificate").at("witnesses").size() == 2);
  CHECK(report.at("config").contains("s1_override"));
}
