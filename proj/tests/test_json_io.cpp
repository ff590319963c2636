#include "ezdlab/ezd.hpp"
#include "ezdlab/json_io.hpp"
#include "ezdlab/lab.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace ezdlab;
using ezdlab::testing::ideal;

TEST_CASE("envelope carries schema version and command first") {
  const Json j = envelope("hilbert", to_json(hilbert_function(build_quotient(ideal("x1^3, x2^3", 2), 5))));
  auto it = j.begin();
  CHECK(it.key() == "schema_version");
  CHECK(*it == 1);
  ++it;
  CHECK(it.key() == "command");
  CHECK(j["values"] == Json::array({1, 2, 3, 2, 1, 0}));
  CHECK(j["artinian_within_bound"] == true);
  CHECK(j["top_degree"] == 4);
}

TEST_CASE("hilbert json golden") {
  const Json j = to_json(hilbert_function(build_quotient(ideal("x1^2, x2^2, x2*x3, x3^2", 3), 3)));
  CHECK(j.dump() == R"({"values":[1,3,2,0],"artinian_within_bound":true,"top_degree":2})");
}

TEST_CASE("socle and yoshino json golden") {
  const auto r = build_quotient(ideal("x1^2, x1*x2, x2^2", 2), 3);
  CHECK(to_json(socle_dims(r)).dump() == R"({"dims":[0,2],"total":2,"gorenstein":false,"truncated":false})");
  CHECK(to_json(yoshino_conditions(r)).dump() == R"({"c1":false,"c2":true,"gorenstein":false})");
}

TEST_CASE("ezd report json has the full degree table") {
  const auto r = build_quotient(ideal("x1^2, x2^2", 2), 3);
  const Json j = to_json(is_ezd_pair(r, testing::poly("x1 + x2", 2), testing::poly("x1 - x2", 2)));
  CHECK(j["verdict"] == "ExactPair");
  REQUIRE(j["table"].size() == 3);
  CHECK(j["table"][1]["dim_ann_x"] == 1);
  CHECK(j["table"][1]["dim_ideal_y"] == 1);
}

TEST_CASE("scan json omits timing and workers unless asked") {
  ScanConfig cfg;
  cfg.nvars = 2;
  cfg.max_degree = 2;
  cfg.workers = 3;
  const auto report = conjecture_scan_monomial(cfg);
  const Json brief = to_json(report, false);
  CHECK_FALSE(brief.contains("instances"));
  CHECK_FALSE(brief.contains("seconds"));
  CHECK_FALSE(brief["config"].contains("workers"));
  CHECK(brief["examined"] == 2);
  CHECK(brief["counterexamples"].empty());
  const Json full = to_json(report, true, true);
  CHECK(full["instances"].size() == 2);
  CHECK(full.contains("seconds"));
}

TEST_CASE("scan csv has a header and one row per instance") {
  ScanConfig cfg;
  cfg.nvars = 2;
  cfg.max_degree = 3;
  const auto report = conjecture_scan_monomial(cfg);
  const std::string csv = scan_csv(report);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == report.instances.size() + 1);
  CHECK(csv.rfind("index,ideal,hilbert,", 0) == 0);
}
