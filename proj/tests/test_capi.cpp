// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "adiabat/adiabat.h"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string take(char* text) {
  std::string out = text ? text : "";
  adb_string_free(text);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(adb_version()).size() > 0);
  CHECK(std::string(adb_status_name(ADB_OK)) == "ok");
  CHECK(std::string(adb_status_name(ADB_ERR_PARSE)) == "parse");
}

TEST_CASE("instance lifecycle") {
  adb_instance* inst = nullptr;
  REQUIRE(adb_instance_from_fixture("toy1", &inst) == ADB_OK);
  size_t dim = 0;
  CHECK(adb_instance_dimension(inst, &dim) == ADB_OK);
  CHECK(dim == 20);
  char* json = nullptr;
  REQUIRE(adb_instance_to_json(inst, &json) == ADB_OK);
  const std::string text = take(json);
  CHECK(nlohmann::json::parse(text)["alpha"] == 0.5);

  adb_instance* copy = nullptr;
  REQUIRE(adb_instance_from_json(text.c_str(), &copy) == ADB_OK);
  CHECK(adb_instance_set_alpha(copy, "0") == ADB_OK);
  double s_star = 0.0;
  double delta = 0.0;
  REQUIRE(adb_instance_min_gap(copy, &s_star, &delta) == ADB_OK);
  CHECK(s_star > 0.6);
  CHECK(s_star < 0.75);
  CHECK(delta > 0.03);
  CHECK(adb_instance_set_alpha(copy, "-1") == ADB_ERR_INVALID_ARGUMENT);
  adb_instance_free(copy);
  adb_instance_free(inst);
  adb_instance_free(nullptr);
}

TEST_CASE("errors carry a status and a message") {
  adb_instance* inst = nullptr;
  CHECK(adb_instance_from_fixture("nope", &inst) == ADB_ERR_INVALID_ARGUMENT);
  CHECK(inst == nullptr);
  CHECK(std::string(adb_last_error()).size() > 0);
  const auto err = nlohmann::json::parse(take(adb_last_error_json()));
  CHECK(err["error"]["code"] == "invalid_argument");
  CHECK(adb_instance_from_json("{", &inst) == ADB_ERR_PARSE);
  CHECK(adb_instance_from_file("/nonexistent/x.json", &inst) == ADB_ERR_IO);
  CHECK(adb_instance_from_fixture(nullptr, &inst) == ADB_ERR_INVALID_ARGUMENT);

  adb_config* cfg = nullptr;
  REQUIRE(adb_config_new(&cfg) == ADB_OK);
  CHECK(adb_config_set_grid(cfg, 10) == ADB_ERR_INVALID_ARGUMENT);
  CHECK(adb_config_set_checks(cfg, "oracle,bogus") == ADB_ERR_INVALID_ARGUMENT);
  CHECK(adb_config_set_alpha_list(cfg, "x") == ADB_ERR_PARSE);
  CHECK(adb_config_set_refine(cfg, 0.0) == ADB_ERR_INVALID_ARGUMENT);
  adb_config_free(cfg);
}

TEST_CASE("fixture documents") {
  char* doc = nullptr;
  REQUIRE(adb_cmd_fixture("random:n=7,k=3,p=0.4,seed=3", &doc) == ADB_OK);
  const auto j = nlohmann::json::parse(take(doc));
  CHECK(j["n"] == 7);
  CHECK(j["k"] == 3);
  CHECK(adb_cmd_fixture("random:n=7,k=9", &doc) != ADB_OK);
}

TEST_CASE("verify runs the selected checks") {
  adb_instance* inst = nullptr;
  adb_config* cfg = nullptr;
  REQUIRE(adb_instance_from_fixture("toy2", &inst) == ADB_OK);
  REQUIRE(adb_config_new(&cfg) == ADB_OK);
  REQUIRE(adb_config_set_grid(cfg, 101) == ADB_OK);
  REQUIRE(adb_config_set_checks(cfg, "oracle,spectral,overlaps,prop1") == ADB_OK);
  char* summary = nullptr;
  int passed = 0;
  REQUIRE(adb_cmd_verify(inst, cfg, &summary, &passed) == ADB_OK);
  const auto j = nlohmann::json::parse(take(summary));
  CHECK(passed == 1);
  CHECK(j["passed"] == true);
  adb_config_free(cfg);
  adb_instance_free(inst);
}

TEST_CASE("scan writes identical files on repeated runs") {
  adb_instance* inst = nullptr;
  REQUIRE(adb_instance_from_fixture("toy1", &inst) == ADB_OK);
  const fs::path root = fs::temp_directory_path() / "adiabat_test_capi";
  fs::remove_all(root);
  for (const char* run : {"a", "b"}) {
    adb_config* cfg = nullptr;
    REQUIRE(adb_config_new(&cfg) == ADB_OK);
    REQUIRE(adb_config_set_alpha_list(cfg, "0,1/2") == ADB_OK);
    REQUIRE(adb_config_set_grid(cfg, 101) == ADB_OK);
    REQUIRE(adb_config_set_window(cfg, 200) == ADB_OK);
    REQUIRE(adb_config_set_output_dir(cfg, (root / run).string().c_str()) == ADB_OK);
    char* summary = nullptr;
    REQUIRE(adb_cmd_scan(inst, cfg, &summary) == ADB_OK);
    CHECK(nlohmann::json::parse(take(summary)).is_object());
    adb_config_free(cfg);
  }
  std::size_t compared = 0;
  for (const auto& entry : fs::recursive_directory_iterator(root / "a")) {
    if (!entry.is_regular_file()) continue;
    const fs::path rel = fs::relative(entry.path(), root / "a");
    CAPTURE(rel.string());
    REQUIRE(fs::exists(root / "b" / rel));
    if (rel.extension() == ".csv") {
      CHECK(slurp(entry.path()) == slurp(root / "b" / rel));
      ++compared;
    } else {
      // Reports record the output directory; everything else must match.
      auto ja = nlohmann::json::parse(slurp(entry.path()));
      auto jb = nlohmann::json::parse(slurp(root / "b" / rel));
      ja["config"].erase("out");
      jb["config"].erase("out");
      CHECK(ja.dump() == jb.dump());
    }
  }
  CHECK(compared >= 9);
  CHECK(fs::exists(root / "a" / "alpha_1_2" / "overlaps_g.csv"));
  CHECK(fs::exists(root / "a" / "alpha_0" / "gap.csv"));
  fs::remove_all(root);
  adb_instance_free(inst);
}
