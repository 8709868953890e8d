#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "test_util.hh"

using spatch::test::CliResult;
using spatch::test::run_cli;
using spatch::test::TempDir;

namespace {

std::string q(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("gen, fill, info pipeline") {
  TempDir tmp;
  auto ribbon = tmp.file("r.json");
  auto net = tmp.file("p.json");

  CliResult gen = run_cli("gen -o " + q(ribbon) + " -n 5 -d 5 --seed 1");
  REQUIRE(gen.exit_code == 0);
  auto gen_json = nlohmann::json::parse(gen.out);
  CHECK(gen_json.at("control_points") == 40);

  CliResult fill = run_cli("fill -i " + q(ribbon) + " -o " + q(net));
  REQUIRE(fill.exit_code == 0);
  auto fill_json = nlohmann::json::parse(fill.out);
  CHECK(fill_json.at("depth") == 8);
  CHECK(fill_json.at("points") == 495);
  CHECK(fill_json.at("fixed") == 135);
  CHECK(fill_json.at("free") == 360);
  CHECK(fill_json.at("mask") == "biharmonic");

  CliResult info = run_cli("info -i " + q(net));
  REQUIRE(info.exit_code == 0);
  auto info_json = nlohmann::json::parse(info.out);
  CHECK(info_json.at("points") == 495);
  CHECK(info_json.at("fixed") == 135);
  CHECK(info_json.at("free") == 360);
}

TEST_CASE("c0 fill defaults to the harmonic mask") {
  TempDir tmp;
  auto ribbon = tmp.file("r.json");
  auto net = tmp.file("c0.json");
  REQUIRE(run_cli("gen -o " + q(ribbon) + " -n 5 -d 5 --seed 2").exit_code == 0);
  CliResult fill = run_cli("fill -i " + q(ribbon) + " -o " + q(net) + " --continuity c0");
  REQUIRE(fill.exit_code == 0);
  auto j = nlohmann::json::parse(fill.out);
  CHECK(j.at("depth") == 5);
  CHECK(j.at("points") == 126);
  CHECK(j.at("mask") == "harmonic");
}

TEST_CASE("eval") {
  TempDir tmp;
  auto ribbon = tmp.file("r.json");
  auto net = tmp.file("p.json");
  REQUIRE(run_cli("gen -o " + q(ribbon) + " -n 4 -d 3 --seed 3").exit_code == 0);
  REQUIRE(run_cli("fill -i " + q(ribbon) + " -o " + q(net)).exit_code == 0);

  CliResult corner = run_cli("eval -i " + q(net) + " --bary 1,0,0,0");
  REQUIRE(corner.exit_code == 0);
  CHECK(nlohmann::json::parse(corner.out).at("point").size() == 3);

  CliResult center = run_cli("eval -i " + q(net) + " --uv 0,0");
  CHECK(center.exit_code == 0);

  CHECK(run_cli("eval -i " + q(net) + " --bary 0.5,0.2,0.2,0.2").exit_code == 2);
  CHECK(run_cli("eval -i " + q(net) + " --uv 5,5").exit_code == 2);
  CHECK(run_cli("eval -i " + q(net)).exit_code == 2);
}

TEST_CASE("check exit codes") {
  TempDir tmp;
  auto ribbon = tmp.file("r.json");
  auto g1 = tmp.file("g1.json");
  auto c0 = tmp.file("c0.json");
  REQUIRE(run_cli("gen -o " + q(ribbon) + " -n 5 -d 3 --seed 4").exit_code == 0);
  REQUIRE(run_cli("fill -i " + q(ribbon) + " -o " + q(g1)).exit_code == 0);
  REQUIRE(run_cli("fill -i " + q(ribbon) + " -o " + q(c0) + " --continuity c0").exit_code == 0);

  CliResult pass = run_cli("check -i " + q(g1) + " --ribbon " + q(ribbon));
  CHECK(pass.exit_code == 0);
  CHECK(nlohmann::json::parse(pass.out).at("pass") == true);

  CHECK(run_cli("check -i " + q(c0) + " --ribbon " + q(ribbon) + " --continuity g1").exit_code ==
        2);

  CliResult c0pass = run_cli("check -i " + q(c0) + " --ribbon " + q(ribbon) + " --continuity c0");
  CHECK(c0pass.exit_code == 0);
}

TEST_CASE("mesh writes an obj") {
  TempDir tmp;
  auto ribbon = tmp.file("r.json");
  auto net = tmp.file("p.json");
  auto obj = tmp.file("p.obj");
  REQUIRE(run_cli("gen -o " + q(ribbon) + " -n 4 -d 3 --seed 5").exit_code == 0);
  REQUIRE(run_cli("fill -i " + q(ribbon) + " -o " + q(net)).exit_code == 0);

  CliResult mesh = run_cli("mesh -i " + q(net) + " -o " + q(obj) + " -r 4");
  REQUIRE(mesh.exit_code == 0);
  auto j = nlohmann::json::parse(mesh.out);
  CHECK(j.at("vertices") == 1 + 4 * 4 * 5 / 2);
  CHECK(j.at("triangles") == 4 * 16);
  CHECK(std::filesystem::file_size(obj) > 0);
}

TEST_CASE("failure exit codes") {
  TempDir tmp;
  CHECK(run_cli("fill -i " + q(tmp.file("absent.json")) + " -o " + q(tmp.file("x.json")))
            .exit_code == 1);

  auto garbage = tmp.file("garbage.json");
  {
    std::ofstream out(garbage);
    out << "{ nope";
  }
  CHECK(run_cli("info -i " + q(garbage)).exit_code == 1);
  CHECK(run_cli("gen -o " + q(tmp.file("r.json")) + " -n 5 -d 1").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 1);
}

TEST_SUITE_END();
