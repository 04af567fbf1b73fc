#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_runner.hpp"
#include "oracle.hpp"
#include "report_schema.hpp"
#include "svg_inventory.hpp"

using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("chromo_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("report prints the reference centers") {
  auto r = cli::run("report --points '0,0;6,1;2,3'");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(schema::validate_report(j).empty());
  CHECK(j["centers"]["blue"]["O"] == json({"15/8", "15/4"}));
  CHECK(j["centers"]["G"] == json({"8/3", "4/3"}));
  CHECK(chromo::reverify_report(j).empty());
}

TEST_CASE("report over F_13 passes every law") {
  auto r = cli::run("report --points '0,0;6,1;2,3' --field fp:13");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["field"] == "fp:13");
  for (const auto& [name, v] : j["law_checks"].items()) {
    CAPTURE(name);
    CHECK(v != false);
  }
}

TEST_CASE("report text format") {
  auto r = cli::run("report --points '0,0;6,1;2,3' --format text");
  CHECK(r.status == 0);
  CHECK(r.out.find("15/8") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli::run("report --points '0,0;1,1;2,2'").status == 3);
  CHECK(cli::run("report --points '0,0;1,1'").status == 2);
  CHECK(cli::run("report --points '0,0;1/0,1;2,3'").status == 2);
  CHECK(cli::run("report --points 'a,b;1,1;2,3'").status == 2);
  CHECK(cli::run("report --points '0,0;6,1;2,3' --field fp:4").status == 4);
  CHECK(cli::run("report --points '0,0;6,1;2,3' --field fp:3").status == 0);
  CHECK(cli::run("report").status == 2);
  CHECK(cli::run("frobnicate").status == 2);
  CHECK(cli::run("sweep --prime 4").status == 4);
  CHECK(cli::run("sweep --prime 5 --mode sometimes").status == 2);
  CHECK(cli::run("sweep --prime 5 --laws bogus").status == 2);
  CHECK(cli::run("svg --points '0,0;6,1;2,3' --out /nonexistent-dir/x.svg").status == 5);
}

TEST_CASE("svg writes a file with the requested elements") {
  auto path = temp_path("euler.svg");
  auto r = cli::run("svg --points '0,0;6,1;2,3' --elements euler,circumcircles,centers --out '" + path.string() + "'");
  REQUIRE(r.status == 0);
  auto inv = svg_check::inspect(slurp(path));
  CHECK(inv.balanced);
  CHECK(inv.width == "800");
  CHECK(inv.by_class["euler red"] == 1);
  CHECK(inv.by_class["circumcircle blue"] == 1);
  CHECK(inv.by_class["nine-point blue"] == 0);
  CHECK(svg_check::has_label(inv, "G"));
  std::filesystem::remove(path);
}

TEST_CASE("svg of a degenerate triangle writes nothing") {
  auto path = temp_path("degenerate.svg");
  std::filesystem::remove(path);
  CHECK(cli::run("svg --points '0,0;1,1;2,2' --out '" + path.string() + "'").status == 3);
  CHECK_FALSE(std::filesystem::exists(path));
}

TEST_CASE("sweep output is independent of the job count") {
  auto one = cli::run("sweep --prime 5 --mode random:3000 --seed 4 --jobs 1");
  auto many = cli::run("sweep --prime 5 --mode random:3000 --seed 4 --jobs 3");
  REQUIRE(one.status == 0);
  CHECK(one.out == many.out);
  json j = json::parse(one.out);
  CHECK(j["total"] == 3000);
  CHECK(j["total_failures"] == 0);
  CHECK_FALSE(j.contains("elapsed_seconds"));
  json timed = json::parse(cli::run("sweep --prime 3 --timing").out);
  CHECK(timed.contains("elapsed_seconds"));
}
