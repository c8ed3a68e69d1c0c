#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pillar::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify") {
  auto r = run({"verify", "--genus", "2..6", "--all"});
  CHECK(r.code == 0);
  for (int g = 2; g <= 6; ++g) CHECK(r.out.find("genus " + std::to_string(g) + ": PASS") != std::string::npos);

  r = run({"verify", "--genus", "3", "--which", "thm22"});
  CHECK(r.code == 0);
  CHECK(r.out.find("genus 3: PASS (3 checks)") != std::string::npos);

  r = run({"verify", "--genus", "1", "--which", "thm22"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());

  CHECK(run({"verify", "--genus", "3", "--which", "nonsense"}).code == 2);
  CHECK(run({"verify", "--genus", "5..3"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify JSON is independent of the worker count") {
  const auto one = run({"verify", "--genus", "2..5", "--which", "relator,yz-roundtrip", "--json",
                        "--jobs", "1", "--seed", "4"});
  const auto four = run({"verify", "--genus", "2..5", "--which", "relator,yz-roundtrip", "--json",
                         "--jobs", "4", "--seed", "4"});
  REQUIRE(one.code == 0);
  CHECK(one.out == four.out);
  const auto doc = nlohmann::json::parse(one.out);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 4);
  CHECK(doc[0]["genus"] == 2);
  CHECK(doc[3]["genus"] == 5);
}

TEST_CASE("act") {
  auto r = run({"act", "sigma", "0", "--genus", "2", "--on", "y1"});
  CHECK(r.code == 0);
  CHECK(r.out == "y2 x2^-1 y2^-1 x1 y1^-1 x1^-1 y2 x2 y2^-1\n");
  CHECK(run({"act", "twist-word", "a1", "--genus", "2", "--on", "x1"}).out == "x1\n");
  CHECK(run({"act", "braid-psi", "b1 b1^-1", "--genus", "2", "--on", "x1 y1"}).out == "x1 y1\n");

  r = run({"act", "twist-word", "a1", "--genus", "2", "--on", "x1 q"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position 3") != std::string::npos);
  CHECK(run({"act", "sigma", "zero", "--genus", "2", "--on", "x1"}).code == 2);
  CHECK(run({"act", "sigma", "0", "--genus", "2", "--on", "x3"}).code == 2);
  CHECK(run({"act", "widget", "0", "--genus", "2", "--on", "x1"}).code == 2);
}

TEST_CASE("braid-trivial") {
  auto r = run({"braid-trivial", "--strands", "3", "b1 b2 b1 b2^-1 b1^-1 b2^-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "trivial\n");
  r = run({"braid-trivial", "--strands", "3", "b1"});
  CHECK(r.code == 1);
  CHECK(r.out == "nontrivial\n");
  CHECK(run({"braid-trivial", "--strands", "2", "b2"}).code == 2);
}

TEST_CASE("export") {
  auto r = run({"export", "sigma", "1", "--genus", "2", "--json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["images"].size() == 4);
  for (const char* g : {"x1", "x2", "y1", "y2"}) CHECK(doc["images"].contains(g));
  CHECK(doc["images"]["y2"] == "x2 y2^-1 x2^-1");

  r = run({"export", "twist-word", "a1 b1", "--genus", "2", "--json"});
  REQUIRE(r.code == 0);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["images"]["x1"] == "x1 y1 x1^-1");
  // Every exported image parses back through act as a word over the same basis.
  for (const auto& [name, image] : doc["images"].items())
    CHECK(run({"act", "twist-word", "1", "--genus", "2", "--on", image.get<std::string>()}).out ==
          image.get<std::string>() + "\n");

  CHECK(run({"export", "sigma", "0", "--genus", "1", "--json"}).code == 2);
  r = run({"export", "sigma", "1", "--genus", "2"});
  CHECK(r.out.find("y2 -> x2 y2^-1 x2^-1") != std::string::npos);
}
