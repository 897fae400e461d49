#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <radocert/certificate.hpp>
#include <radocert/cli.hpp>

using namespace radocert;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args)
{
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_path(const std::string& name)
{
  return (std::filesystem::temp_directory_path() / ("radocert_test_" + name + ".json")).string();
}

Json load(const std::string& path)
{
  std::ifstream in(path);
  return Json::parse(in);
}

}  // namespace

TEST_CASE("documented invocations")
{
  const Run linear = run({"linear", "--domain", "Z", "--matrix", "1 1 -1"});
  CHECK(linear.status == 0);
  CHECK(linear.out.find("ColumnsCondition") != std::string::npos);
  CHECK(linear.out.find("C1 = {1, 3}") != std::string::npos);

  const Run search = run({"search", "--domain", "Z", "--poly", "x+y-z", "--colors", "2", "--budget", "12"});
  CHECK(search.status == 0);
  CHECK(search.out.rfind("PartitionCertified", 0) == 0);

  const Run refute = run({"refute", "--domain", "Z", "--poly", "x-2*y", "--coloring", "basep:3", "--window", "1..200"});
  CHECK(refute.status == 2);
  CHECK(refute.out.rfind("Clean", 0) == 0);
}

TEST_CASE("exit codes")
{
  CHECK(run({"search", "--poly", "x-2*y", "--budget", "8"}).status == 2);
  CHECK(run({"linear", "--matrix", "1 -2"}).status == 0);
  CHECK(run({"refute", "--poly", "x+y-z", "--coloring", "basep:3", "--window", "1..10"}).status == 0);
  CHECK(run({"window", "--poly", "x+y-z", "--window", "1..4"}).status == 0);
  CHECK(run({"density", "--poly", "x1-2*x2+x3", "--window", "1..9", "--delta", "0.6", "--injective"}).status == 0);
  CHECK(run({"roots", "--poly", "x+y-z", "--window", "1..5"}).status == 0);
  CHECK(run({"reduce", "--poly", "x^2-2", "--transform", "q3"}).status == 0);
  CHECK(run({}).status == 1);
  CHECK(run({"frobnicate"}).status == 1);
  CHECK(run({"search", "--colors", "2"}).status == 1);
  CHECK(run({"density", "--poly", "x-y", "--window", "1..3", "--delta", "2"}).status == 1);
  CHECK(run({"reduce", "--poly", "x-y", "--transform", "gate:mul", "--gate-var", "w"}).status == 1);
  CHECK(run({"verify", temp_path("does_not_exist")}).status == 1);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("malformed input is reported with a caret")
{
  const Run bad_poly = run({"window", "--poly", "x+*y", "--window", "1..4"});
  CHECK(bad_poly.status == 1);
  CHECK(bad_poly.err.find("x+*y\n  ^") != std::string::npos);

  const Run bad_matrix = run({"linear", "--matrix", "1 2 q"});
  CHECK(bad_matrix.status == 1);
  CHECK(bad_matrix.err.find("^") != std::string::npos);

  const Run bad_domain = run({"linear", "--domain", "GF(6)[t]", "--matrix", "1"});
  CHECK(bad_domain.status == 1);
  CHECK(bad_domain.err.find("not a prime power") != std::string::npos);
}

TEST_CASE("every emitted certificate verifies")
{
  const std::vector<std::vector<std::string>> commands{
      {"linear", "--matrix", "1 1 -1"},
      {"linear", "--matrix", "1 -2"},
      {"linear", "--domain", "GF(2)[t]", "--matrix", "1 1 -1"},
      {"search", "--poly", "x+y-z", "--colors", "2", "--budget", "12"},
      {"search", "--poly", "x-2*y", "--budget", "8"},
      {"search", "--domain", "GF(2)[t]", "--poly", "x+y-z", "--colors", "1", "--budget", "8"},
      {"window", "--poly", "(x1-2*x2+x3)^2", "--window", "1..8", "--injective"},
      {"window", "--poly", "(x1-2*x2+x3)^2", "--window", "1..9", "--injective"},
      {"density", "--poly", "(x1-2*x2+x3)^2", "--window", "1..9", "--delta", "5/9", "--injective"},
      {"density", "--poly", "(x1-2*x2+x3)^2", "--window", "1..9", "--delta", "0.6", "--injective"},
      {"density", "--poly", "x*y-z^2", "--window", "1..10", "--delta", "1/2", "--mode", "mul"},
      {"roots", "--poly", "x+y-z", "--window", "1..6", "--disjoint", "2"},
      {"roots", "--domain", "GF(3)[t]", "--poly", "x^2-t*y", "--window", "prefix:12"},
      {"refute", "--poly", "x-2*y", "--coloring", "basep:3", "--window", "1..200"},
      {"refute", "--poly", "x+y-z", "--coloring", "basep:3", "--window", "1..10"},
      {"refute", "--domain", "GF(2)[t]", "--poly", "x+y-z", "--coloring", "ordmod:t:2", "--window", "prefix:63"},
      {"reduce", "--poly", "x^2-2", "--transform", "q3"},
      {"reduce", "--poly", "x^2-y", "--transform", "dq4"},
      {"reduce", "--poly", "x-3*y", "--transform", "gate:mul", "--gate-var", "y"},
      {"reduce", "--poly", "x-3", "--transform", "gate:add"},
      {"reduce", "--domain", "GF(3)[t]", "--poly", "x*y-t", "--transform", "shift"},
  };
  int n = 0;
  for (auto args : commands) {
    const std::string path = temp_path("roundtrip" + std::to_string(n++));
    args.push_back("--out");
    args.push_back(path);
    const Run r = run(args);
    REQUIRE_MESSAGE(r.status != 1, args[0] << ": " << r.err);
    const Run v = run({"verify", path});
    CHECK_MESSAGE(v.status == 0, args[0] << " " << args[2] << ": " << v.out);
    CHECK(v.out.rfind("verified", 0) == 0);
    std::filesystem::remove(path);
  }
}

TEST_CASE("certificates are deterministic and tamper-evident")
{
  const std::string path = temp_path("determinism");
  const std::vector<std::string> args{"window", "--poly", "(x1-2*x2+x3)^2", "--window", "1..8",
                                      "--injective", "--out", path};
  REQUIRE(run(args).status == 0);
  Json first = load(path);
  REQUIRE(run(args).status == 0);
  Json second = load(path);
  first.erase("elapsed_ms");
  second.erase("elapsed_ms");
  CHECK(first.dump() == second.dump());

  Json tampered = first;
  auto& coloring = tampered["payload"]["certificate"]["coloring"];
  coloring[3] = 1 - coloring[3].get<int>();
  std::ofstream(path) << tampered.dump(2);
  const Run v = run({"verify", path});
  CHECK(v.status == 1);
  CHECK(v.out.rfind("rejected", 0) == 0);

  Json future = first;
  future["schema_version"] = 99;
  std::ofstream(path) << future.dump(2);
  const Run s = run({"verify", path});
  CHECK(s.status == 1);
  CHECK(s.err.find("schema") != std::string::npos);

  std::ofstream(path) << "{ not json";
  CHECK(run({"verify", path}).status == 1);
  std::filesystem::remove(path);
}

TEST_CASE("certificate to stdout")
{
  const Run r = run({"linear", "--matrix", "1 1 -1", "--out", "-"});
  CHECK(r.status == 0);
  const auto brace = r.out.find("\n{");
  REQUIRE(brace != std::string::npos);
  const Json cert = Json::parse(r.out.substr(brace));
  CHECK(cert["verdict"] == "ColumnsCondition");
  CHECK(cert["format"] == kCertificateFormat);
  CHECK(verify_certificate(cert).ok);
}
