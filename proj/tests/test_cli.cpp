#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"mxguard"};
  argv.insert(argv.end(), args);
  std::ostringstream out, err;
  const int code = mxguard::cli::Run(static_cast<int>(argv.size()), argv.data(),
                                     out, err);
  return {code, out.str(), err.str()};
}

bool Contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("help and usage errors") {
  auto help = Invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(Contains(help.out, "simulate"));
  auto sim_help = Invoke({"simulate", "--help"});
  CHECK(sim_help.code == 0);
  CHECK(Contains(sim_help.out, "--targets"));

  CHECK(Invoke({}).code == 2);
  CHECK(Invoke({"simulate", "--bits", "abc"}).code == 2);
  CHECK(Invoke({"simulate", "--model", "weird"}).code == 2);
  CHECK(Invoke({"simulate", "--targets", "c9"}).code == 2);
  const auto missing_k = Invoke({"simulate", "--model", "k-burst"});
  CHECK(missing_k.code == 2);
  CHECK(Contains(missing_k.err, "--faults"));
  CHECK(Invoke({"demo", "ecdh"}).code == 2);
}

TEST_CASE("demo transcripts") {
  const auto rsa = Invoke({"demo", "rsa"});
  CHECK(rsa.code == 0);
  CHECK(Contains(rsa.out, "ciphertext 2790"));
  CHECK(Contains(rsa.out, "recovered 65"));
  CHECK(Contains(rsa.out, "ACCEPTED"));

  const auto multiple = Invoke({"demo", "rsa", "--totient-source", "key-multiple"});
  CHECK(multiple.code == 0);
  CHECK(Contains(multiple.out, "recovered 65"));

  const auto dh = Invoke({"demo", "dh"});
  CHECK(dh.code == 0);
  CHECK(Contains(dh.out, "shared_a 2"));
  CHECK(Contains(dh.out, "shared_b 2"));

  const auto faulted = Invoke({"demo", "dh", "--inject", "c3", "--model",
                               "total-random", "--inject-step", "1"});
  CHECK(faulted.code == 1);
  CHECK(Contains(faulted.err, "abort"));

  CHECK(Invoke({"demo", "rsa", "--fixture", "nope"}).code == 2);
}

TEST_CASE("simulate output is deterministic and honours --format") {
  const std::initializer_list<const char*> args = {
      "simulate", "--model", "single-bit", "--targets", "y1,c3", "--l",
      "10,20", "--bits", "128", "--k-bits", "16", "--iterations", "40",
      "--seed", "42", "--moduli", "2", "--format", "csv"};
  const auto a = Invoke(args);
  const auto b = Invoke(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Contains(a.out, "single-bit,y1,10,1,40,"));
  CHECK(Contains(a.out, "single-bit,c3,20,1,40,"));

  const auto json = Invoke({"simulate", "--bits", "64", "--l", "10", "--k-bits", "8",
                            "--iterations", "5", "--moduli", "1", "--format",
                            "json"});
  CHECK(json.code == 0);
  CHECK(Contains(json.out, "\"results\""));
}

TEST_CASE("--out writes the report to a file") {
  const auto path =
      std::filesystem::temp_directory_path() / "mxguard_cli_out_test.csv";
  std::filesystem::remove(path);
  const auto r = Invoke({"simulate", "--bits", "64", "--l", "10", "--k-bits", "8",
                         "--iterations", "5", "--moduli", "1", "--format", "csv",
                         "--out", path.c_str()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(Contains(text.str(), "model,target,l,k"));
  std::filesystem::remove(path);
}
