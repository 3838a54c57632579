#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "tcs/cli_app.hpp"

using tcs::run_cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("overlap subcommand prints the self-overlap record") {
  const auto r = run({"overlap", "--l", "0,0", "--alpha", "0,0", "--h", "0,0",
                      "--beta", "0,0", "--sector", "0,0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("abs=3.14224265994") != std::string::npos);
}

TEST_CASE("sector and equivalent j0 flags print identical records") {
  const std::vector<std::string> tail = {"--l",    "0.4,-0.2", "--alpha",
                                         "1.2,2.5", "--h",     "0.1,0.3",
                                         "--beta", "0.4,5.2"};
  std::vector<std::string> a = {"overlap", "--sector", "0,h"};
  std::vector<std::string> b = {"overlap", "--j0", "0,0.5"};
  a.insert(a.end(), tail.begin(), tail.end());
  b.insert(b.end(), tail.begin(), tail.end());
  const auto ra = run(a);
  const auto rb = run(b);
  CHECK(ra.code == 0);
  CHECK(rb.code == 0);
  // identical up to the label line
  CHECK(ra.out.substr(ra.out.find("overlap re=")) ==
        rb.out.substr(rb.out.find("overlap re=")));
}

TEST_CASE("expect subcommand shows the deviation against the law column") {
  const auto r = run({"expect", "--l", "0.25,0.25", "--alpha", "0,0", "--sector",
                      "0,0"});
  CHECK(r.code == 0);
  // deviation and law both ~3.25e-4
  CHECK(r.out.find("0.000324986") != std::string::npos);
  const auto exact = run({"expect", "--l", "1,2", "--alpha", "0,0", "--sector",
                          "0,0"});
  CHECK(exact.code == 0);
  CHECK(exact.out.find(" 1 0 ") != std::string::npos);  // J=1, |J-l|=0

  const auto json = run({"expect", "--l", "0.25,0.25", "--alpha", "0,0",
                         "--sector", "0,0", "--json"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"J\"") != std::string::npos);
}

TEST_CASE("density subcommand writes deterministic CSV") {
  const std::string path1 = "test_density_a.csv";
  const std::string path2 = "test_density_b.csv";
  const std::vector<std::string> base = {"density", "--l",  "1,1",   "--alpha",
                                         "3.141592653589793,1.0471975511965976",
                                         "--sector", "0,0",  "--n1",  "32",
                                         "--n2",     "32",   "--format", "csv"};
  auto a = base;
  a.insert(a.end(), {"--out", path1});
  auto b = base;
  b.insert(b.end(), {"--out", path2});
  const auto ra = run(a);
  const auto rb = run(b);
  CHECK(ra.code == 0);
  CHECK(rb.code == 0);
  const std::string file1 = slurp(path1);
  const std::string file2 = slurp(path2);
  CHECK(!file1.empty());
  CHECK(file1 == file2);  // byte-identical rerun
  CHECK(file1.find("phi1,phi2,p\n") != std::string::npos);
  CHECK(file1.find("# mean=") != std::string::npos);
  CHECK(ra.out.find("argmax") != std::string::npos);
  std::remove(path1.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("density subcommand writes PGM with 16-bit range") {
  const std::string path = "test_density.pgm";
  const auto r = run({"density", "--l", "1,1", "--alpha", "3.14159,1.0472",
                      "--sector", "0,0", "--n1", "16", "--n2", "16", "--format",
                      "pgm", "--out", path});
  CHECK(r.code == 0);
  const std::string pgm = slurp(path);
  CHECK(pgm.substr(0, 3) == "P2\n");
  CHECK(pgm.find("65535") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("wavefunction subcommand evaluates a point") {
  const auto r = run({"wavefunction", "--l", "0,0", "--alpha", "0,0", "--phi",
                      "0,0", "--sector", "0,0"});
  CHECK(r.code == 0);
  // psi(0) = theta3(0|i/2pi)^2 = 6.28318537442, real positive
  CHECK(r.out.find("abs=6.28318537442") != std::string::npos);
}

TEST_CASE("bad flags exit with code 2") {
  CHECK(run({"density", "--l", "1,1", "--format", "bmp"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"overlap", "--sector", "0,0", "--j0", "0,0"}).code == 2);
  CHECK(run({"overlap", "--sector", "3,0"}).code == 2);
  CHECK(run({"expect", "--l", "1,2,3"}).code == 2);
}

TEST_CASE("TCS_TOL environment variable overrides the default tolerance") {
  // values outside (0, 1e-6] are rejected, which makes the override visible
  setenv("TCS_TOL", "0.5", 1);
  const auto bad = run({"expect", "--l", "0.25,0.25", "--sector", "0,0"});
  CHECK(bad.code == 2);
  setenv("TCS_TOL", "1e-10", 1);
  const auto ok = run({"expect", "--l", "0.25,0.25", "--sector", "0,0"});
  CHECK(ok.code == 0);
  unsetenv("TCS_TOL");
}

TEST_CASE("verify subcommand: one line per check, fault injection flips it") {
  const auto ok = run({"verify"});
  CHECK(ok.code == 0);
  size_t pass_lines = 0, fail_lines = 0;
  std::istringstream lines(ok.out);
  std::string line;
  std::vector<std::string> all;
  while (std::getline(lines, line)) all.push_back(line);
  for (const auto& l : all) {
    if (l.find(" PASS") != std::string::npos) ++pass_lines;
    if (l.find(" FAIL") != std::string::npos) ++fail_lines;
  }
  CHECK(fail_lines == 0);
  // every line except the trailing summary is one check
  CHECK(pass_lines == all.size() - 1);

  const auto broken = run({"verify", "--perturb-theta3", "1e-6"});
  CHECK(broken.code == 1);
  CHECK(broken.out.find(" FAIL") != std::string::npos);
}

TEST_CASE("degrees flag converts angles on input") {
  const auto deg = run({"wavefunction", "--l", "0,0", "--alpha", "0,0", "--phi",
                        "180,60", "--sector", "0,0", "--degrees"});
  const auto rad = run({"wavefunction", "--l", "0,0", "--alpha", "0,0", "--phi",
                        "3.141592653589793,1.0471975511965976", "--sector",
                        "0,0"});
  CHECK(deg.code == 0);
  CHECK(deg.out.substr(deg.out.find("psi")) ==
        rad.out.substr(rad.out.find("psi")));
}
