#include "cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "nblab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = nblab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<double> row(const std::string& line) {
  std::vector<double> v;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) v.push_back(std::stod(cell));
  return v;
}

}  // namespace

TEST_CASE("toy") {
  const auto r = run({"toy", "--q", "(1-z)^2", "--P", "1", "--n-list", "64,128,256"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 4);
  CHECK(l[0] == "N,E,N_times_E");
  const auto last = row(l[3]);
  CHECK(last[0] == 256);
  CHECK(last[2] > row(l[1])[2]);
  CHECK(std::abs(last[2] - 4) < 0.1);
  CHECK(r.err.find("limit=") != std::string::npos);
  // non-unit roots use the Toeplitz route
  const auto e = run({"toy", "--q", "1-2z", "--n-list", "0,4"});
  REQUIRE(e.code == 0);
  CHECK(row(lines(e.out)[1])[1] > 0.2);
}

TEST_CASE("bound and zeros") {
  const auto b = run({"bound", "--zeros", "fixtures/zeros100.txt", "--take", "1", "--L-list", "100,1000,10000"});
  REQUIRE(b.code == 0);
  const auto l = lines(b.out);
  CHECK(l[0] == "L,P_times_L,target_sum,abs_err");
  CHECK(std::abs(row(l[1])[2] - 0.0049990) < 1e-7);
  const auto z = run({"zeros", "--file", "fixtures/zeros100.txt", "--constant"});
  REQUIRE(z.code == 0);
  const auto v = row(lines(z.out)[1].substr(0, lines(z.out)[1].rfind(',')));
  CHECK(std::abs(v[0] - 0.0462) < 0.001);
  CHECK(std::abs(v[3] - 0.2149) < 0.001);
  const auto listing = run({"zeros", "--file", "fixtures/zeros100.txt"});
  CHECK(lines(listing.out).size() == 101);
}

TEST_CASE("special, gram and distance") {
  auto r = run({"special", "--fn", "zeta", "--sigma", "2", "--tau-list", "0", "--digits", "12"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out)[1] == "2,0,1.64493406685,0");
  r = run({"special", "--fn", "big-a", "--t-list", "1,0.5"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(row(lines(r.out)[2])[1] - 1.3068528194400546) < 1e-14);
  r = run({"gram", "--tau-list", "14.134725141734693,21.022039638771555", "--mult", "2,1", "--L", "10000"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 10);
  r = run({"distance", "--lambda-list", "0.5", "--count", "4"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out)[0] == "lambda,d_hat,d_hat_sqrtlog");
}

TEST_CASE("exit codes") {
  auto r = run({"--precision-bits", "32", "zeros", "--file", "fixtures/zeros100.txt"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error kind=InvalidArgument exit=2", 0) == 0);
  CHECK(run({"toy", "--q", "(1-z)"}).code == 2);
  CHECK(run({"toy", "--q", "(1-q)", "--n-list", "1"}).code == 2);
  CHECK(run({"toy", "--q", "(1-z)", "--n-list", "4,2"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"zeros", "--file", "no/such/file"}).code == 2);
  CHECK(run({"distance", "--lambda-list", "1.5"}).code == 2);
  r = run({"special", "--fn", "zeta", "--sigma", "1", "--tau-list", "0"});
  CHECK(r.code == 3);
  CHECK(r.err.find("kind=PoleAtOne") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("output file and determinism") {
  const std::string path = "cli_test_output.csv";
  const auto r = run({"toy", "--q", "(1-z)(1+z)", "--n-list", "8,16", "--output", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  const auto again = run({"toy", "--q", "(1-z)(1+z)", "--n-list", "8,16"});
  CHECK(file.str() == again.out);
  CHECK(run({"toy", "--q", "(1-z)(1+z)", "--n-list", "8,16"}).out == again.out);
  std::remove(path.c_str());
}
