#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>

#include "cli_runner.hpp"

namespace {

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("spectrum defaults give a 12-row table") {
  const auto r = run({"spectrum"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 13);
  // (1,0) row, binding_ev is the sixth column
  const auto row = r.out.substr(r.out.find('\n') + 1);
  std::size_t pos = 0;
  for (int k = 0; k < 5; ++k) pos = row.find(',', pos) + 1;
  const double binding = std::stod(row.substr(pos));
  CHECK(binding == doctest::Approx(-13.61).epsilon(0.01 / 13.61));
}

TEST_CASE("spectrum JSON") {
  const auto r = run({"spectrum", "--format", "json", "--max-ntheta", "1", "--max-nr", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("[{\"n_theta\":1,\"n_r\":0,\"n\":1,", 0) == 0);
}

TEST_CASE("alpha domain") {
  CHECK(run({"spectrum", "--alpha", "0.999", "--max-ntheta", "1", "--max-nr", "0"}).code == 0);
  CHECK(run({"spectrum", "--alpha", "1.0"}).code == 1);
  CHECK(run({"spectrum", "--alpha", "0"}).code == 1);
  CHECK(run({"spectrum", "--mass-ev", "-5"}).code == 1);
  CHECK(run({"spectrum", "--max-ntheta", "0"}).code == 1);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"spectrum", "--format", "xml"}).code == 1);
  CHECK(run({"verify", "--suite", "nope"}).code == 1);
  CHECK(run({"spectrum", "--help"}).code == 0);
}

TEST_CASE("verify is byte-identical across runs") {
  const auto a = run({"verify", "--suite", "all", "--seed", "42"});
  const auto b = run({"verify", "--suite", "all", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = run({"verify", "--suite", "algebra", "--format", "json"});
  CHECK(c.code == 0);
  CHECK(c.out == run({"verify", "--suite", "algebra", "--format", "json"}).out);
  CHECK(c.out.find("\"overall\":true") != std::string::npos);
}

TEST_CASE("verify-dirac and verify-tachyon") {
  const auto d = run({"verify-dirac"});
  CHECK(d.code == 0);
  CHECK(d.out.find("\"case\":\"bound\"") != std::string::npos);
  const auto t = run({"verify-tachyon", "--seed", "5"});
  CHECK(t.code == 0);
  CHECK(t.out.find("\"pass\":false") == std::string::npos);
}

TEST_CASE("map") {
  const auto r = run({"map", "--space", "T", "--R0", "1", "--point", "0,0,0,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"chart\":\"T\",\"coords\":[0,0,0,1],\"R0\":1}\n");
  const auto rt = run({"map", "--space", "S", "--R0", "2", "--R1", "0.5", "--point", "0.4,-1.2,0.3,1.7", "--round-trip"});
  CHECK(rt.code == 0);
  CHECK(rt.out.find("\"back\":{\"chart\":\"L\"") != std::string::npos);
  const auto cone = run({"map", "--space", "T", "--R0", "1", "--point", "1,0,0,1"});
  CHECK(cone.code == 1);
  CHECK(cone.err.find("LightConePoint") != std::string::npos);
  CHECK(run({"map", "--space", "T", "--point", "0,0,0,1"}).code == 1);  // no R0
  CHECK(run({"map", "--space", "Q", "--point", "0,0,0,1"}).code == 1);
}

TEST_CASE("map reads a JSON record") {
  const std::string path = "cli_map_input.json";
  {
    std::ofstream f(path);
    f << R"({"chart":"T","coords":[0.5,0,0,2],"R0":1})";
  }
  const auto r = run({"map", "--input", path, "--space", "L"});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(r.out.rfind("{\"chart\":\"L\",\"coords\":[", 0) == 0);
  CHECK(run({"map", "--input", "does-not-exist.json", "--space", "L"}).code == 1);
}

TEST_CASE("qed-rho") {
  const auto r = run({"qed-rho", "--A", "0.5", "--mass", "1", "--e", "0.3", "--ntheta", "2", "--nr", "1", "--format",
                      "json"});
  CHECK(r.code == 0);
  for (const char* key : {"\"A\":", "\"mass\":", "\"e\":", "\"d_prime\":", "\"rho_plus\":", "\"rho_minus\":",
                          "\"residual_plus\":", "\"residual_minus\":"}) {
    CHECK(r.out.find(key) != std::string::npos);
  }
  CHECK(run({"qed-rho", "--e", "0"}).code == 1);
  CHECK(run({"qed-rho", "--branch", "sideways"}).code == 1);
  CHECK(run({"qed-rho", "--branch", "minus"}).code == 0);
  CHECK(lines(run({"qed-rho"}).out) == 2);
}
