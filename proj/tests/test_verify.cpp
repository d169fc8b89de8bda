#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "bqdirac/circle_spaces.hpp"
#include "bqdirac/kernels.hpp"
#include "bqdirac/random.hpp"
#include "bqdirac/verify.hpp"

using namespace bqdirac;

TEST_CASE("every suite passes") {
  for (const Suite s : {Suite::algebra, Suite::charts, Suite::dirac, Suite::tachyon, Suite::spectrum, Suite::qed}) {
    const VerificationReport r = run_suite(s, 42);
    CAPTURE(to_csv(r));
    CHECK(r.suite == to_string(s));
    CHECK_FALSE(r.cases.empty());
    CHECK(r.overall());
  }
}

TEST_CASE("suites are deterministic given the seed") {
  CHECK(to_csv(run_suite(Suite::all, 42)) == to_csv(run_suite(Suite::all, 42)));
  CHECK(to_json(run_suite(Suite::algebra, 7)) == to_json(run_suite(Suite::algebra, 7)));
  CHECK(to_csv(run_suite(Suite::algebra, 7)) != to_csv(run_suite(Suite::algebra, 8)));
}

TEST_CASE("all concatenates the named suites") {
  const auto all = run_suite(Suite::all, 3);
  std::size_t total = 0;
  for (const Suite s : {Suite::algebra, Suite::charts, Suite::dirac, Suite::tachyon, Suite::spectrum, Suite::qed}) {
    const auto one = run_suite(s, 3);
    for (const auto& c : one.cases) {
      const auto& d = all.cases[total++];
      CHECK(d.id == std::string(to_string(s)) + "." + c.id);
      CHECK(d.max_error == c.max_error);
    }
  }
  CHECK(total == all.cases.size());
}

TEST_CASE("suite names") {
  CHECK(parse_suite("qed") == Suite::qed);
  CHECK(parse_suite("all") == Suite::all);
  CHECK_THROWS_AS(parse_suite("everything"), std::invalid_argument);
}

TEST_CASE("dirac and tachyon reports") {
  for (const auto& c : dirac_cases(1)) CHECK(c.pass);
  for (const auto& t : tachyon_identities(1)) {
    CAPTURE(t.identity);
    CHECK(t.pass);
  }
  const std::string j = to_json(tachyon_identities(1));
  CHECK(j.rfind("[{\"identity\":\"rotor_vs_componentwise\",\"max_error\":", 0) == 0);
  CHECK(to_json(dirac_cases(1)).rfind("[{\"case\":\"free\",\"residual_fd\":", 0) == 0);
}

TEST_CASE("round-trip kernel equals its serial twin") {
  Rng rng(61);
  std::vector<Point4> pts(3000);
  for (auto& p : pts) {
    const double x3 = rng.uniform(0.5, 2.0);
    p = {0.8 * x3 * rng.uniform(-1, 1), rng.uniform(-2, 2), rng.uniform(-2, 2), x3};
  }
  const auto L = SpaceChart::minkowski();
  const auto S = SpaceChart::create(ChartKind::S, 0.8, 1.2);
  const double par = round_trip_error(pts, L, S);
  CHECK(par == round_trip_error_serial(pts, L, S));
  CHECK(par <= 1e-12);
}
