#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "radunc/format.hpp"
#include "radunc/sho.hpp"
#include "radunc/verify.hpp"
#include "support.hpp"

using namespace radunc;
using namespace radunc::verify;
using testsupport::rel_err;

namespace {

std::vector<QuantumState> sample_states() {
  return {{System::Hydrogen, 1, 0}, {System::Hydrogen, 3, 1}, {System::Hydrogen, 4, 3, 2},
          {System::Isw, 1, 0},      {System::Isw, 3, 2},      {System::Isw, 2, 4},
          {System::Sho, 0, 0},      {System::Sho, 5, 3},      {System::Sho, 6, 0}};
}

}  // namespace

TEST_CASE("describe") {
  CHECK(describe({System::Hydrogen, 2, 1, 3}) == "hydrogen(n=2,l=1,Z=3)");
  CHECK(describe({System::Sho, 4, 2}) == "sho(n=4,l=2)");
}

TEST_CASE("oracle reproduces known values") {
  const auto h = oracle_observables({System::Hydrogen, 2, 1});
  CHECK(rel_err(h.mean_r, 5.0) < 1e-10);
  CHECK(rel_err(h.mean_r2, 30.0) < 1e-10);
  CHECK(rel_err(h.mean_inv_r, 0.25) < 1e-10);
  CHECK(rel_err(h.mean_inv_r2, 1.0 / 12.0) < 1e-10);
  CHECK(std::abs(h.mean_pr) < 1e-10);
  CHECK(rel_err(h.mean_pr2, 1.0 / 12.0) < 1e-10);
  const auto s = oracle_observables({System::Sho, 2, 0});
  CHECK(rel_err(s.mean_r2, 3.5) < 1e-10);
  const auto w = oracle_observables({System::Isw, 1, 0});
  CHECK(rel_err(w.mean_pr2, std::pow(std::acos(-1.0), 2)) < 1e-10);
}

TEST_CASE("Z scaling of the oracle") {
  // Natural units absorb Z, so the oracle sees the same numbers.
  const auto a = oracle_observables({System::Hydrogen, 3, 2, 1});
  const auto b = oracle_observables({System::Hydrogen, 3, 2, 4});
  for (std::size_t i = 0; i < kObservableFields.size(); ++i) {
    if (kObservableFields[i] == "mean_pr") continue;
    CHECK(rel_err(field(b, i), field(a, i)) < 1e-10);
  }
}

TEST_CASE("closed form and oracle agree on samples") {
  for (const auto& s : sample_states()) {
    const auto c = closed_form_observables(s);
    const auto o = oracle_observables(s);
    for (std::size_t i = 0; i < kObservableFields.size(); ++i) {
      CAPTURE(describe(s));
      CAPTURE(kObservableFields[i]);
      if (kObservableFields[i] == "mean_pr") {
        CHECK(std::abs(field(o, i)) < 1e-9);
      } else {
        CHECK(rel_err(field(o, i), field(c, i)) < 1e-8);
      }
    }
  }
}

TEST_CASE("Laplacian form agrees with the symmetric form") {
  for (const auto& s : sample_states()) {
    CAPTURE(describe(s));
    CHECK(rel_err(oracle_mean_pr2_laplacian_form(s), oracle_observables(s).mean_pr2) < 1e-7);
  }
}

TEST_CASE("five-point derivative") {
  auto f = [](double x) { return std::sin(x); };
  CHECK(std::abs(five_point_derivative(f, 1.0, 1.0, -10.0, 10.0) - std::cos(1.0)) < 1e-11);
  // Edge stencils.
  CHECK(std::abs(five_point_derivative(f, 0.0, 1.0, 0.0, 10.0) - 1.0) < 1e-9);
  CHECK(std::abs(five_point_derivative(f, 1.0, 1.0, 0.0, 1.0) - std::cos(1.0)) < 1e-9);
}

TEST_CASE("commutator identity at random radii") {
  testsupport::Rng rng(2024);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int n = rng.integer(1, 6);
    const int l = rng.integer(0, n - 1);
    const int Z = rng.integer(1, 4);
    const QuantumState h{System::Hydrogen, n, l, Z};
    const QuantumState w{System::Isw, rng.integer(1, 5), rng.integer(0, 4)};
    const int sn = rng.integer(0, 6);
    const auto ells = sho::allowed_ell(sn);
    const QuantumState o{System::Sho, sn, ells[rng.integer(0, static_cast<int>(ells.size()) - 1)]};
    const double rh = rng.uniform(0.05, 2.0 * n * n) / Z;
    const double rw = rng.uniform(0.02, 0.98);
    const double ro = rng.uniform(0.05, 4.0);
    for (const auto& [s, r] : {std::pair{h, rh}, std::pair{w, rw}, std::pair{o, ro}}) {
      const auto c = commutator_check(s, {r});
      CHECK(c.samples_used + c.samples_rejected == 1);
      worst = std::max(worst, c.max_deviation);
    }
  }
  CHECK(worst < 1e-6);
  CHECK_THROWS_AS(commutator_check({System::Isw, 1, 0}, {1.5}), std::domain_error);
  CHECK_THROWS_AS(commutator_check({System::Isw, 1, 0}, {0.0}), std::domain_error);
}

TEST_CASE("argmax") {
  auto f = [](double x) { return -(x - 0.3) * (x - 0.3); };
  auto df = [](double x) { return -2.0 * (x - 0.3); };
  CHECK(std::abs(argmax(f, df, 0.0, 1.0) - 0.3) < 1e-10);
  CHECK(std::abs(most_probable_radius({System::Hydrogen, 1, 0}) - 1.0) < 1e-8);
  CHECK(std::abs(most_probable_radius({System::Hydrogen, 1, 0, 2}) - 0.5) < 1e-8);
  // Circular orbits peak at n^2.
  for (int n = 2; n <= 5; ++n) {
    CHECK(std::abs(most_probable_radius({System::Hydrogen, n, n - 1}) - n * n) < 1e-6);
  }
}

TEST_CASE("state scan") {
  auto cfg = default_config();
  const auto states = scan_states(cfg);
  CHECK(states.size() == 21 + 25 + 16);
  SuiteConfig empty;
  CHECK(scan_states(empty).empty());
  CHECK(run_suite(empty).empty());
  cfg.systems = {System::Hydrogen};
  cfg.hydrogen_max_n = 2;
  CHECK(scan_states(cfg).size() == 3);
  cfg.hydrogen_Z = {1, 4};
  CHECK(scan_states(cfg).size() == 6);
}

TEST_CASE("default suite passes and is deterministic") {
  auto cfg = default_config();
  const auto a = run_suite(cfg);
  const auto sum = summarize(a);
  CHECK(sum.states == 62);
  CHECK(sum.checks == 620);
  CHECK(sum.failures == 0);
  cfg.parallel = false;
  const auto b = run_suite(cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].state == b[i].state);
    CHECK(a[i].field == b[i].field);
    CHECK(a[i].oracle == b[i].oracle);
  }
  CHECK(reports_to_csv(a) == reports_to_csv(b));
}

TEST_CASE("zero tolerance fails every check") {
  auto cfg = default_config();
  cfg.systems = {System::Hydrogen, System::Sho};
  cfg.hydrogen_max_n = 3;
  cfg.sho_max_n = 2;
  cfg.tol = 0.0;
  const auto r = run_suite(cfg);
  const auto sum = summarize(r);
  CHECK(sum.checks > 0);
  CHECK(sum.failures == sum.checks);
}

TEST_CASE("heisenberg floor over the scan") {
  for (const auto& s : scan_states(default_config())) {
    CAPTURE(describe(s));
    CHECK(oracle_observables(s).product >= 0.5 - 1e-10);
  }
}

TEST_CASE("report serialization") {
  auto cfg = default_config();
  cfg.systems = {System::Sho};
  cfg.sho_max_n = 1;
  const auto r = run_suite(cfg);
  const auto csv = format::parse_csv(reports_to_csv(r));
  REQUIRE(csv.size() == r.size() + 1);
  CHECK(csv[0][0] == "system");
  const auto j = nlohmann::json::parse(reports_to_json(r));
  CHECK(j["states"] == 2);
  CHECK(j["failures"] == 0);
  REQUIRE(j["reports"].is_array());
  CHECK(j["reports"].size() == r.size());
  CHECK(j["reports"][0].contains("rel_diff"));
}
