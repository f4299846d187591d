#include <doctest.h>

#include <cmath>
#include <random>

#include "eqrisk/analysis.hpp"
#include "eqrisk/error.hpp"
#include "eqrisk/pricing.hpp"
#include "support.hpp"

using namespace eqrisk;
namespace t = eqrisk::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an eqrisk::Error");
  return ErrorCode::IoError;
}

// Central differences by re-solving; independent of the analytic formulas.
Sensitivities finite_differences(const ProblemInstance& inst) {
  Sensitivities fd;
  const double hb = 1e-4 * inst.budget();
  const auto up = solve_equal_risk(inst.with_budget(inst.budget() + hb));
  const auto dn = solve_equal_risk(inst.with_budget(inst.budget() - hb));
  fd.dr_dB = (up.risk_level - dn.risk_level) / (2 * hb);
  for (std::size_t i = 0; i < inst.size(); ++i)
    fd.du_dB.push_back((up.allocation.units[i] - dn.allocation.units[i]) / (2 * hb));
  for (std::size_t j = 0; j < inst.size(); ++j) {
    const double tj = inst.project(j).delay;
    const double ht = 1e-4 * std::max(tj, 1e-2);
    const auto a = solve_equal_risk(inst.with_delay(j, tj + ht));
    const auto b = solve_equal_risk(inst.with_delay(j, tj - ht));
    fd.dr_dT.push_back((a.risk_level - b.risk_level) / (2 * ht));
  }
  return fd;
}

bool close(double analytic, double fd, double tol = 1e-4) {
  if (analytic == 0.0) return std::abs(fd) <= 1e-12;
  return t::rel_err(fd, analytic) <= tol;
}

}  // namespace

TEST_CASE("risk profile examples") {
  const auto inst = t::sample_instance();
  const auto costs = effective_costs(inst);

  SUBCASE("rounded sample allocation is nearly equal-risk") {
    const auto prof = risk_profile(inst, costs, {{15.3, 65.8, 66.4}});
    for (double r : prof.risks) CHECK(std::abs(r - 8.3) <= 0.02);
  }
  SUBCASE("full funding means zero risk") {
    const auto prof = risk_profile(inst, costs, {{100.0, 300.0, 250.0}});
    for (double r : prof.risks) CHECK(r == 0.0);
    CHECK(max_risk(inst, costs, {{100.0, 300.0, 250.0}}) == 0.0);
  }
  SUBCASE("hand-checked single project") {
    const auto one = validate_instance({{{"x", 10.0, 1.0, 1.0, 1.0}}, 5.0});
    const auto prof = risk_profile(one, effective_costs(one), {{5.0}});
    CHECK(prof.initial_costs[0] == 5.0);
    CHECK(prof.completion_costs[0] == 10.0);
    CHECK(prof.risks[0] == 2.0);
  }
  SUBCASE("errors") {
    CHECK(code_of([&] { risk_profile(inst, costs, {{0.0, 1.0, 1.0}}); }) ==
          ErrorCode::ZeroAllocation);
    CHECK(code_of([&] { risk_profile(inst, costs, {{-1.0, 1.0, 1.0}}); }) ==
          ErrorCode::ZeroAllocation);
    CHECK(code_of([&] { risk_profile(inst, costs, {{1.0, 301.0, 1.0}}); }) ==
          ErrorCode::AllocationOutOfRange);
    CHECK(code_of([&] { risk_profile(inst, costs, {{NAN, 1.0, 1.0}}); }) ==
          ErrorCode::AllocationOutOfRange);
    CHECK(code_of([&] { risk_profile(inst, costs, {{1.0, 1.0}}); }) == ErrorCode::SizeMismatch);
    CHECK(code_of([&] { max_risk(inst, costs, {{0.0, 1.0, 1.0}}); }) ==
          ErrorCode::ZeroAllocation);
  }
}

TEST_CASE("max risk") {
  const auto inst = t::sample_instance();
  const auto costs = effective_costs(inst);
  const auto sol = solve_equal_risk(inst);
  CHECK(std::abs(max_risk(inst, costs, sol.allocation) - sol.risk_level) <=
        1e-8 * sol.risk_level);

  Allocation perturbed{{20.0, 60.0, 66.4}};
  const double s = 2 * 20.0 + 3 * 60.0 + 66.4;
  for (auto& u : perturbed.units) u *= 295.0 / s;
  const double worst = max_risk(inst, costs, perturbed);
  CHECK(worst == doctest::Approx(t::kSamplePerturbedMaxRisk).epsilon(1e-12));
  CHECK(worst > t::kSampleRoot);
}

TEST_CASE("sensitivities on the sample instance") {
  const auto inst = t::sample_instance();
  const auto sol = solve_equal_risk(inst);
  const auto s = sensitivities(inst, sol);
  CHECK(s.dr_dB == doctest::Approx(1.0 / t::kSampleSlopeAtRoot).epsilon(1e-10));
  CHECK(s.dr_dB < 0.0);
  for (double d : s.du_dB) CHECK(d > 0.0);
  for (double d : s.dr_dT) CHECK(d > 0.0);

  const auto fd = finite_differences(inst);
  CHECK(close(s.dr_dB, fd.dr_dB));
  for (std::size_t i = 0; i < inst.size(); ++i) {
    CHECK(close(s.du_dB[i], fd.du_dB[i]));
    CHECK(close(s.dr_dT[i], fd.dr_dT[i]));
  }
}

TEST_CASE("zero inflation makes delay free") {
  auto data = t::sample_data();
  data.projects[1].inflation_rate = 0.0;
  const auto inst = validate_instance(data);
  const auto s = sensitivities(inst, solve_equal_risk(inst));
  CHECK(s.dr_dT[1] == 0.0);
  CHECK(s.dr_dT[0] > 0.0);
}

TEST_CASE("fully funded solutions have no sensitivities") {
  const auto inst = t::sample_instance().with_budget(5000.0);
  CHECK(code_of([&] { sensitivities(inst, solve_equal_risk(inst)); }) ==
        ErrorCode::FullyFundedNoSensitivity);
}

TEST_CASE("sensitivities match finite differences on random instances") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = t::random_underfunded(rng, 1 + trial % 6);
    const auto s = sensitivities(inst, solve_equal_risk(inst));
    const auto fd = finite_differences(inst);
    CHECK(close(s.dr_dB, fd.dr_dB));
    for (std::size_t i = 0; i < inst.size(); ++i) {
      CHECK(close(s.du_dB[i], fd.du_dB[i]));
      CHECK(close(s.dr_dT[i], fd.dr_dT[i]));
    }
  }
}

TEST_CASE("delay sweep") {
  const auto inst = t::sample_instance();

  SUBCASE("t = 10 reproduces the sample solve") {
    const std::vector<double> ts{10.0};
    const auto rows = sweep_delay(inst, ts);
    REQUIRE(rows.size() == 1);
    const auto direct = solve_equal_risk(inst);
    CHECK(rows[0].risk_level == direct.risk_level);
    CHECK(rows[0].allocation == direct.allocation);
    CHECK(rows[0].spend == direct.spend);
    CHECK(rows[0].residual == direct.residual);
  }
  SUBCASE("t = 0 has the closed form sum(cV)/B - 1") {
    const std::vector<double> ts{0.0};
    const auto rows = sweep_delay(inst, ts);
    CHECK(std::abs(rows[0].risk_level - t::kSampleRootAtZeroDelay) <= 1e-9);
  }
  SUBCASE("risk grows with delay") {
    std::vector<double> ts;
    for (int i = 0; i <= 40; ++i) ts.push_back(0.5 * i);
    const auto rows = sweep_delay(inst, ts);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].t == ts[i]);
    for (std::size_t i = 1; i < rows.size(); ++i)
      CHECK(rows[i].risk_level >= rows[i - 1].risk_level);
  }
  SUBCASE("errors") {
    const std::vector<double> empty;
    CHECK(code_of([&] { sweep_delay(inst, empty); }) == ErrorCode::EmptySweep);
    const std::vector<double> neg{1.0, -2.0, 3.0};
    CHECK(code_of([&] { sweep_delay(inst, neg); }) == ErrorCode::NegativeTime);
    CHECK(code_of([&] { sweep_delay_serial(inst, neg); }) == ErrorCode::NegativeTime);
  }
}

TEST_CASE("sweep monotone and consistent on random instances with k > 0") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = t::random_underfunded(rng, 1 + trial % 5);
    std::vector<double> ts;
    for (int i = 0; i < 12; ++i) ts.push_back(0.75 * i);
    const auto rows = sweep_delay(inst, ts);
    for (std::size_t i = 1; i < rows.size(); ++i)
      CHECK(rows[i].risk_level >= rows[i - 1].risk_level);
    const auto direct = solve_equal_risk(inst.with_uniform_delay(ts[5]));
    CHECK(rows[5].risk_level == direct.risk_level);
    CHECK(rows[5].allocation == direct.allocation);
  }
}

TEST_CASE("solver agrees with a dense grid over r") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = t::random_underfunded(rng, 1 + trial % 3);
    const auto sol = solve_equal_risk(inst);
    CHECK(std::abs(sol.risk_level - t::oracle_grid_root(inst, 1e-5)) <= 1e-4);
  }
}

TEST_CASE("equal risk beats every grid allocation on max risk") {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = t::random_underfunded(rng, 1 + trial % 3);
    const auto sol = solve_equal_risk(inst);
    const double grid_best = t::oracle_grid_minimax(inst, 150);
    CHECK(sol.risk_level <= grid_best * (1 + 1e-9));
  }
}
