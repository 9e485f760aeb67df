#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "symdisc/gauge.hpp"
#include "symdisc/probe.hpp"

using namespace symdisc;
using namespace std::complex_literals;

TEST_SUITE("midpoint probe") {
  TEST_CASE("zero trials") {
    const auto member = slice_membership(3);
    const auto report = midpoint_probe(member, gauge_shell_sampler(member, Weights({2, 3}), 1.5, 1e-3), 0, 1);
    CHECK_FALSE(report.found.has_value());
    CHECK(report.trials_run == 0);
  }

  TEST_CASE("shell sampler stays inside the thin shell") {
    const auto member = slice_membership(3);
    const Weights w({2, 3});
    const auto sampler = gauge_shell_sampler(member, w, 1.5, 1e-3);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
      const auto z = sampler(rng);
      CHECK(member(z) == Verdict::AllInside);
      const double h = gauge_h(member, w, z);
      CHECK(h < 1.0);
      CHECK(h > 1.0 - 1.1e-3);
    }
    CHECK_THROWS_AS(gauge_shell_sampler(member, w, 1.5, 0.0), std::invalid_argument);
  }

  TEST_CASE("cubic slice is not convex") {
    const auto member = slice_membership(3);
    const auto report = midpoint_probe(member, gauge_shell_sampler(member, Weights({2, 3}), 1.5, 1e-3), 100000, 11);
    REQUIRE(report.found.has_value());
    const auto& v = *report.found;
    CHECK(member(v.a) == Verdict::AllInside);
    CHECK(member(v.b) == Verdict::AllInside);
    CHECK(member(v.midpoint) == Verdict::NotAllInside);
    CHECK(r_value(v.midpoint[0], v.midpoint[1]) > 0.0);
    CHECK(report.trials_run == v.trial + 1);
  }

  TEST_CASE("convex domain yields nothing") {
    const auto member = sublevel_membership(example_g_function);
    const auto report =
        midpoint_probe(member, gauge_shell_sampler(member, Weights({1, 2}), 1.5, 1e-3), 20000, 13);
    CHECK_FALSE(report.found.has_value());
    CHECK(report.trials_run == 20000);
  }

  TEST_CASE("sampler producing outside points is rejected") {
    const auto member = sublevel_membership(example_g_function);
    const PointSampler bad = [](std::mt19937_64&) { return std::vector<Complex>{2.0, 0.0}; };
    CHECK_THROWS_AS(midpoint_probe(member, bad, 1, 0), std::logic_error);
  }
}

TEST_SUITE("balanced example") {
  TEST_CASE("defining functions") {
    const std::vector<Complex> z{0.5i, 0.3};
    CHECK(example_g_function(z) == doctest::Approx(0.55));
    CHECK(example_d_function(z) == doctest::Approx(0.25 + 0.05));
    const auto w = example_map(z);
    CHECK(std::abs(w[1] - 0.55) < 1e-15);
    CHECK(example_d_function(w) == doctest::Approx(example_g_function(z)));
  }

  TEST_CASE("D is (1,2)-balanced") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 2000; ++i) {
      const std::vector<Complex> z{oracle::in_disc(rng, 1.5), oracle::in_disc(rng, 1.5)};
      const Complex lambda = oracle::in_disc(rng, 1.0);
      const auto scaled = pi_action(Weights({1, 2}), lambda, z);
      CHECK(example_d_function(scaled) <= example_d_function(z) + 1e-12);
    }
  }

  TEST_CASE("map equivalence and balance") {
    const auto report = balanced_example_check(20000, 2000, 67);
    CHECK(report.samples == 20000);
    CHECK(report.map_disagreements == 0);
    CHECK(report.map_agreements + report.map_undecided == report.samples);
    CHECK(report.map_undecided < 10);
    CHECK(report.balance_checks > 0);
    CHECK(report.d_balance_failures == 0);
    CHECK(report.g_balance_failures == 0);
    CHECK_FALSE(report.probe_g.found.has_value());
    CHECK(report.probe_g.trials_run == 2000);
  }
}
