#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "symdisc/roots.hpp"

using namespace symdisc;
using namespace std::complex_literals;

TEST_SUITE("roots") {
  TEST_CASE("quadratic") {
    const auto r = find_roots(Poly({1.0, 0.0, -1.0}));
    CHECK(oracle::multiset_distance(r, {1.0, -1.0}) < 1e-10);
  }

  TEST_CASE("cubic with known roots") {
    const auto r = find_roots(Poly({1.0, -0.5i, -0.25, 0.125i}));
    CHECK(oracle::multiset_distance(r, {0.5, 0.5i, -0.5}) < 1e-8);
  }

  TEST_CASE("roots of polynomials built from random roots") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 8);
      std::vector<Complex> want(static_cast<std::size_t>(n));
      for (auto& z : want) z = oracle::in_disc(rng, 2.0);
      const Poly p(oracle::expand_from_roots(want));
      const auto got = find_roots(p, {}, trial);
      CHECK(oracle::multiset_distance(got, want) < 1e-7);
      for (const auto& z : got) {
        CHECK(scaled_residual(p, z) < 1e-8);
        CHECK(std::abs(z) <= cauchy_bound(p));
      }
    }
  }

  TEST_CASE("cauchy bound dominates every root of random polynomials") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 8);
      std::vector<Complex> c(static_cast<std::size_t>(n + 1));
      for (auto& a : c) a = oracle::in_square(rng, 2.0);
      const Poly p = normalize(Poly(c));
      const double bound = cauchy_bound(p);
      for (const auto& z : find_roots(p)) CHECK(std::abs(z) <= bound * (1.0 + 1e-12));
    }
  }

  TEST_CASE("max root modulus") {
    CHECK(max_root_modulus(Poly({1.0, 0.0, 0.0, 0.0})) < 1e-10);
    // Triple root: accuracy is limited to about eps^(1/3).
    CHECK(std::abs(max_root_modulus(Poly(oracle::expand_from_roots({0.5, 0.5, 0.5}))) - 0.5) < 1e-4);
    // Exterior midpoint of the n = 3 witness.
    CHECK(max_root_modulus(Poly({1.0, 0.0, 0.649519053i, 0.25 + 0.25i})) > 1.0 + 1e-4);
  }

  TEST_CASE("seed changes the start but not the answer") {
    const Poly p(oracle::expand_from_roots({0.3 + 0.1i, -0.7, 0.2i, 0.9 - 0.3i}));
    const auto a = find_roots(p, {}, 1);
    const auto b = find_roots(p, {}, 2);
    CHECK(oracle::multiset_distance(a, b) < 1e-10);
    CHECK(find_roots(p, {}, 7) == find_roots(p, {}, 7));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(find_roots(Poly({1.0})), std::domain_error);
    CHECK_THROWS_AS(find_roots(Poly({0.0, 1.0, 1.0})), std::domain_error);

    Tolerances starved;
    starved.root_iter_max = 1;
    try {
      find_roots(Poly(oracle::expand_from_roots({0.1, 0.2, 0.3, 0.4, 0.5})), starved);
      FAIL("expected RootFindingError");
    } catch (const RootFindingError& e) {
      CHECK(e.best_iterate().size() == 5);
      CHECK(e.residuals().size() == 5);
    }
  }

  TEST_CASE("root oracle verdict") {
    CHECK(root_oracle_location(Poly({1.0, -0.5})).verdict == Verdict::AllInside);
    CHECK(root_oracle_location(Poly({1.0, -2.0})).verdict == Verdict::NotAllInside);
    CHECK(root_oracle_location(Poly({1.0, -1.0})).verdict == Verdict::Indeterminate);
    CHECK(root_oracle_location(Poly({0.0, 3.0})).verdict == Verdict::AllInside);
  }
}
