#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "symdisc/root_location.hpp"
#include "symdisc/roots.hpp"

using namespace symdisc;
using namespace std::complex_literals;

namespace {

void check_coeffs(const Poly& p, std::initializer_list<Complex> want, double tol = 1e-15) {
  REQUIRE(p.coeffs().size() == want.size());
  std::size_t i = 0;
  for (const auto& w : want) {
    CHECK(std::abs(p[i] - w) <= tol);
    ++i;
  }
}

Poly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Complex> c(static_cast<std::size_t>(degree + 1));
  for (auto& a : c) a = oracle::in_square(rng, 2.0);
  return normalize(Poly(std::move(c)));
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("poly rejects empty and non-finite coefficients") {
    CHECK_THROWS_AS(Poly(std::vector<Complex>{}), std::invalid_argument);
    CHECK_THROWS_AS(Poly({1.0, Complex(std::nan(""), 0.0)}), std::invalid_argument);
    CHECK_THROWS_AS(Poly({Complex(INFINITY, 0.0)}), std::invalid_argument);
  }

  TEST_CASE("normalize trims and rescales") {
    check_coeffs(normalize(Poly({0.0, 0.0, 2.0, -4.0})), {0.5, -1.0});
    check_coeffs(normalize(Poly({1.0, 0.0, 0.0})), {1.0, 0.0, 0.0});
    check_coeffs(normalize(Poly({3.0i, 3.0})), {1.0i, 1.0});
    CHECK(normalize(Poly({0.0, 0.0, 2.0, -4.0})).is_normalized());
  }

  TEST_CASE("normalize of the zero polynomial") {
    CHECK_THROWS_WITH_AS(normalize(Poly({0.0, 0.0})), "zero polynomial", std::domain_error);
    CHECK_THROWS_WITH_AS(cohn_all_roots_in_disc(Poly({0.0})), "zero polynomial", std::domain_error);
  }

  TEST_CASE("eval") {
    CHECK(eval(Poly({1.0, 0.0, 0.75, 0.5}), 1.0) == Complex(2.25));
    CHECK(eval(Poly({1.0, -2.0}), 2.0) == Complex(0.0));
    CHECK(eval(Poly({1.0i}), 5.0) == 1.0i);
  }

  TEST_CASE("reversed conjugate") {
    const Complex p = 0.3 - 0.7i;
    const Complex q = -0.2 + 0.4i;
    check_coeffs(reversed_conjugate(Poly({1.0, 0.0, p, q})), {std::conj(q), std::conj(p), 0.0, 1.0});
    check_coeffs(reversed_conjugate(Poly({1.0, -2.0})), {-2.0, 1.0});
    check_coeffs(reversed_conjugate(Poly({1.0, 2.0, 1.0})), {1.0, 2.0, 1.0});
    // Not trimmed.
    CHECK(reversed_conjugate(Poly({1.0, 0.0, 0.0})).degree() == 2);
  }

  TEST_CASE("schur transform of the cubic slice") {
    check_coeffs(schur_transform(Poly({1.0, 0.0, 0.75, 0.5})), {0.75, -0.375, 0.75});

    // Twice: ((1-|q|^2)^2 - |p|^2) zeta - conj(p) q (1-|q|^2) + p^2 conj(q).
    const Complex p = 0.41 + 0.13i;
    const Complex q = -0.27 + 0.52i;
    const double w = 1.0 - std::norm(q);
    const Poly twice = schur_transform(schur_transform(Poly({1.0, 0.0, p, q})));
    check_coeffs(twice, {w * w - std::norm(p), -std::conj(p) * q * w + p * p * std::conj(q)}, 1e-15);

    check_coeffs(schur_transform(Poly({1.0, 0.0, 0.0})), {1.0, 0.0});
    CHECK_THROWS_WITH_AS(schur_transform(Poly({2.0})), "cannot transform constant", std::domain_error);
  }

  TEST_CASE("schur transform degree law") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
      const int degree = 1 + static_cast<int>(rng() % 10);
      const Poly p = random_poly(rng, degree);
      const Poly t = schur_transform(p);
      REQUIRE(t.coeffs().size() == static_cast<std::size_t>(degree));
      CHECK(std::abs(t.leading().real() - (std::norm(p.leading()) - std::norm(p.constant()))) <= 1e-12);
      CHECK(std::abs(t.leading().imag()) <= 1e-12);
    }
  }

  TEST_CASE("cauchy bound") {
    CHECK(cauchy_bound(Poly({1.0, 0.0, 0.0, 0.0})) == 1.0);
    CHECK(cauchy_bound(Poly({1.0, -2.0})) == 3.0);
    CHECK_THROWS_AS(cauchy_bound(Poly({0.0, 1.0})), std::domain_error);
  }
}

TEST_SUITE("cohn") {
  TEST_CASE("small cases") {
    CHECK(cohn_all_roots_in_disc(Poly({1.0, 0.0, 0.0, 0.0})).verdict == Verdict::AllInside);
    CHECK(cohn_all_roots_in_disc(Poly({5.0})).verdict == Verdict::AllInside);

    const auto outside = cohn_all_roots_in_disc(Poly({1.0, -2.0}));
    CHECK(outside.verdict == Verdict::NotAllInside);
    CHECK(outside.failing_stage == 0);

    CHECK(cohn_all_roots_in_disc(Poly({1.0, -0.5})).verdict == Verdict::AllInside);
    CHECK(cohn_all_roots_in_disc(Poly({1.0, -1.0})).verdict == Verdict::Indeterminate);
  }

  TEST_CASE("cubic witness points") {
    // Exterior midpoint of the n = 3 witness.
    const auto mid = cohn_all_roots_in_disc(Poly({1.0, 0.0, 0.649519053i, 0.25 + 0.25i}));
    CHECK(mid.verdict == Verdict::NotAllInside);
    REQUIRE(mid.failing_stage.has_value());
    CHECK(*mid.failing_stage == 2);

    // Boundary endpoint: a root sits on the unit circle.
    const Complex p1 = std::polar(0.75, 2.0 * M_PI / 3.0);
    CHECK(cohn_all_roots_in_disc(Poly({1.0, 0.0, p1, 0.5})).verdict == Verdict::Indeterminate);
  }

  TEST_CASE("failing stage tracks recursion depth") {
    // zeta^2 + 0.1 zeta + 0.9 passes stage 0; roots have modulus sqrt(0.9) < 1.
    CHECK(cohn_all_roots_in_disc(Poly({1.0, 0.1, 0.9})).verdict == Verdict::AllInside);
    // (zeta - 2)(zeta - 0.1): |a0| = 1 > |a2| = 0.2, fails one level down.
    const auto loc = cohn_all_roots_in_disc(Poly({1.0, -2.1, 0.2}));
    CHECK(loc.verdict == Verdict::NotAllInside);
    CHECK(loc.failing_stage == 1);
  }

  TEST_CASE("trailing zeros deflate exactly") {
    // zeta^3 (zeta - 0.5)(zeta + 0.9)
    const auto c = oracle::expand_from_roots({0.0, 0.0, 0.0, 0.5, -0.9});
    CHECK(cohn_all_roots_in_disc(Poly(c)).verdict == Verdict::AllInside);
    const auto d = oracle::expand_from_roots({0.0, 0.0, 1.5});
    CHECK(cohn_all_roots_in_disc(Poly(d)).verdict == Verdict::NotAllInside);
  }

  TEST_CASE("root-set invariance and conjugation symmetry") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
      const int degree = 1 + static_cast<int>(rng() % 8);
      std::vector<Complex> c(static_cast<std::size_t>(degree + 1));
      for (auto& a : c) a = oracle::in_square(rng, 2.0);
      const double scale = std::exp(oracle::uniform(rng, -20.0, 20.0));
      std::vector<Complex> scaled(c);
      for (auto& a : scaled) a *= scale;
      scaled.insert(scaled.begin(), {0.0, 0.0});

      const Poly p(c);
      const Poly n = normalize(Poly(scaled));
      CHECK(cohn_all_roots_in_disc(p).verdict == cohn_all_roots_in_disc(n).verdict);
      CHECK(oracle::multiset_distance(find_roots(p), find_roots(n)) < 1e-8);

      std::vector<Complex> conj(c);
      for (auto& a : conj) a = std::conj(a);
      CHECK(cohn_all_roots_in_disc(p).verdict == cohn_all_roots_in_disc(Poly(conj)).verdict);
      auto roots = find_roots(p);
      for (auto& r : roots) r = std::conj(r);
      CHECK(oracle::multiset_distance(find_roots(Poly(conj)), roots) < 1e-8);
    }
  }

  TEST_CASE("oracle equivalence on random polynomials") {
    std::mt19937_64 rng(2024);
    int compared = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      const Poly p = random_poly(rng, 1 + static_cast<int>(rng() % 8));
      const double m = max_root_modulus(p);
      if (std::abs(m - 1.0) <= 1e-6) continue;
      ++compared;
      CHECK(cohn_all_roots_in_disc(p).verdict == (m < 1.0 ? Verdict::AllInside : Verdict::NotAllInside));
    }
    CHECK(compared > 1900);
  }

  TEST_CASE("tolerances validation") {
    Tolerances t;
    CHECK_NOTHROW(t.validate());
    t.boundary_band = 0.0;
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
    CHECK(verdict_from_string("NotAllInside") == Verdict::NotAllInside);
    CHECK_THROWS_AS(verdict_from_string("Outside"), std::invalid_argument);
  }
}
