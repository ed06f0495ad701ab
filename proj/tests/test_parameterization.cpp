#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>
#include <zetalab/parameterization.hpp>

using namespace zetalab;
using namespace zetalab::param;

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) / 9007199254740992.0;
  return lo + (hi - lo) * u;
}

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("B1: point values and guards") {
  // Symmetric ratio gives arctan(1).
  CHECK(compute_B1(2.0, {1, 1, 1, 1}) ==
        doctest::Approx(kPi / 4.0 / std::log(2.0)).epsilon(1e-14));
  // Real progression has zero angle.
  CHECK(compute_B1(2.0, {1, 0, 1, 0}) == 0.0);
  // Purely imaginary progression: zero real component.
  CHECK_THROWS_AS(compute_B1(2.0, {0, 1, 0, 1}), DomainGuard);
  CHECK_THROWS_AS(compute_B1(1.0, {1, 0, 1, 0}), InvalidInput);
  CHECK_THROWS_AS(compute_B1(-2.0, {1, 0, 1, 0}), InvalidInput);
}

TEST_CASE("A1/A2: point values and guards") {
  CHECK(compute_A1(2.0, {1, 0, 1, 0}, 0.0) == doctest::Approx(1.0));
  CHECK(compute_A1(2.0, {2, 0, 2, 0}, 0.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(compute_A1(2.0, {-1, 0, -1, 0}, 0.0), DomainGuard);
  CHECK_THROWS_AS(compute_A2(2.0, {1, 0, 1, 0}, 0.0), DomainGuard);  // sin = 0

  // Symmetric case: sin = cos so A2 = A1 = 1.5 at x = 2.
  const ComplexPair sym{1, 1, 1, 1};
  const double b1 = compute_B1(2.0, sym);
  CHECK(compute_A1(2.0, sym, b1) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(compute_A2(2.0, sym, b1) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("exponent parts: A1 and A2 coincide wherever both are defined") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    ComplexPair p{uniform(rng, 0.1, 2.0), uniform(rng, 0.1, 2.0),
                  uniform(rng, 0.1, 2.0), uniform(rng, 0.1, 2.0)};
    const double x = uniform(rng, 1.5, 9.0);
    const auto parts = exponent_parts(x, p);
    REQUIRE(parts.A1.has_value());
    REQUIRE(parts.A2.has_value());
    CHECK(std::abs(*parts.A1 - *parts.A2) <=
          1e-12 * std::max(1.0, std::abs(*parts.A1)));
    CHECK_FALSE(parts.quadrant_mismatch);
  }
  // A negative real component leaves the principal arctan quadrant: the
  // mismatch is flagged and the log quotients go undefined.
  const auto flipped = exponent_parts(2.0, {-1.0, 1.0, -1.0, 1.0});
  CHECK(flipped.quadrant_mismatch);
  CHECK_FALSE(flipped.A1.has_value());
  CHECK_FALSE(flipped.A2.has_value());
}

TEST_CASE("reconstruction: point values") {
  const cplx z = reconstruct_xs(3.0, {1, 1, 1, 1});
  CHECK(z.real() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(z.imag() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(reconstruct_xs(5.0, {1, 0, 1, 0}).real() == doctest::Approx(5.0));
  const cplx w = reconstruct_xs(2.0, {2, -1, 1, 2});
  CHECK(w.real() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(w.imag() == doctest::Approx(1.0).epsilon(1e-14));

  const cplx inv = reconstruct_x_negs(3.0, {1, 1, 1, 1});
  CHECK(inv.real() == doctest::Approx(3.0 / 18.0).epsilon(1e-14));
  CHECK(inv.imag() == doctest::Approx(-3.0 / 18.0).epsilon(1e-14));
  CHECK(reconstruct_x_negs(4.0, {1, 0, 1, 0}).real() ==
        doctest::Approx(0.25));
}

TEST_CASE("round trip and reciprocal over random valid inputs") {
  std::mt19937_64 rng(29);
  int done = 0;
  while (done < 1000) {
    ComplexPair p{uniform(rng, -2, 2), uniform(rng, -2, 2),
                  uniform(rng, -2, 2), uniform(rng, -2, 2)};
    if (p.d1 == 0.0 && p.d2 == 0.0) continue;
    const double x = uniform(rng, 0.1, 10.0);
    if (x == 1.0) continue;
    if (p.a1 + (x - 1.0) * p.d1 <= 1e-6) continue;  // cosine-branch domain
    const cplx direct = p.a() + (x - 1.0) * p.d();
    const cplx rebuilt = reconstruct_xs(x, p);
    CHECK(std::abs(rebuilt - direct) <= 1e-12 * std::abs(direct));
    const cplx product = rebuilt * reconstruct_x_negs(x, p);
    CHECK(std::abs(product - cplx{1.0, 0.0}) <= 1e-12);
    ++done;
  }
}

TEST_CASE("sine-branch reciprocal carries the printed sign") {
  // The sine-branch inverse is evaluated exactly as printed; its product
  // with the forward form is -1, not +1. Recorded behavior, not repaired.
  const ComplexPair p{1, 1, 1, 1};
  const cplx product = reconstruct_xs(3.0, p, Branch::Sine) *
                       reconstruct_x_negs(3.0, p, Branch::Sine);
  CHECK(std::abs(product - cplx{-1.0, 0.0}) <= 1e-12);
}

TEST_CASE("tail decay magnitude") {
  CHECK(tail_decay_magnitude(10.0, {1, 0, 1, 0}) == doctest::Approx(0.1));

  // Agrees with |reconstruct_x_negs| wherever both are defined.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    ComplexPair p{uniform(rng, -2, 2), uniform(rng, -2, 2),
                  uniform(rng, 0.1, 2), uniform(rng, -2, 2)};
    const double x = uniform(rng, 1.5, 200.0);
    if (p.a1 + (x - 1.0) * p.d1 == 0.0) continue;
    CHECK(tail_decay_magnitude(x, p) ==
          doctest::Approx(std::abs(reconstruct_x_negs(x, p))).epsilon(1e-12));
  }

  // Explicit decay bound: |x^-s| <= C/x past x0, with C, x0 from d1, a1.
  for (int trial = 0; trial < 100; ++trial) {
    ComplexPair p{uniform(rng, -2, 2), uniform(rng, -2, 2),
                  uniform(rng, 0.2, 2), uniform(rng, -2, 2)};
    const double C = 2.0 / std::abs(p.d1);
    const double x0 =
        std::max(2.0 * std::abs(p.a1 - p.d1) / std::abs(p.d1), 2.0);
    double x = x0 + 1.0;
    double prev = tail_decay_magnitude(x, p);
    for (int step = 0; step < 8; ++step) {
      CHECK(prev <= C / x);
      x *= 2.0;
      const double next = tail_decay_magnitude(x, p);
      CHECK(next < prev);
      prev = next;
    }
  }
}

TEST_CASE("solve_parameters: hand anchors") {
  const auto real_case = solve_parameters(1.0, 0.0, 2, 3);
  CHECK(real_case.params.d1 == doctest::Approx(1.0));
  CHECK(real_case.params.a1 == doctest::Approx(1.0));
  CHECK(real_case.params.d2 == doctest::Approx(0.0));
  CHECK(real_case.params.a2 == doctest::Approx(0.0));
  CHECK(real_case.degenerate);

  const auto squared = solve_parameters(2.0, 0.0, 2, 3);
  CHECK(squared.params.d1 == doctest::Approx(5.0));
  CHECK(squared.params.a1 == doctest::Approx(-1.0));
  CHECK(squared.degenerate);

  const auto zero = solve_parameters(0.0, 0.0, 2, 3);
  CHECK(zero.params.d1 == 0.0);
  CHECK(zero.params.a1 == doctest::Approx(1.0));
  CHECK(zero.degenerate);

  CHECK_THROWS_AS(solve_parameters(1.0, 0.0, 2, 2), InvalidInput);
  CHECK_THROWS_AS(solve_parameters(1.0, 0.0, 1, 3), InvalidInput);
}

TEST_CASE("solve_parameters: anchor consistency across the audit grid") {
  const double gamma1s[] = {-2.0, -0.5, 0.5, 1.0, 2.0, 3.0};
  const double gamma2s[] = {0.0, 0.5, -0.5, kPi, -kPi};
  const std::pair<long, long> anchors[] = {{2, 3}, {2, 5}, {3, 4}};
  for (double g1 : gamma1s) {
    for (double g2 : gamma2s) {
      for (const auto& [k, m] : anchors) {
        const auto sol = solve_parameters(g1, g2, k, m);
        // solve_parameters asserts consistency internally; re-check one
        // equation here against the trigonometric target.
        const double want =
            std::cos(g2 * std::log(static_cast<double>(k))) *
            std::exp(g1 * std::log(static_cast<double>(k)));
        const double got =
            sol.params.a1 + static_cast<double>(k - 1) * sol.params.d1;
        CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
      }
    }
  }
}
