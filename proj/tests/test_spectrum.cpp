#include <doctest.h>

#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "spectrum.hpp"

using namespace qtqft;

TEST_CASE("spectral points for Gr(1,2)") {
  const auto points = spectral_points(BoxContext(1, 1));
  REQUIRE(points.size() == 2);
  CHECK(points[0].subset == std::vector<int>{1});
  CHECK(std::abs(points[0].roots[0] - Complex(-1.0, 0.0)) < 1e-12);
  CHECK(points[1].subset == std::vector<int>{2});
  CHECK(std::abs(points[1].roots[0] - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("roots are (r+s)-th roots of (-1)^(r+1), pairwise distinct") {
  for (const BoxContext ctx : {BoxContext(1, 1), BoxContext(2, 2),
                               BoxContext(2, 3), BoxContext(3, 3)}) {
    const Complex target = (ctx.r % 2 == 0) ? Complex(-1.0) : Complex(1.0);
    for (const auto& p : spectral_points(ctx)) {
      for (std::size_t i = 0; i < p.roots.size(); ++i) {
        CHECK(std::abs(complex_int_pow(p.roots[i], ctx.n()) - target) < 1e-10);
        for (std::size_t j = i + 1; j < p.roots.size(); ++j) {
          CHECK(std::abs(p.roots[i] - p.roots[j]) > 1e-9);
        }
      }
    }
  }
  CHECK(spectral_points(BoxContext(3, 3)).size() == 20);
}

TEST_CASE("schur evaluation basics") {
  const BoxContext ctx(2, 2);
  for (const auto& p : spectral_points(ctx)) {
    CHECK(std::abs(schur_eval({0, 0}, p) - Complex(1.0)) < 1e-12);
    const Complex e1 = p.roots[0] + p.roots[1];
    CHECK(std::abs(schur_eval({1, 0}, p) - e1) < 1e-12);
  }
  const auto pts_one = spectral_points(BoxContext(1, 1));
  CHECK(std::abs(schur_eval({1}, pts_one[0]) - Complex(-1.0)) < 1e-12);
  CHECK(std::abs(schur_eval({1}, pts_one[1]) - Complex(1.0)) < 1e-12);
}

TEST_CASE("vandermonde norms and couplings") {
  const auto pts_one = spectral_points(BoxContext(1, 1));
  CHECK(vand(pts_one[0]) == doctest::Approx(1.0));
  CHECK(coupling_a(BoxContext(1, 1), pts_one[0]) == doctest::Approx(2.0));

  const BoxContext two(2, 2);
  const auto points = spectral_points(two);
  REQUIRE(points[0].subset == std::vector<int>{1, 2});
  CHECK(vand(points[0]) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(coupling_a(two, points[0]) == doctest::Approx(8.0).epsilon(1e-10));
  REQUIRE(points[1].subset == std::vector<int>{1, 3});
  CHECK(vand(points[1]) == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(coupling_a(two, points[1]) == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("verlinde sine values") {
  for (const BoxContext ctx : {BoxContext(1, 1), BoxContext(2, 2),
                               BoxContext(2, 3), BoxContext(3, 3)}) {
    CHECK(verlinde_sine(ctx, 1) ==
          doctest::Approx(static_cast<double>(ctx.basis_count())).epsilon(1e-9));
  }
  for (int g = 1; g <= 5; ++g) {
    CHECK(verlinde_sine(BoxContext(1, 1), g) ==
          doctest::Approx(std::pow(2.0, g)).epsilon(1e-9));
  }
  CHECK(verlinde_sine(BoxContext(2, 2), 2) == doctest::Approx(40.0).epsilon(1e-9));
  CHECK(verlinde_sine(BoxContext(2, 1), 2) == doctest::Approx(9.0).epsilon(1e-9));
}

TEST_CASE("closed spectral invariants") {
  const BoxContext one(1, 1);
  CHECK(std::abs(closed_invariant_spectral(one, 2, 0)) < 1e-9);
  CHECK(std::abs(closed_invariant_spectral(one, 2, 1) - Complex(4.0)) < 1e-9);
  for (const BoxContext ctx : {BoxContext(1, 2), BoxContext(2, 2)}) {
    CHECK(std::abs(closed_invariant_spectral(ctx, 1, 0) -
                   Complex(static_cast<double>(ctx.basis_count()))) < 1e-9);
  }
  CHECK_THROWS_AS(closed_invariant_spectral(one, 0, 0), ArgumentError);
}

TEST_CASE("holla spectral counts") {
  // gamma = 0 reduces to the Verlinde sum.
  for (int g = 2; g <= 3; ++g) {
    CHECK(holla_spectral(BoxContext(2, 2), g, 0) ==
          doctest::Approx(verlinde_sine(BoxContext(2, 2), g)).epsilon(1e-9));
    CHECK(holla_spectral(BoxContext(3, 3), g, 0) ==
          doctest::Approx(verlinde_sine(BoxContext(3, 3), g)).epsilon(1e-9));
  }
  // Hand value for Gr(2,4), g = 2, gamma = 1: 16 * (4 * 1/2 - 2 * 1/4) = 24.
  CHECK(holla_spectral(BoxContext(2, 2), 2, 1) == doctest::Approx(24.0).epsilon(1e-9));
  CHECK_THROWS_AS(holla_spectral(BoxContext(1, 1), 2, 1), ArgumentError);
  CHECK_THROWS_AS(holla_spectral(BoxContext(2, 2), 2, -1), ArgumentError);
}

TEST_CASE("orthogonality and sine identities") {
  for (int n = 2; n <= 6; ++n) {
    for (int r = 1; r < n; ++r) {
      const BoxContext ctx(r, n - r);
      const auto points = spectral_points(ctx);
      const auto evals = schur_table(ctx);
      const double power = std::pow(static_cast<double>(n), r);

      for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
          Complex sum = 0.0;
          for (std::size_t a = 0; a < evals.size(); ++a) {
            sum += std::conj(evals[a][i]) * evals[a][j];
          }
          const Complex expect =
              (i == j) ? Complex(power / vand(points[i])) : Complex(0.0);
          CHECK(std::abs(sum - expect) < 1e-8);
        }
      }

      for (const auto& p : points) {
        double sines = 1.0;
        std::vector<bool> inside(n + 1, false);
        for (int j : p.subset) inside[j] = true;
        for (int j : p.subset) {
          for (int k = 1; k <= n; ++k) {
            if (!inside[k]) {
              sines *= std::abs(2.0 * std::sin(std::numbers::pi * (j - k) / n));
            }
          }
        }
        CHECK(std::abs(power - vand(p) * sines) < 1e-8);
      }
    }

    double product = 1.0;
    for (int k = 1; k < n; ++k) product *= 2.0 * std::sin(std::numbers::pi * k / n);
    CHECK(std::abs(n - product) < 1e-10);
  }
}

TEST_CASE("point class values on the spectrum") {
  for (const BoxContext ctx : {BoxContext(2, 2), BoxContext(2, 3), BoxContext(3, 3)}) {
    const Partition full(ctx.r, ctx.s);
    const Partition column(ctx.r, 1);
    for (const auto& p : spectral_points(ctx)) {
      const Complex top = schur_eval(full, p);
      CHECK(std::abs(std::abs(top) - 1.0) < 1e-10);
      CHECK(std::abs(top - complex_int_pow(schur_eval(column, p), ctx.s)) < 1e-10);
    }
  }
}

TEST_CASE("verlinde symmetry in r and s") {
  for (int g = 0; g <= 4; ++g) {
    const double lhs = verlinde_sine(BoxContext(2, 3), g);
    const double rhs = verlinde_sine(BoxContext(3, 2), g);
    CHECK(std::abs(lhs - rhs) <= 1e-6 * std::max(1.0, std::abs(lhs)));
  }
}
