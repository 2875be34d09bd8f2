#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "favard/error.hpp"
#include "favard/projection.hpp"
#include "favard/step_function.hpp"

#include <cmath>
#include <numeric>

using namespace favard;

namespace {

std::vector<std::int64_t> as_int64(const std::vector<BigInt>& v) {
  std::vector<std::int64_t> out;
  for (const auto& e : v) out.push_back(e.convert_to<std::int64_t>());
  return out;
}

const std::vector<std::pair<std::int64_t, std::int64_t>> slopes{{0, 1}, {1, 1}, {2, 1}, {1, 2},
                                                                 {1, 3}, {3, 2}, {5, 3}, {4, 1}};

}  // namespace

TEST_CASE("slopes") {
  const auto s = Slope::rational(4, 2);
  CHECK(s.q() == 2);
  CHECK(s.r() == 1);
  CHECK(s.exact() == 2);
  CHECK(s.cos_theta() == doctest::Approx(1 / std::sqrt(5.0)));
  CHECK(s.sin_theta() == doctest::Approx(2 / std::sqrt(5.0)));
  CHECK(Slope::parse("0.5") == Slope::rational(1, 2));
  CHECK(Slope::parse("2/1") == Slope::rational(2, 1));
  CHECK(Slope::parse("0").q() == 0);
  CHECK_THROWS_AS(Slope::parse("-1"), DomainError);
  CHECK_THROWS_AS(Slope::rational(1, 0), DomainError);
  CHECK_THROWS_AS(Slope::real(-0.5), DomainError);
  CHECK_THROWS_AS(Slope::real(0.5).q(), DomainError);
}

TEST_CASE("projected points") {
  const auto ds = four_corner();
  auto p = projected_points(ds, 1, Slope::rational(2, 1));
  CHECK(as_int64(p.points) == std::vector<std::int64_t>{0, 3, 6, 9});
  CHECK(p.denominator == 4);
  p = projected_points(ds, 1, Slope::rational(1, 1));
  CHECK(as_int64(p.points) == std::vector<std::int64_t>{0, 3, 3, 6});
  p = projected_points(ds, 0, Slope::rational(7, 3));
  CHECK(as_int64(p.points) == std::vector<std::int64_t>{0});
  CHECK(p.denominator == 3);
}

TEST_CASE("projection measure anchors") {
  const auto ds = four_corner();
  auto pm = projection_measure(ds, 1, Slope::rational(0, 1));
  CHECK(pm.rational_part == Rational(1, 2));
  CHECK(pm.cos_theta == 1.0);
  CHECK(pm.measure == doctest::Approx(0.5));
  CHECK(pm.support.size() == 2);

  pm = projection_measure(ds, 1, Slope::rational(2, 1));
  CHECK(pm.rational_part == 3);
  CHECK(pm.measure == doctest::Approx(3 / std::sqrt(5.0)).epsilon(1e-15));
  CHECK(pm.support.size() == 1);

  pm = projection_measure(ds, 1, Slope::rational(1, 1));
  CHECK(pm.rational_part == Rational(3, 2));
  CHECK(pm.measure == doctest::Approx(3 / (2 * std::sqrt(2.0))).epsilon(1e-15));
  REQUIRE(pm.support.size() == 3);
  CHECK(pm.support.intervals()[0] == Interval{0, Rational(1, 2)});
  CHECK(pm.support.intervals()[1] == Interval{Rational(3, 4), Rational(5, 4)});
  CHECK(pm.support.intervals()[2] == Interval{Rational(3, 2), 2});
}

TEST_CASE("projection measure matches the bitmap oracle") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 12; ++i) {
    const auto ds = oracle::random_system(rng);
    for (int n = 0; n <= 2; ++n)
      for (auto [q, r] : slopes) {
        const auto pm = projection_measure(ds, n, Slope::rational(q, r));
        const auto cells = oracle::projection_cells(ds, n, q, r);
        CHECK(pm.rational_part == Rational(cells, r * oracle::power(ds.base(), n)));
      }
  }
}

TEST_CASE("swap symmetry") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 10; ++i) {
    const auto ds = oracle::random_system(rng);
    const auto sw = ds.swapped();
    for (int n = 1; n <= 3; ++n)
      for (auto [q, r] : slopes) {
        if (q == 0) continue;
        CHECK(projection_length_units(ds, n, q, r) == projection_length_units(sw, n, r, q));
        const auto a = projection_measure(ds, n, Slope::rational(q, r));
        const auto b = projection_measure(sw, n, Slope::rational(r, q));
        CHECK(a.rational_part * r == b.rational_part * q);
        CHECK(a.measure == doctest::Approx(b.measure).epsilon(1e-13));
      }
  }
}

TEST_CASE("vertical projection") {
  const auto ds = validate_digit_system(6, {0, 1, 5}, {0, 4});
  for (int n = 0; n <= 3; ++n) {
    // Along the y axis only B matters: |B|^n disjoint intervals of length K^-n.
    CHECK(projection_length_units(ds, n, 1, 0) == BigInt(oracle::power(2, n)));
    CHECK(projection_length_units(ds, n, 0, 1) == BigInt(oracle::power(3, n)));
  }
}

TEST_CASE("monotone in n") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 8; ++i) {
    const auto ds = oracle::random_system(rng);
    for (auto [q, r] : slopes) {
      Rational prev = projection_measure(ds, 0, Slope::rational(q, r)).rational_part;
      for (int n = 1; n <= 3; ++n) {
        const auto cur = projection_measure(ds, n, Slope::rational(q, r)).rational_part;
        CHECK(cur <= prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("tiling direction keeps measure 3") {
  for (int n = 0; n <= 6; ++n) CHECK(projection_measure(four_corner(), n, Slope::rational(2, 1)).rational_part == 3);
}

TEST_CASE("float evaluator agrees with exact and corner oracle") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi / 2);
  for (int i = 0; i < 6; ++i) {
    const auto ds = oracle::random_system(rng);
    for (int n = 0; n <= 2; ++n) {
      const ProjectionEvaluator eval(ds, n);
      for (auto [q, r] : slopes) {
        const double theta = std::atan2(double(q), double(r));
        CHECK(eval.length(theta) == doctest::Approx(projection_measure(ds, n, Slope::rational(q, r)).measure).epsilon(1e-9));
      }
      for (int k = 0; k < 20; ++k) {
        const double theta = angle(rng);
        CHECK(std::abs(eval.length(theta) - oracle::projection_length(ds, n, theta)) < 1e-9);
      }
      CHECK(eval.length(std::numbers::pi / 2) == doctest::Approx(oracle::projection_length(ds, n, std::numbers::pi / 2)));
    }
  }
}

TEST_CASE("step function basics") {
  const StepFunction f({0, Rational(1, 2), 1, 2}, {1, 1, 3});
  CHECK(f.breakpoints() == std::vector<Rational>{0, 1, 2});
  CHECK(f.values() == std::vector<std::int64_t>{1, 3});
  CHECK(f(Rational(1, 2)) == 1);
  CHECK(f(1) == 3);
  CHECK(f(2) == 0);
  CHECK(f(-1) == 0);
  CHECK(f.integral() == 4);
  CHECK(f.l2_norm_sq() == 10);
  CHECK(f.max_value() == 3);
  CHECK(f.shifted(1)(Rational(5, 2)) == 3);

  const StepFunction g({1, 3}, {2});
  const auto h = f + g;
  CHECK(h(Rational(1, 2)) == 1);
  CHECK(h(Rational(3, 2)) == 5);
  CHECK(h(Rational(5, 2)) == 2);
  CHECK(h.integral() == f.integral() + g.integral());

  const StepFunction trimmed({0, 1, 2, 3}, {0, 2, 0});
  CHECK(trimmed.breakpoints() == std::vector<Rational>{1, 2});
  CHECK_THROWS_AS(StepFunction({0, 1}, {1, 2}), DomainError);
  CHECK_THROWS_AS(StepFunction({1, 0}, {1}), DomainError);
  CHECK_THROWS_AS(f + StepFunction({0, 1}, {1}, 2), DomainError);
}

TEST_CASE("counting function examples") {
  const auto ds = four_corner();
  const auto f = counting_function(ds, 1, Slope::rational(0, 1));
  CHECK(f.breakpoints() == std::vector<Rational>{0, Rational(1, 4), Rational(3, 4), 1});
  CHECK(f(Rational(1, 8)) * f.scale() == 2);
  CHECK(f(Rational(1, 2)) == 0);
  CHECK(f(Rational(7, 8)) * f.scale() == 2);

  std::mt19937_64 rng(31);
  const auto rs = oracle::random_system(rng);
  const auto unit = counting_function(rs, 0, Slope::rational(3, 2));
  CHECK(unit.breakpoints() == std::vector<Rational>{0, 1});
  CHECK(unit(Rational(1, 2)) * unit.scale() == 1);
}

TEST_CASE("counting function integrals") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 10; ++i) {
    const auto ds = oracle::random_system(rng);
    for (int n = 0; n <= 3; ++n)
      for (auto [q, r] : slopes) {
        const auto s = Slope::rational(q, r);
        CHECK(counting_function(ds, n, s, Window::unit).integral() == 1);
        CHECK(counting_function(ds, n, s, Window::squares).integral() == 1 + s.exact());
      }
  }
}

TEST_CASE("squared norms match the cell oracle") {
  const auto ds = four_corner();
  for (int n = 0; n <= 5; ++n) CHECK(l2_norm_sq(ds, n, Slope::rational(0, 1)) == oracle::power(2, n));
  CHECK(l2_norm_sq(ds, 1, Slope::rational(2, 1)) == 1);
  CHECK(l2_norm_sq(ds, 1, Slope::rational(2, 1)) == oracle::l2_norm_sq(ds, 1, 2, 1, 1));

  std::mt19937_64 rng(41);
  for (int i = 0; i < 10; ++i) {
    const auto rs = oracle::random_system(rng);
    CHECK(l2_norm_sq(rs, 0, Slope::rational(1, 2)) == 1);
    for (int n = 1; n <= 2; ++n)
      for (auto [q, r] : slopes) {
        const auto s = Slope::rational(q, r);
        CHECK(l2_norm_sq(rs, n, s, Window::unit) == oracle::l2_norm_sq(rs, n, q, r, r));
        CHECK(l2_norm_sq(rs, n, s, Window::squares) == oracle::l2_norm_sq(rs, n, q, r, r + q));
      }
  }
}

TEST_CASE("convolution consistency across levels") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 6; ++i) {
    const auto ds = oracle::random_system(rng);
    for (auto [q, r] : slopes) {
      const auto s = Slope::rational(q, r);
      const int m = 3;
      for (int n = 1; n < m; ++n) {
        const auto whole = counting_function(ds, m, s);
        const auto fine = projected_points(ds, n, s);
        const auto coarse = projected_points(ds, m - n, s);
        const BigInt denom = BigInt(r) * ipow(BigInt(ds.base()), m);
        const auto pattern = counting_function_from_atoms(fine.points, BigInt(r), denom);
        const BigInt shift = ipow(BigInt(ds.base()), n);
        StepFunction sum;
        bool first = true;
        for (const auto& u : coarse.points) {
          auto piece = pattern.shifted(Rational(u * shift, denom));
          sum = first ? piece : sum + piece;
          first = false;
        }
        CHECK(sum == whole);
      }
    }
  }
}

TEST_CASE("X_lambda membership") {
  const auto ds = four_corner();
  auto res = x_lambda_member(ds, 3, Slope::rational(0, 1), 8);
  CHECK(res.member);
  CHECK(res.witness_level == 3);
  CHECK(res.max_norm == 8);
  CHECK(res.norms == std::vector<Rational>{2, 4, 8});
  CHECK_FALSE(x_lambda_member(ds, 3, Slope::rational(0, 1), parse_rational("7.9")).member);
  CHECK_THROWS_AS(x_lambda_member(ds, 0, Slope::rational(0, 1), 8), DomainError);

  std::mt19937_64 rng(47);
  for (int i = 0; i < 10; ++i) {
    const auto rs = oracle::random_system(rng);
    for (auto [q, r] : slopes) {
      const auto m = x_lambda_member(rs, 1, Slope::rational(q, r), rs.base());
      CHECK(m.member);
      CHECK(m.max_norm == oracle::l2_norm_sq(rs, 1, q, r, r));
    }
  }
}

TEST_CASE("X_lambda measure estimates") {
  const auto ds = four_corner();
  const std::vector<Slope> zero{Slope::rational(0, 1)};
  CHECK(x_lambda_measure_estimate(ds, 3, Rational(1000000), zero).fraction == 1.0);
  CHECK(x_lambda_measure_estimate(ds, 3, 0, zero).fraction == 0.0);
  CHECK_THROWS_AS(x_lambda_measure_estimate(ds, 3, 1, {}), DomainError);

  const auto grid = farey_sequence(16);
  const auto est = x_lambda_measure_estimate(ds, 4, 4, grid);
  std::size_t inside = 0;
  for (const auto& s : grid) {
    Rational worst = 0;
    for (int n = 1; n <= 4; ++n) worst = std::max(worst, oracle::l2_norm_sq(ds, n, s.q(), s.r(), s.r()));
    inside += worst <= 4;
  }
  CHECK(est.samples.size() == grid.size());
  CHECK(est.fraction == double(inside) / double(grid.size()));
  CHECK(inside == 76);
  CHECK(grid.size() == 81);
  MESSAGE("X_4^4 fraction on Farey order 16: " << est.fraction << " (" << inside << "/" << grid.size() << ")");
}

TEST_CASE("Farey sequences") {
  const auto f5 = farey_sequence(5);
  std::vector<Rational> got;
  for (const auto& s : f5) got.push_back(s.exact());
  CHECK(got == std::vector<Rational>{0, Rational(1, 5), Rational(1, 4), Rational(1, 3), Rational(2, 5), Rational(1, 2),
                                     Rational(3, 5), Rational(2, 3), Rational(3, 4), Rational(4, 5), 1});
  for (int order = 1; order <= 40; ++order) {
    std::size_t expect = 1;
    for (int k = 1; k <= order; ++k) {
      int phi = 0;
      for (int j = 1; j <= k; ++j) phi += std::gcd(j, k) == 1;
      expect += phi;
    }
    CHECK(farey_sequence(order).size() == expect);
  }
}

TEST_CASE("resource cap") {
  CHECK_THROWS_AS(projection_measure(four_corner(), 4, Slope::rational(1, 1), Limits{64}), ResourceError);
}
