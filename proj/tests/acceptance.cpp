#include "oracles.hpp"

#include "favard/projection.hpp"
#include "favard/quadrature.hpp"
#include "favard/spectral.hpp"
#include "favard/tiling.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace favard;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;
  std::function<Outcome()> run;
};

Outcome criterion_exact_anchors() {
  const auto ds = four_corner();
  const auto t0 = projection_measure(ds, 1, Slope::rational(0, 1));
  const auto t2 = projection_measure(ds, 1, Slope::rational(2, 1));
  const auto t1 = projection_measure(ds, 1, Slope::rational(1, 1));
  Outcome o;
  o.pass = t0.rational_part == Rational(1, 2) && t0.measure == 0.5 && t2.rational_part == 3 &&
           t1.rational_part == Rational(3, 2);
  o.detail = "t=0: " + to_string(t0.rational_part) + ", t=2: " + to_string(t2.rational_part) +
             ", t=1: " + to_string(t1.rational_part);
  return o;
}

Outcome criterion_tiling_stability() {
  const auto ds = four_corner();
  Outcome o;
  std::ostringstream s;
  for (int n = 0; n <= 8; ++n) {
    const auto pm = projection_measure(ds, n, Slope::rational(2, 1));
    if (pm.rational_part != 3) {
      o.pass = false;
      s << "n=" << n << " gives " << to_string(pm.rational_part) << "; ";
    }
  }
  s << "rational part 3 for n=0..8";
  o.detail = s.str();
  return o;
}

Outcome criterion_unit_square() {
  QuadratureSpec spec;
  spec.nodes = 1024;
  const auto est = favard_length(four_corner(), 0, spec);
  Outcome o;
  o.pass = std::abs(est.value - 4.0) <= 1e-3;
  std::ostringstream s;
  s.precision(12);
  s << "Fav(E_0) = " << est.value << " at 1024 nodes/quarter";
  o.detail = s.str();
  return o;
}

Outcome criterion_decay() {
  QuadratureSpec spec;
  spec.nodes = 256;
  const auto report = decay_experiment(four_corner(), 6, spec);
  Outcome o;
  bool positive = true;
  for (const auto& row : report.rows) positive = positive && row.estimate.value > 0;
  o.pass = positive && report.nonincreasing && report.band_ratio <= 10.0 && report.rows.size() == 6;
  std::ostringstream s;
  s.precision(6);
  s << "Fav(E_1..6) =";
  for (const auto& row : report.rows) s << ' ' << row.estimate.value;
  s << "; n*Fav band ratio " << report.band_ratio << "; fitted exponent " << report.fitted_exponent;
  o.detail = s.str();
  return o;
}

Outcome criterion_fourier_oracles() {
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<int> levels(0, 5);
  std::uniform_real_distribution<double> ys(-100.0, 100.0);
  std::uniform_int_distribution<int> sides(0, 1);
  double worst_rel = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto ds = oracle::random_system(rng);
    const int n = levels(rng);
    const double y = ys(rng);
    const Side side = sides(rng) ? Side::a : Side::b;
    const auto direct = oracle::level_symbol(ds.base(), ds.digits(side), n, y);
    const auto product = level_symbol(ds, n, side, y);
    worst_rel = std::max(worst_rel, std::abs(product - direct) / std::abs(direct));
  }
  double worst_plancherel = 0.0;
  const auto ds = four_corner();
  for (int n = 1; n <= 3; ++n)
    for (auto [q, r] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {2, 1}, {1, 2}}) {
      const auto p = plancherel_check(ds, n, Slope::rational(q, r), 1000.0);
      worst_plancherel = std::max(worst_plancherel, p.error);
    }
  Outcome o;
  o.pass = worst_rel <= 1e-10 && worst_plancherel <= 1e-3;
  std::ostringstream s;
  s << "max relative symbol error " << worst_rel << "; max Plancherel error " << worst_plancherel;
  o.detail = s.str();
  return o;
}

Outcome criterion_period_energy() {
  const auto ds = four_corner();
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n)
    for (double offset : {0.0, 0.25, 1.7, 13.3})
      worst = std::max(worst, std::abs(unit_period_energy(ds, n, Side::a, offset, 2048) - std::pow(2.0, n)));
  Outcome o;
  o.pass = worst <= 1e-4;
  std::ostringstream s;
  s << "max |energy - 2^n| = " << worst;
  o.detail = s.str();
  return o;
}

Outcome criterion_tiling_suite() {
  std::size_t cases = 0, mismatches = 0;
  for (int dsize = 1; dsize <= 4; ++dsize) {
    const auto cs = oracle::subsets(12, 12 / dsize);
    for (const auto& d : oracle::subsets(12, dsize))
      for (const auto& c : cs) {
        ++cases;
        if (tiling_check(d, c, 12) != oracle::tiles(d, c, 12)) ++mismatches;
      }
  }
  const auto found = complement_search({0, 3, 6, 9}, 64);
  const bool found_ok = found && found->c == std::vector<std::int64_t>{0, 1, 2} && found->modulus == 12 &&
                        oracle::tiles(found->d, found->c, found->modulus);
  const bool none_ok = !complement_search({0, 1, 2, 4}, 64).has_value();
  Outcome o;
  o.pass = mismatches == 0 && found_ok && none_ok;
  std::ostringstream s;
  s << cases << " (D, C) pairs, " << mismatches << " mismatches; {0,3,6,9} -> "
    << (found_ok ? "C={0,1,2}, M=12" : "wrong") << "; {0,1,2,4} -> " << (none_ok ? "none" : "found");
  o.detail = s.str();
  return o;
}

Outcome criterion_exponents() {
  const auto e = exponent_report(four_corner(), 2, 1);
  Outcome o;
  o.pass = e.gamma_exact == Rational(1, 2) && e.sigma_exact == Rational(8) && e.p_inf_exact == Rational(38);
  o.detail = "gamma=" + (e.gamma_exact ? to_string(*e.gamma_exact) : "?") +
             " sigma=" + (e.sigma_exact ? to_string(*e.sigma_exact) : "?") +
             " p_inf=" + (e.p_inf_exact ? to_string(*e.p_inf_exact) : "?");
  return o;
}

Outcome criterion_zero_set() {
  const auto ds = four_corner();
  const auto analysis = direction_analysis(ds, 2, 1);
  Outcome o;
  if (!analysis.lattice_modulus) {
    o.pass = false;
    o.detail = "no tiling certificate";
    return o;
  }
  try {
    const auto rep = zero_set_structure_check(ds, 3, 0.05, 0.75, 2, 1, *analysis.lattice_modulus);
    o.pass = rep.pass && rep.root_part.size() <= 3 && rep.uncovered.empty() &&
             std::abs(rep.resolution - 1e-6 * 64) < 1e-15;
    std::ostringstream s;
    s << "M=" << rep.modulus << ", " << rep.hits.size() << " hits, " << rep.lattice_part.size() << " lattice, "
      << rep.root_part.size() << " root components, " << rep.boundary.size() << " boundary cells; c=" << rep.c
      << " C=" << rep.C;
    o.detail = s.str();
  } catch (const NoCoverError& e) {
    o.pass = false;
    o.detail = std::string("NoCover: ") + std::to_string(e.report().uncovered.size()) + " uncovered intervals";
  }
  return o;
}

Outcome criterion_x_lambda() {
  const auto ds = four_corner();
  const auto yes = x_lambda_member(ds, 3, Slope::rational(0, 1), 8);
  const auto no = x_lambda_member(ds, 3, Slope::rational(0, 1), parse_rational("7.9"));
  Outcome o;
  o.pass = yes.member && !no.member && yes.max_norm == 8;
  o.detail = "lambda=8 -> " + std::string(yes.member ? "true" : "false") + ", lambda=7.9 -> " +
             (no.member ? "true" : "false") + ", max norm " + to_string(yes.max_norm);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exactness anchors", 1.0, criterion_exact_anchors},
      {2, "tiling-direction stability", 30.0, criterion_tiling_stability},
      {3, "unit-square Favard length", 5.0, criterion_unit_square},
      {4, "decay sanity", 600.0, criterion_decay},
      {5, "Fourier oracle equivalence", 0.0, criterion_fourier_oracles},
      {6, "per-period energy", 0.0, criterion_period_energy},
      {7, "tiling suite", 60.0, criterion_tiling_suite},
      {8, "exponent bookkeeping", 0.0, criterion_exponents},
      {9, "zero-set structure", 0.0, criterion_zero_set},
      {10, "X_lambda membership", 0.0, criterion_x_lambda},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit_s <= 0.0 || secs < c.time_limit_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("criterion %2d %s: %s (%.3f s%s) %s\n", c.id, pass ? "PASS" : "FAIL", c.title, secs,
                in_time ? "" : ", over time limit", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
