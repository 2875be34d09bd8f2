#include "favard/spectral.hpp"

#include "favard/parallel.hpp"

#include <gsl/gsl_sf_expint.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace favard {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// e^{-2 pi i x}, reducing x mod 1 first to keep the phase accurate.
Complex unit(long double x) {
  const auto frac = static_cast<double>(x - std::floor(x));
  return std::polar(1.0, -two_pi * frac);
}

// sin(pi x), exactly zero at integers.
double sin_pi(double x) {
  const double r = x - 2.0 * std::round(0.5 * x);
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
  return std::sin(std::numbers::pi * r);
}

// Trapezoid over [lo, hi] with at most `step` spacing, summed in fixed-size
// chunks so the result does not depend on the worker count.
template <class F>
double trapezoid(double lo, double hi, double step, F&& f, std::size_t* samples = nullptr) {
  const auto intervals = static_cast<std::size_t>(std::max(1.0, std::ceil((hi - lo) / step)));
  const double h = (hi - lo) / static_cast<double>(intervals);
  constexpr std::size_t chunk = 4096;
  const std::size_t points = intervals + 1;
  const std::size_t chunks = (points + chunk - 1) / chunk;
  auto partial = parallel_map(chunks, [&](std::size_t c) {
    std::vector<double> vals;
    const std::size_t end = std::min(points, (c + 1) * chunk);
    for (std::size_t i = c * chunk; i < end; ++i) {
      const double w = (i == 0 || i == intervals) ? 0.5 : 1.0;
      vals.push_back(w * f(lo + h * static_cast<double>(i)));
    }
    return pairwise_sum(vals);
  });
  if (samples) *samples = points;
  return h * pairwise_sum(partial);
}

}  // namespace

double default_spectral_step(double t) { return default_step_factor / (1.0 + t); }

void check_spectral_step(double step, double t) {
  if (!(step > 0.0)) throw GridTooCoarse("grid step must be positive");
  if (step > nyquist_guard / (1.0 + t))
    throw GridTooCoarse("step " + std::to_string(step) + " exceeds guard " +
                        std::to_string(nyquist_guard / (1.0 + t)));
}

Complex digit_symbol(std::span<const std::int64_t> digits, Complex z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-12) throw DomainError("digit symbol needs |z| = 1");
  Complex sum = 0.0;
  for (auto d : digits) sum += std::pow(z, static_cast<double>(d));
  return sum;
}

Complex level_symbol(const DigitSystem& ds, int n, Side side, double y) {
  const auto& digits = ds.digits(side);
  const auto base = static_cast<long double>(ds.base());
  Complex product = 1.0;
  long double scaled = y;
  for (int j = 1; j <= n; ++j) {
    scaled /= base;
    Complex factor = 0.0;
    for (auto d : digits) factor += unit(static_cast<long double>(d) * scaled);
    product *= factor;
  }
  return product;
}

Complex nu_hat(const DigitSystem& ds, int n, double t, double xi) {
  return std::pow(static_cast<double>(ds.base()), -n) * level_symbol(ds, n, Side::a, xi) *
         level_symbol(ds, n, Side::b, t * xi);
}

Complex chi(double xi) {
  // e^{-pi i xi} sin(pi xi) / (pi xi)
  if (xi == 0.0) return 1.0;
  return unit(0.5L * xi) * (sin_pi(xi) / (std::numbers::pi * xi));
}

double chi_lower_bound(std::int64_t base, int big_n, int m) {
  if (m >= big_n) return 0.0;
  const double s = std::pow(static_cast<double>(base), m - big_n);
  return std::sin(std::numbers::pi * s) / (std::numbers::pi * s);
}

Complex f_hat(const DigitSystem& ds, int n, double t, double xi) {
  return nu_hat(ds, n, t, xi) * chi(xi * std::pow(static_cast<double>(ds.base()), -n));
}

SpectralGrid spectrum(const DigitSystem& ds, int n, double t, double lo, double hi,
                      std::optional<double> step, Transform which) {
  if (!(hi > lo)) throw DomainError("spectrum needs hi > lo");
  SpectralGrid grid;
  grid.lo = lo;
  grid.hi = hi;
  grid.step = step.value_or(default_spectral_step(t));
  check_spectral_step(grid.step, t);
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / grid.step + 1e-9)) + 1;
  grid.samples = parallel_map(count, [&](std::size_t i) {
    const double xi = lo + grid.step * static_cast<double>(i);
    return SpectralSample{xi, which == Transform::nu_hat ? nu_hat(ds, n, t, xi) : f_hat(ds, n, t, xi)};
  });
  return grid;
}

IntegralReport integral_I(const DigitSystem& ds, int big_n, int n, int m, double t,
                          std::optional<double> step, std::optional<double> delta) {
  if (n < 1 || m < 1) throw DomainError("integral I needs n, m >= 1");
  if (big_n < n) throw DomainError("integral I needs N >= n");
  IntegralReport out;
  out.step = step.value_or(default_spectral_step(t));
  check_spectral_step(out.step, t);
  const double k = static_cast<double>(ds.base());
  const double lo = std::pow(k, n);
  const double hi = std::pow(k, n + m);
  out.I = trapezoid(lo, hi, out.step, [&](double xi) { return std::norm(nu_hat(ds, big_n, t, xi)); },
                    &out.samples);
  out.I1 = trapezoid(lo, hi, out.step, [&](double xi) { return std::norm(nu_hat(ds, n, t, xi)); });
  if (delta) {
    const double cutoff = std::pow(k, -2.0 * m) * *delta * *delta;
    auto in_z = [&](double xi) { return std::abs(nu_hat(ds, m, t, xi / lo)) <= cutoff; };
    out.I2 = trapezoid(lo, hi, out.step,
                       [&](double xi) { return in_z(xi) ? std::norm(nu_hat(ds, n, t, xi)) : 0.0; });
    const double inside = trapezoid(lo, hi, out.step, [&](double xi) { return in_z(xi) ? 1.0 : 0.0; });
    out.z_fraction = inside / (hi - lo);
  }
  return out;
}

double unit_period_energy(const DigitSystem& ds, int n, Side side, double offset,
                          std::size_t samples) {
  if (samples == 0) throw DomainError("need at least one sample");
  const double scale = std::pow(static_cast<double>(ds.base()), n);
  std::vector<double> vals(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double y = offset + static_cast<double>(i) / static_cast<double>(samples);
    vals[i] = std::norm(level_symbol(ds, n, side, scale * y));
  }
  return pairwise_sum(vals) / static_cast<double>(samples);
}

PlancherelCheck plancherel_check(const DigitSystem& ds, int n, const Slope& slope, double bound,
                                 std::optional<double> step, const Limits& limits) {
  if (!(bound > 0.0)) throw DomainError("Plancherel bound must be positive");
  PlancherelCheck out;
  const double t = slope.value();
  const double h = step.value_or(default_spectral_step(t));
  check_spectral_step(h, t);
  out.window = 2.0 * trapezoid(0.0, bound, h, [&](double xi) { return std::norm(f_hat(ds, n, t, xi)); });

  // |nu_hat|^2 = sum_{i,j} w_i w_j cos(2 pi d_ij xi) and
  // |chi(xi / K^n)|^2 = K^{2n} (1 - cos(2 pi K^-n xi)) / (2 pi^2 xi^2), so the
  // tail reduces to integrals G(w) of cos(2 pi w xi) / xi^2 over [bound, inf).
  auto pts = projected_points(ds, n, slope, limits);
  std::map<BigInt, BigInt> atoms;
  for (auto& p : pts.points) ++atoms[p];
  std::map<BigInt, BigInt> differences;  // |x_i - x_j| -> sum of multiplicity products
  for (auto i = atoms.begin(); i != atoms.end(); ++i)
    for (auto j = atoms.begin(); j != atoms.end(); ++j) {
      BigInt d = i->first - j->first;
      if (d < 0) d = -d;
      differences[d] += i->second * j->second;
    }
  const double denom = to_double(pts.denominator);
  const double width = std::pow(static_cast<double>(ds.base()), -n);
  auto tail_g = [bound](double omega) {
    omega = std::abs(omega);
    if (omega == 0.0) return 1.0 / bound;
    const double a = two_pi * omega;
    return std::cos(a * bound) / bound - a * (std::numbers::pi / 2 - gsl_sf_Si(a * bound));
  };
  std::vector<double> terms;
  for (const auto& [d, count] : differences) {
    const double omega = to_double(d) / denom;
    terms.push_back(to_double(count) *
                    (tail_g(omega) - 0.5 * tail_g(omega + width) - 0.5 * tail_g(omega - width)));
  }
  // Atom weights K^-n cancel the K^{2n} of |chi|^2; both half-lines count.
  out.tail = pairwise_sum(terms) / (std::numbers::pi * std::numbers::pi);
  out.total = out.window + out.tail;
  out.exact = l2_norm_sq(ds, n, slope, Window::unit, limits);
  out.error = std::abs(out.total - to_double(out.exact));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Cell {
  double lo, hi, g_lo, g_hi;
};

void append_merged(std::vector<RealInterval>& out, double lo, double hi) {
  if (!out.empty() && lo <= out.back().hi) {
    out.back().hi = std::max(out.back().hi, hi);
  } else {
    out.push_back({lo, hi});
  }
}

std::vector<RealInterval> merge_sorted(std::vector<RealInterval> a, const std::vector<RealInterval>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end(), [](const RealInterval& x, const RealInterval& y) { return x.lo < y.lo; });
  std::vector<RealInterval> out;
  for (const auto& iv : a) append_merged(out, iv.lo, iv.hi);
  return out;
}

}  // namespace

ZeroScan zero_set_scan(const DigitSystem& ds, int m, double delta, const ScanOptions& options) {
  if (m < 1) throw DomainError("zero set scan needs m >= 1");
  if (!(delta > 0.0)) throw DomainError("zero set scan needs delta > 0");
  // |A^m(e^{-2 pi i y})| has frequencies in [0, 1).
  if (!(options.step > 0.0) || options.step > nyquist_guard)
    throw GridTooCoarse("scan step must lie in (0, " + std::to_string(nyquist_guard) + "]");
  if (!(options.resolution_factor > 0.0)) throw DomainError("resolution factor must be positive");

  const auto& a = ds.a_digits();
  const double k = static_cast<double>(ds.base());
  const double span = std::pow(k, m);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(ds.b_digits().size());

  ZeroScan out;
  out.threshold = delta / std::pow(nb, m);
  out.resolution = options.resolution_factor * span;

  // Lipschitz constant of y -> |A^m(e^{-2 pi i y})|: 2 pi times the sum of the
  // points of A^m, and the global maximum |A|^m.
  double digit_sum = 0.0;
  for (auto d : a) digit_sum += static_cast<double>(d);
  double geometric = 0.0;
  for (int j = 1; j <= m; ++j) geometric += std::pow(k, -j);
  const double lipschitz = two_pi * std::pow(na, m - 1) * digit_sum * geometric;
  const double ceiling = std::pow(na, m);

  auto g = [&](double y) { return std::abs(level_symbol(ds, m, Side::a, y)); };
  const double tau = out.threshold;

  struct Found {
    std::vector<RealInterval> hits;
    std::vector<RealInterval> boundary;
  };
  auto visit = [&](auto&& self, const Cell& c, Found& found) -> void {
    const double w = c.hi - c.lo;
    const double lower = 0.5 * (c.g_lo + c.g_hi - lipschitz * w);
    const double upper = std::min(ceiling, 0.5 * (c.g_lo + c.g_hi + lipschitz * w));
    if (lower > tau) return;
    if (upper <= tau) {
      append_merged(found.hits, c.lo, c.hi);
      return;
    }
    if (w <= out.resolution) {
      if (c.g_lo <= tau && c.g_hi <= tau)
        append_merged(found.hits, c.lo, c.hi);
      else
        append_merged(found.boundary, c.lo, c.hi);
      return;
    }
    const double mid = 0.5 * (c.lo + c.hi);
    const double g_mid = g(mid);
    self(self, Cell{c.lo, mid, c.g_lo, g_mid}, found);
    self(self, Cell{mid, c.hi, g_mid, c.g_hi}, found);
  };

  const auto cells = static_cast<std::size_t>(std::ceil(span / options.step));
  const double h = span / static_cast<double>(cells);
  auto edge = [&](std::size_t i) { return i == cells ? span : h * static_cast<double>(i); };
  // Fixed-size blocks of coarse cells, concatenated in order afterwards.
  constexpr std::size_t block = 256;
  const std::size_t blocks = (cells + block - 1) / block;
  auto parts = parallel_map(blocks, [&](std::size_t bi) {
    Found found;
    const std::size_t end = std::min(cells, (bi + 1) * block);
    double g_prev = g(edge(bi * block));
    for (std::size_t i = bi * block; i < end; ++i) {
      const double g_next = g(edge(i + 1));
      visit(visit, Cell{edge(i), edge(i + 1), g_prev, g_next}, found);
      g_prev = g_next;
    }
    return found;
  });
  std::vector<RealInterval> hit_cells, boundary_cells;
  for (const auto& part : parts) {
    for (const auto& iv : part.hits) append_merged(hit_cells, iv.lo, iv.hi);
    for (const auto& iv : part.boundary) append_merged(boundary_cells, iv.lo, iv.hi);
  }
  out.hits = std::move(hit_cells);
  out.boundary = std::move(boundary_cells);
  return out;
}

double default_epsilon(std::int64_t q, std::int64_t r) {
  return static_cast<double>(r + q) / static_cast<double>(1 + r + q);
}

namespace {

// Smallest L such that the sorted intervals split into at most `groups`
// consecutive runs, each spanning at most L.
bool fits(const std::vector<RealInterval>& items, std::size_t groups, double limit) {
  std::size_t used = 0;
  std::size_t i = 0;
  while (i < items.size()) {
    if (++used > groups) return false;
    const double start = items[i].lo;
    if (items[i].hi - start > limit) return false;
    while (i < items.size() && items[i].hi - start <= limit) ++i;
  }
  return true;
}

std::vector<RealInterval> group(const std::vector<RealInterval>& items, double limit) {
  std::vector<RealInterval> out;
  std::size_t i = 0;
  while (i < items.size()) {
    RealInterval comp{items[i].lo, items[i].hi};
    ++i;
    while (i < items.size() && items[i].hi - comp.lo <= limit) comp.hi = std::max(comp.hi, items[i++].hi);
    out.push_back(comp);
  }
  return out;
}

ZeroSetReport classify(const ZeroScan& scan, const DigitSystem& ds, int m, double delta,
                       double epsilon, std::int64_t q, std::int64_t r, std::int64_t modulus) {
  ZeroSetReport rep;
  rep.m = m;
  rep.delta = delta;
  rep.epsilon = epsilon;
  rep.q = q;
  rep.r = r;
  rep.modulus = modulus;
  rep.resolution = scan.resolution;
  rep.hits = scan.hits;
  rep.boundary = scan.boundary;

  const double spacing = static_cast<double>(r) / static_cast<double>(modulus);
  const double lattice_scale = std::pow(delta, 1.0 - epsilon);
  const double span = std::pow(static_cast<double>(ds.base()), m);
  const double root_scale = span * std::pow(delta, epsilon / static_cast<double>(r + q));
  const double tol = 1e-9 * spacing;

  std::vector<RealInterval> candidates;
  double max_extent = 0.0;
  for (const auto& iv : merge_sorted(scan.hits, scan.boundary)) {
    const auto k_lo = static_cast<long long>(std::ceil(iv.lo / spacing - 1e-9));
    const auto k_hi = static_cast<long long>(std::floor(iv.hi / spacing + 1e-9));
    if (k_hi == k_lo) {
      const double point = spacing * static_cast<double>(k_lo);
      const double extent = std::max(point - iv.lo, iv.hi - point);
      if (extent < 0.5 * spacing - tol) {
        rep.lattice_part.push_back(iv);
        max_extent = std::max(max_extent, extent);
        continue;
      }
    }
    candidates.push_back(iv);
  }
  rep.c = max_extent / lattice_scale;

  const auto groups = static_cast<std::size_t>(r + q);
  const double limit = spacing - tol;
  if (fits(candidates, groups, limit)) {
    // Tighten the component length by bisection on the limit.
    double lo = 0.0, hi = limit;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      (fits(candidates, groups, mid) ? hi : lo) = mid;
    }
    rep.root_part = group(candidates, hi);
    double longest = 0.0;
    for (const auto& comp : rep.root_part) longest = std::max(longest, comp.length());
    rep.C = longest / root_scale;
    rep.pass = true;
  } else {
    auto comps = group(candidates, limit);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (i < groups && comps[i].length() <= limit)
        rep.root_part.push_back(comps[i]);
      else
        rep.uncovered.push_back(comps[i]);
    }
    double longest = 0.0;
    for (const auto& comp : rep.root_part) longest = std::max(longest, comp.length());
    rep.C = longest / root_scale;
    rep.pass = false;
  }
  return rep;
}

}  // namespace

ZeroSetReport analyze_zero_set(const DigitSystem& ds, int m, double delta, double epsilon,
                               std::int64_t q, std::int64_t r, std::int64_t modulus,
                               const ScanOptions& options) {
  if (q < 0 || r < 1) throw DomainError("direction needs q >= 0 and r >= 1");
  if (modulus < 1) throw DomainError("lattice modulus must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
  const ZeroScan scan = zero_set_scan(ds, m, delta, options);

  std::vector<std::int64_t> candidates{modulus};
  for (std::int64_t d = modulus - 1; d >= 1; --d)
    if (modulus % d == 0) candidates.push_back(d);
  candidates.push_back(2 * modulus);
  candidates.push_back(3 * modulus);

  std::vector<ModulusAttempt> attempts;
  std::optional<ZeroSetReport> first;
  for (auto mod : candidates) {
    auto rep = classify(scan, ds, m, delta, epsilon, q, r, mod);
    attempts.push_back({mod, rep.pass});
    if (rep.pass) {
      rep.attempts = attempts;
      return rep;
    }
    if (!first) first = std::move(rep);
  }
  first->attempts = attempts;
  return *first;
}

ZeroSetReport zero_set_structure_check(const DigitSystem& ds, int m, double delta, double epsilon,
                                       std::int64_t q, std::int64_t r, std::int64_t modulus,
                                       const ScanOptions& options) {
  auto rep = analyze_zero_set(ds, m, delta, epsilon, q, r, modulus, options);
  if (!rep.pass) throw NoCoverError(std::move(rep));
  return rep;
}

}  // namespace favard
