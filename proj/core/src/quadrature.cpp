#include "favard/quadrature.hpp"

#include "favard/error.hpp"
#include "favard/parallel.hpp"
#include "favard/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace favard {

void QuadratureSpec::validate() const {
  if (refinements < 1) throw ConfigError("at least one refinement level is required");
  if (placement == NodePlacement::farey) {
    if (farey_order < 1) throw ConfigError("Farey order must be at least 1");
    if ((farey_order >> (refinements - 1)) < 1)
      throw ConfigError("Farey order too small for the requested refinements");
  } else {
    if (nodes < 2) throw ConfigError("node count must be at least 2");
    if ((nodes >> (refinements - 1)) < 2)
      throw ConfigError("node count too small for the requested refinements");
  }
}

namespace {

constexpr double half_pi = std::numbers::pi / 2;

struct Node {
  double theta;
  double weight;
};

// Midpoint rule nodes on [0, pi/2] for the continuous placements.
std::vector<Node> continuous_nodes(NodePlacement placement, int count) {
  std::vector<Node> nodes;
  if (placement == NodePlacement::uniform_theta) {
    const double h = half_pi / count;
    for (int k = 0; k < count; ++k) nodes.push_back({(k + 0.5) * h, h});
    return nodes;
  }
  // uniform in t = tan(theta) on [0, pi/4], uniform in cot(theta) on [pi/4, pi/2]
  const int half = std::max(1, count / 2);
  const double h = 1.0 / half;
  for (int k = 0; k < half; ++k) {
    const double t = (k + 0.5) * h;
    nodes.push_back({std::atan(t), h / (1.0 + t * t)});
  }
  for (int k = half; k-- > 0;) {
    const double u = (k + 0.5) * h;
    nodes.push_back({half_pi - std::atan(u), h / (1.0 + u * u)});
  }
  return nodes;
}

struct Direction {
  std::int64_t q;
  std::int64_t r;
  double theta;
};

// Farey slopes in [0, 1] and their reciprocals: rational directions covering
// [0, pi/2], ascending in theta.
std::vector<Direction> farey_directions(int order) {
  std::vector<Direction> dirs;
  for (const auto& s : farey_sequence(order))
    dirs.push_back({s.q(), s.r(), std::atan2(static_cast<double>(s.q()), static_cast<double>(s.r()))});
  const auto low = dirs.size();
  for (std::size_t i = low - 1; i-- > 0;) {
    const auto& d = dirs[i];
    dirs.push_back({d.r, d.q, std::atan2(static_cast<double>(d.r), static_cast<double>(d.q))});
  }
  return dirs;
}

double quarter_continuous(const ProjectionEvaluator& eval, const std::vector<Node>& nodes) {
  auto vals = parallel_map(nodes.size(), [&](std::size_t i) {
    return nodes[i].weight * eval.length(nodes[i].theta);
  });
  return pairwise_sum(vals);
}

double quarter_farey(const DigitSystem& ds, int n, int order, const Limits& limits) {
  const auto dirs = farey_directions(order);
  const double scale = std::pow(static_cast<double>(ds.base()), -n);
  auto vals = parallel_map(dirs.size(), [&](std::size_t i) {
    const auto& d = dirs[i];
    const double units = to_double(projection_length_units(ds, n, d.q, d.r, limits));
    return units * scale / std::hypot(static_cast<double>(d.q), static_cast<double>(d.r));
  });
  std::vector<double> pieces;
  pieces.reserve(dirs.size());
  for (std::size_t i = 0; i + 1 < dirs.size(); ++i)
    pieces.push_back(0.5 * (dirs[i + 1].theta - dirs[i].theta) * (vals[i] + vals[i + 1]));
  return pairwise_sum(pieces);
}

}  // namespace

FavardEstimate favard_length(const DigitSystem& ds, int n, const QuadratureSpec& spec,
                             const Limits& limits) {
  spec.validate();
  const DigitSystem mirror = ds.reflected_x();
  FavardEstimate out;
  out.level = n;

  std::optional<ProjectionEvaluator> direct, mirrored;
  if (spec.placement != NodePlacement::farey) {
    direct.emplace(ds, n, limits);
    mirrored.emplace(mirror, n, limits);
  }
  for (int j = spec.refinements - 1; j >= 0; --j) {
    Refinement ref;
    if (spec.placement == NodePlacement::farey) {
      const int order = spec.farey_order >> j;
      ref.nodes = static_cast<int>(farey_directions(order).size());
      ref.value = quarter_farey(ds, n, order, limits) + quarter_farey(mirror, n, order, limits);
    } else {
      const auto nodes = continuous_nodes(spec.placement, spec.nodes >> j);
      ref.nodes = static_cast<int>(nodes.size());
      ref.value = quarter_continuous(*direct, nodes) + quarter_continuous(*mirrored, nodes);
    }
    if (!out.refinements.empty()) ref.delta = std::abs(ref.value - out.refinements.back().value);
    out.refinements.push_back(ref);
  }
  out.value = out.refinements.back().value;
  out.error_bound = out.refinements.back().delta.value_or(0.0);
  return out;
}

double favard_length_direct(const DigitSystem& ds, int n, int nodes, const Limits& limits) {
  if (nodes < 2) throw ConfigError("node count must be at least 2");
  checked_count(static_cast<std::size_t>(ds.base()), n, limits);
  const auto a = level_values(ds, n, Side::a, limits);
  const auto b = level_values(ds, n, Side::b, limits);
  const double side = std::pow(static_cast<double>(ds.base()), -n);
  const double h = std::numbers::pi / nodes;
  auto vals = parallel_map(static_cast<std::size_t>(nodes), [&](std::size_t k) {
    const double theta = (static_cast<double>(k) + 0.5) * h;
    const double c = std::cos(theta), s = std::sin(theta);
    // The image of a square of side h is [p + min(0, c) h, p + max(0, c) h + s h].
    std::vector<double> starts;
    starts.reserve(a.size() * b.size());
    for (double x : a)
      for (double y : b) starts.push_back(x * c + y * s + std::min(0.0, c) * side);
    return h * float_union_length(starts, side * (std::abs(c) + s));
  });
  return pairwise_sum(vals);
}

std::vector<DecayRow> decay_rows(const DigitSystem& ds, int n_min, int n_max,
                                 const QuadratureSpec& spec, std::optional<double> p_min,
                                 const Limits& limits) {
  if (n_min < 0 || n_max < n_min) throw ConfigError("invalid level range");
  std::vector<DecayRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    DecayRow row;
    row.estimate = favard_length(ds, n, spec, limits);
    row.n_times_favard = n * row.estimate.value;
    if (n >= 1) {
      row.inverse_n = 1.0 / n;
      row.inverse_n_log_n = n > 1 ? std::log(static_cast<double>(n)) / n : 0.0;
      if (p_min) row.inverse_n_pow = std::pow(static_cast<double>(n), -1.0 / *p_min);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

DecayReport decay_experiment(const DigitSystem& ds, int n_max, const QuadratureSpec& spec,
                             std::optional<double> p_min, const Limits& limits) {
  if (n_max < 2) throw ConfigError("decay experiment needs n_max >= 2 to fit a slope");
  DecayReport report;
  report.p_min = p_min;
  report.rows = decay_rows(ds, 1, n_max, spec, p_min, limits);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double count = static_cast<double>(report.rows.size());
  double lo = INFINITY, hi = 0.0;
  report.nonincreasing = true;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    const double x = std::log(static_cast<double>(row.estimate.level));
    const double y = std::log(row.estimate.value);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    lo = std::min(lo, row.n_times_favard);
    hi = std::max(hi, row.n_times_favard);
    if (i > 0 && row.estimate.value > report.rows[i - 1].estimate.value) report.nonincreasing = false;
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  report.fitted_exponent = -slope;
  report.fitted_constant = std::exp((sy - slope * sx) / count);
  report.lower_bound_pass = lo > 0.0;
  report.band_ratio = lo > 0.0 ? hi / lo : INFINITY;
  return report;
}

}  // namespace favard
