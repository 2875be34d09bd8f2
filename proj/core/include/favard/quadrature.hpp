#pragma once

#include "favard/digit_system.hpp"
#include "favard/level_set.hpp"

#include <optional>
#include <vector>

namespace favard {

enum class NodePlacement { uniform_theta, uniform_t, farey };

struct QuadratureSpec {
  int nodes = 256;  // per quarter range, finest refinement
  NodePlacement placement = NodePlacement::uniform_theta;
  int refinements = 3;   // finest plus successive halvings
  int farey_order = 32;  // finest order for NodePlacement::farey

  void validate() const;
};

struct Refinement {
  int nodes = 0;  // per quarter
  double value = 0.0;
  std::optional<double> delta;  // |value - previous coarser value|
};

struct FavardEstimate {
  int level = 0;
  std::vector<Refinement> refinements;  // coarse to fine
  double value = 0.0;                   // finest refinement
  double error_bound = 0.0;             // last refinement delta
};

/// Fav(E_n) = integral over [0, pi) of |pi_theta(E_n)|, computed as the
/// quarter [0, pi/2] for (K, A, B) plus the same quarter for the mirror
/// system (K, A', B).
FavardEstimate favard_length(const DigitSystem& ds, int n, const QuadratureSpec& spec = {},
                             const Limits& limits = {});

/// Direct midpoint rule over [0, pi) with signed projections; used to
/// cross-check the two-quarter decomposition.
double favard_length_direct(const DigitSystem& ds, int n, int nodes, const Limits& limits = {});

struct DecayRow {
  FavardEstimate estimate;
  double n_times_favard = 0.0;
  double inverse_n = 0.0;
  double inverse_n_log_n = 0.0;
  std::optional<double> inverse_n_pow;  // n^(-1/p_min)
};

struct DecayReport {
  std::vector<DecayRow> rows;
  double fitted_exponent = 0.0;  // Fav ~ C n^(-e)
  double fitted_constant = 0.0;
  std::optional<double> p_min;
  bool lower_bound_pass = false;  // inf n * Fav > 0 over the range
  bool nonincreasing = false;
  double band_ratio = 0.0;  // max / min of n * Fav
};

std::vector<DecayRow> decay_rows(const DigitSystem& ds, int n_min, int n_max,
                                 const QuadratureSpec& spec, std::optional<double> p_min = {},
                                 const Limits& limits = {});

/// Rows for n = 1..n_max plus a least-squares fit of log Fav against log n.
DecayReport decay_experiment(const DigitSystem& ds, int n_max, const QuadratureSpec& spec = {},
                             std::optional<double> p_min = {}, const Limits& limits = {});

}  // namespace favard
