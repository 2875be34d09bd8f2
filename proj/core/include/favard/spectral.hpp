#pragma once

#include "favard/digit_system.hpp"
#include "favard/error.hpp"
#include "favard/level_set.hpp"
#include "favard/projection.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace favard {

using Complex = std::complex<double>;

/// Sample spacing must stay below nyquist_guard / (1 + t): the transforms
/// are trigonometric polynomials in xi with frequencies in [0, 1 + t).
inline constexpr double nyquist_guard = 0.1;
inline constexpr double default_step_factor = 0.02;

double default_spectral_step(double t);
/// Throws GridTooCoarse when step exceeds the guard for slope t.
void check_spectral_step(double step, double t);

/// sum over digits of z^d; z must lie on the unit circle (DomainError otherwise).
Complex digit_symbol(std::span<const std::int64_t> digits, Complex z);

/// A^n(e^{-2 pi i y}) for the real level set A^n = sum_{j<=n} K^-j A, as the
/// product of digit symbols at e^{-2 pi i K^-j y}.
Complex level_symbol(const DigitSystem& ds, int n, Side side, double y);

/// Fourier transform of nu^n[t]: K^-n A^n(e^{-2 pi i xi}) B^n(e^{-2 pi i t xi}).
Complex nu_hat(const DigitSystem& ds, int n, double t, double xi);

/// Transform of the indicator of [0, 1]; chi(0) = 1.
Complex chi(double xi);

/// Lower bound of |chi(K^-N xi)| over |xi| <= K^m (zero when m >= N).
double chi_lower_bound(std::int64_t base, int big_n, int m);

Complex f_hat(const DigitSystem& ds, int n, double t, double xi);

enum class Transform { nu_hat, f_hat };

struct SpectralSample {
  double xi = 0.0;
  Complex value;
};

struct SpectralGrid {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
  std::vector<SpectralSample> samples;
};

SpectralGrid spectrum(const DigitSystem& ds, int n, double t, double lo, double hi,
                      std::optional<double> step = {}, Transform which = Transform::nu_hat);

struct IntegralReport {
  double I = 0.0;   // integral of |nu_hat^N|^2 over [K^n, K^(m+n)]
  double I1 = 0.0;  // same for |nu_hat^n|^2
  std::optional<double> I2;          // I1 restricted to Z_delta (single slope)
  std::optional<double> z_fraction;  // share of samples inside Z_delta
  double step = 0.0;
  std::size_t samples = 0;
};

/// Z_delta = {xi : |nu_hat_n^(m+n)(xi)| <= K^(-2m) delta^2}; I2 is reported
/// only when delta is supplied.
IntegralReport integral_I(const DigitSystem& ds, int big_n, int n, int m, double t,
                          std::optional<double> step = {}, std::optional<double> delta = {});

/// Mean of |A^n(e^{-2 pi i K^n y})|^2 over [offset, offset + 1], by the
/// periodic trapezoid rule with `samples` points.
double unit_period_energy(const DigitSystem& ds, int n, Side side, double offset,
                          std::size_t samples);

struct PlancherelCheck {
  double window = 0.0;  // numeric integral of |F_hat|^2 over |xi| <= bound
  double tail = 0.0;    // closed-form integral over |xi| > bound
  double total = 0.0;
  Rational exact;       // squared L2 norm of the counting function
  double error = 0.0;   // |total - exact|
};

PlancherelCheck plancherel_check(const DigitSystem& ds, int n, const Slope& slope, double bound,
                                 std::optional<double> step = {}, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Approximate zero sets

struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  friend bool operator==(const RealInterval&, const RealInterval&) = default;
};

struct ScanOptions {
  double step = 0.02;                // initial grid spacing in y
  double resolution_factor = 1e-6;   // finest cell = factor * K^m
};

struct ZeroScan {
  double threshold = 0.0;  // delta / |B|^m
  double resolution = 0.0;
  std::vector<RealInterval> hits;      // cells where the bound holds at both ends
  std::vector<RealInterval> boundary;  // unresolved cells at scan resolution
};

/// Intervals of [0, K^m] where |A^m(e^{-2 pi i y})| |B|^m <= delta, by
/// Lipschitz branch-and-bound refinement.
ZeroScan zero_set_scan(const DigitSystem& ds, int m, double delta, const ScanOptions& options = {});

struct ModulusAttempt {
  std::int64_t modulus = 0;
  bool pass = false;
  friend bool operator==(const ModulusAttempt&, const ModulusAttempt&) = default;
};

struct ZeroSetReport {
  int m = 0;
  double delta = 0.0;
  double epsilon = 0.0;
  std::int64_t q = 0;
  std::int64_t r = 1;
  std::int64_t modulus = 1;  // M used for the lattice r M^-1 Z
  std::vector<ModulusAttempt> attempts;
  double resolution = 0.0;
  std::vector<RealInterval> hits;
  std::vector<RealInterval> boundary;
  std::vector<RealInterval> lattice_part;  // hits around a single lattice point
  std::vector<RealInterval> root_part;     // at most r + q covering components
  std::vector<RealInterval> uncovered;
  double c = 0.0;  // lattice half-width = c delta^(1 - eps)
  double C = 0.0;  // component length = C K^m delta^(eps / (r + q))
  bool pass = false;

  friend bool operator==(const ZeroSetReport&, const ZeroSetReport&) = default;
};

class NoCoverError : public Error {
public:
  explicit NoCoverError(ZeroSetReport report)
      : Error(ErrorKind::numeric, "NoCover", "approximate zero set is not covered at scan resolution"),
        report_(std::move(report)) {}
  const ZeroSetReport& report() const noexcept { return report_; }

private:
  ZeroSetReport report_;
};

/// epsilon defaults to (r + q) / (1 + r + q).
double default_epsilon(std::int64_t q, std::int64_t r);

/// Classifies the zero set against lattice neighbourhoods r M^-1 Z + (-w, w)
/// and at most r + q short components. Tries M first, then its proper
/// divisors, then 2M and 3M; reports the first modulus that passes (or M).
ZeroSetReport analyze_zero_set(const DigitSystem& ds, int m, double delta, double epsilon,
                               std::int64_t q, std::int64_t r, std::int64_t modulus,
                               const ScanOptions& options = {});

/// As analyze_zero_set, but throws NoCoverError when the cover fails.
ZeroSetReport zero_set_structure_check(const DigitSystem& ds, int m, double delta, double epsilon,
                                       std::int64_t q, std::int64_t r, std::int64_t modulus,
                                       const ScanOptions& options = {});

}  // namespace favard
