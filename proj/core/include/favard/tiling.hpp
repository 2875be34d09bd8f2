#pragma once

#include "favard/digit_system.hpp"
#include "favard/level_set.hpp"
#include "favard/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace favard {

/// Integer polynomial, coefficient i multiplies x^i; trailing zeros trimmed.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  /// Generating polynomial sum x^d of a multiset of nonnegative integers.
  static IntPolynomial generating(const std::vector<std::int64_t>& elements);
  /// 1 + x + ... + x^(m-1).
  static IntPolynomial all_ones(std::int64_t m);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
  std::vector<BigInt> coeffs_;
};

/// p * q reduced modulo x^M - 1 (cyclic convolution).
IntPolynomial poly_mul_mod(const IntPolynomial& p, const IntPolynomial& q, std::int64_t modulus);

/// Shifts so the minimum is 0 and sorts; keeps repeats.
std::vector<std::int64_t> normalize_set(std::vector<std::int64_t> set);

/// D (+) C = Z_M, checked as D(x) C(x) = 1 + x + ... + x^(M-1) mod (x^M - 1).
/// Throws SizeError when |D| |C| != M.
bool tiling_check(const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& c,
                  std::int64_t modulus);

struct TilingCertificate {
  std::vector<std::int64_t> d;
  std::vector<std::int64_t> c;
  std::int64_t modulus = 0;
  bool verified = false;

  friend bool operator==(const TilingCertificate&, const TilingCertificate&) = default;
};

/// Smallest M <= max_modulus, a multiple of |D| exceeding max D, admitting
/// a complement C with D (+) C = Z_M; found by covering the first uncovered
/// residue with a translate of D and backtracking.
std::optional<TilingCertificate> complement_search(const std::vector<std::int64_t>& d,
                                                   std::int64_t max_modulus = 256);

enum class Verdict { certified_positive, empirically_positive, collision, shrinking };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& text);

struct ExponentReport {
  double gamma = 0.0;
  double sigma = 0.0;
  double p_inf = 0.0;
  std::optional<Rational> gamma_exact;
  std::optional<Rational> sigma_exact;
  std::optional<Rational> p_inf_exact;

  friend bool operator==(const ExponentReport&, const ExponentReport&) = default;
};

/// gamma = min(log|A|, log|B|) / log K, sigma = (1 + r + q) / gamma,
/// p_inf = 6 + 4 sigma; any p > p_inf is admissible.
ExponentReport exponent_report(const DigitSystem& ds, std::int64_t q, std::int64_t r);

struct DirectionAnalysis {
  std::int64_t q = 0;
  std::int64_t r = 1;
  std::vector<std::int64_t> d;  // r A + q B with repeats, ascending
  bool distinct = false;        // |D| = K
  std::optional<int> collision_level;  // first probe level with coincident points
  std::optional<TilingCertificate> certificate;
  std::optional<std::int64_t> lattice_modulus;  // certificate modulus / |D|
  std::vector<Rational> probe_measures;         // rational parts, n = 1..n_probe
  Verdict verdict = Verdict::shrinking;
  ExponentReport exponents;

  friend bool operator==(const DirectionAnalysis&, const DirectionAnalysis&) = default;
};

DirectionAnalysis direction_analysis(const DigitSystem& ds, std::int64_t q, std::int64_t r,
                                     int n_probe = 6, std::int64_t max_modulus = 256,
                                     const Limits& limits = {});

}  // namespace favard
