#include "favard/tiling.hpp"

#include "favard/error.hpp"
#include "favard/projection.hpp"

#include <algorithm>
#include <numeric>

namespace favard {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::generating(const std::vector<std::int64_t>& elements) {
  std::vector<BigInt> c;
  for (auto e : elements) {
    if (e < 0) throw DomainError("generating polynomial needs nonnegative exponents");
    if (static_cast<std::size_t>(e) >= c.size()) c.resize(static_cast<std::size_t>(e) + 1);
    ++c[static_cast<std::size_t>(e)];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::all_ones(std::int64_t m) {
  if (m < 1) throw DomainError("modulus must be positive");
  return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(m), BigInt(1)));
}

IntPolynomial poly_mul_mod(const IntPolynomial& p, const IntPolynomial& q, std::int64_t modulus) {
  if (modulus < 1) throw DomainError("modulus must be positive");
  const auto m = static_cast<std::size_t>(modulus);
  std::vector<BigInt> out(m);
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[(i + j) % m] += a[i] * b[j];
  }
  return IntPolynomial(std::move(out));
}

std::vector<std::int64_t> normalize_set(std::vector<std::int64_t> set) {
  std::sort(set.begin(), set.end());
  if (!set.empty()) {
    const auto lo = set.front();
    for (auto& v : set) v -= lo;
  }
  return set;
}

bool tiling_check(const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& c,
                  std::int64_t modulus) {
  if (modulus < 1) throw DomainError("modulus must be positive");
  if (static_cast<std::int64_t>(d.size() * c.size()) != modulus)
    throw SizeError("|D| |C| = " + std::to_string(d.size() * c.size()) + " differs from M = " +
                    std::to_string(modulus));
  const auto dp = IntPolynomial::generating(normalize_set(d));
  const auto cp = IntPolynomial::generating(normalize_set(c));
  return poly_mul_mod(dp, cp, modulus) == IntPolynomial::all_ones(modulus);
}

namespace {

struct Backtracker {
  const std::vector<std::int64_t>& d;
  std::int64_t m;
  std::vector<char> covered;
  std::vector<std::int64_t> chosen;

  bool place(std::int64_t shift, bool value) {
    for (auto e : d) {
      auto& cell = covered[static_cast<std::size_t>((e + shift) % m)];
      if (value && cell) return false;
    }
    for (auto e : d) covered[static_cast<std::size_t>((e + shift) % m)] = value;
    return true;
  }

  bool solve(std::int64_t from) {
    std::int64_t hole = from;
    while (hole < m && covered[static_cast<std::size_t>(hole)]) ++hole;
    if (hole == m) return true;
    for (auto e : d) {
      const std::int64_t shift = ((hole - e) % m + m) % m;
      if (!place(shift, true)) continue;
      chosen.push_back(shift);
      if (solve(hole + 1)) return true;
      chosen.pop_back();
      place(shift, false);
    }
    return false;
  }
};

}  // namespace

std::optional<TilingCertificate> complement_search(const std::vector<std::int64_t>& d_in,
                                                   std::int64_t max_modulus) {
  if (d_in.empty()) throw DomainError("complement search needs a nonempty set");
  const auto d = normalize_set(d_in);
  if (std::adjacent_find(d.begin(), d.end()) != d.end()) return std::nullopt;
  const auto size = static_cast<std::int64_t>(d.size());
  const std::int64_t first = (d.back() / size + 1) * size;
  for (std::int64_t m = first; m <= max_modulus; m += size) {
    Backtracker bt{d, m, std::vector<char>(static_cast<std::size_t>(m), 0), {}};
    if (!bt.solve(0)) continue;
    TilingCertificate cert{d, bt.chosen, m, false};
    std::sort(cert.c.begin(), cert.c.end());
    cert.verified = tiling_check(cert.d, cert.c, m);
    return cert;
  }
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_positive: return "certified-positive";
    case Verdict::empirically_positive: return "empirically-positive";
    case Verdict::collision: return "collision";
    case Verdict::shrinking: return "shrinking";
  }
  return "unknown";
}

Verdict parse_verdict(const std::string& text) {
  for (auto v : {Verdict::certified_positive, Verdict::empirically_positive, Verdict::collision,
                 Verdict::shrinking})
    if (to_string(v) == text) return v;
  throw DomainError("unknown verdict '" + text + "'");
}

ExponentReport exponent_report(const DigitSystem& ds, std::int64_t q, std::int64_t r) {
  if (q < 0 || r < 1 || std::gcd(q, r) != 1)
    throw DomainError("direction q/r must be in lowest terms with r >= 1");
  ExponentReport out;
  const auto& gamma = ds.exponents().gamma;
  const double weight = static_cast<double>(1 + r + q);
  out.gamma = gamma.value();
  out.sigma = weight / out.gamma;
  out.p_inf = 6.0 + 4.0 * out.sigma;
  if (auto exact = gamma.exact()) {
    out.gamma_exact = *exact;
    out.sigma_exact = Rational(BigInt(1 + r + q)) / *exact;
    out.p_inf_exact = Rational(6) + 4 * *out.sigma_exact;
  }
  return out;
}

DirectionAnalysis direction_analysis(const DigitSystem& ds, std::int64_t q, std::int64_t r,
                                     int n_probe, std::int64_t max_modulus, const Limits& limits) {
  if (n_probe < 1) throw DomainError("probe depth must be at least 1");
  DirectionAnalysis out;
  out.exponents = exponent_report(ds, q, r);
  out.q = q;
  out.r = r;
  for (auto a : ds.a_digits())
    for (auto b : ds.b_digits()) out.d.push_back(r * a + q * b);
  std::sort(out.d.begin(), out.d.end());
  out.distinct = std::adjacent_find(out.d.begin(), out.d.end()) == out.d.end();

  const auto slope = Slope::rational(q, r);
  for (int n = 1; n <= n_probe; ++n) {
    auto pts = projected_points(ds, n, slope, limits);
    if (!out.collision_level &&
        std::adjacent_find(pts.points.begin(), pts.points.end()) != pts.points.end())
      out.collision_level = n;
    out.probe_measures.push_back(
        IntervalUnion::from_lattice(std::move(pts.points), BigInt(q + r), pts.denominator).measure());
  }

  if (out.distinct) {
    out.certificate = complement_search(out.d, max_modulus);
    if (out.certificate)
      out.lattice_modulus = out.certificate->modulus / static_cast<std::int64_t>(out.d.size());
  }

  if (out.collision_level) {
    out.verdict = Verdict::collision;
  } else if (out.certificate && out.certificate->verified) {
    out.verdict = Verdict::certified_positive;
  } else if (out.probe_measures.size() >= 2 &&
             out.probe_measures.back() == out.probe_measures[out.probe_measures.size() - 2]) {
    out.verdict = Verdict::empirically_positive;
  } else {
    out.verdict = Verdict::shrinking;
  }
  return out;
}

}  // namespace favard
