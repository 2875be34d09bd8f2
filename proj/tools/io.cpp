#include "io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace favard {

std::string format_double(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_complex(Complex z) {
  return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
}

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(to_json(*v)) : Json(nullptr);
}

Json intervals_json(const std::vector<RealInterval>& v) {
  Json arr = Json::array();
  for (const auto& iv : v) arr.push_back({iv.lo, iv.hi});
  return arr;
}

std::vector<RealInterval> intervals_from(const Json& j) {
  std::vector<RealInterval> out;
  for (const auto& e : j) out.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
  return out;
}

std::optional<Rational> optional_rational(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return rational_from_json(j);
}

}  // namespace

Json to_json(const TilingCertificate& c) {
  return {{"D", c.d}, {"C", c.c}, {"M", c.modulus}, {"verified", c.verified}};
}

TilingCertificate certificate_from_json(const Json& j) {
  return {j.at("D").get<std::vector<std::int64_t>>(), j.at("C").get<std::vector<std::int64_t>>(),
          j.at("M").get<std::int64_t>(), j.at("verified").get<bool>()};
}

Json to_json(const ExponentReport& e) {
  return {{"gamma", e.gamma},
          {"sigma", e.sigma},
          {"p_inf", e.p_inf},
          {"gamma_exact", optional_json(e.gamma_exact)},
          {"sigma_exact", optional_json(e.sigma_exact)},
          {"p_inf_exact", optional_json(e.p_inf_exact)}};
}

ExponentReport exponents_from_json(const Json& j) {
  ExponentReport e;
  e.gamma = j.at("gamma").get<double>();
  e.sigma = j.at("sigma").get<double>();
  e.p_inf = j.at("p_inf").get<double>();
  e.gamma_exact = optional_rational(j.at("gamma_exact"));
  e.sigma_exact = optional_rational(j.at("sigma_exact"));
  e.p_inf_exact = optional_rational(j.at("p_inf_exact"));
  return e;
}

Json to_json(const DirectionAnalysis& a) {
  Json measures = Json::array();
  for (const auto& m : a.probe_measures) measures.push_back(to_json(m));
  return {{"q", a.q},
          {"r", a.r},
          {"D", a.d},
          {"distinct", a.distinct},
          {"collision_level", a.collision_level ? Json(*a.collision_level) : Json(nullptr)},
          {"certificate", a.certificate ? to_json(*a.certificate) : Json(nullptr)},
          {"lattice_modulus", a.lattice_modulus ? Json(*a.lattice_modulus) : Json(nullptr)},
          {"probe_measures", measures},
          {"verdict", to_string(a.verdict)},
          {"exponents", to_json(a.exponents)}};
}

DirectionAnalysis direction_from_json(const Json& j) {
  DirectionAnalysis a;
  a.q = j.at("q").get<std::int64_t>();
  a.r = j.at("r").get<std::int64_t>();
  a.d = j.at("D").get<std::vector<std::int64_t>>();
  a.distinct = j.at("distinct").get<bool>();
  if (!j.at("collision_level").is_null()) a.collision_level = j.at("collision_level").get<int>();
  if (!j.at("certificate").is_null()) a.certificate = certificate_from_json(j.at("certificate"));
  if (!j.at("lattice_modulus").is_null())
    a.lattice_modulus = j.at("lattice_modulus").get<std::int64_t>();
  for (const auto& m : j.at("probe_measures")) a.probe_measures.push_back(rational_from_json(m));
  a.verdict = parse_verdict(j.at("verdict").get<std::string>());
  a.exponents = exponents_from_json(j.at("exponents"));
  return a;
}

Json to_json(const ZeroSetReport& r) {
  Json attempts = Json::array();
  for (const auto& a : r.attempts) attempts.push_back({{"M", a.modulus}, {"pass", a.pass}});
  return {{"m", r.m},
          {"delta", r.delta},
          {"epsilon", r.epsilon},
          {"q", r.q},
          {"r", r.r},
          {"M", r.modulus},
          {"attempts", attempts},
          {"resolution", r.resolution},
          {"pass", r.pass},
          {"c", r.c},
          {"C", r.C},
          {"hits", intervals_json(r.hits)},
          {"boundary", intervals_json(r.boundary)},
          {"lattice_part", intervals_json(r.lattice_part)},
          {"root_part", intervals_json(r.root_part)},
          {"uncovered", intervals_json(r.uncovered)}};
}

ZeroSetReport zero_set_from_json(const Json& j) {
  ZeroSetReport r;
  r.m = j.at("m").get<int>();
  r.delta = j.at("delta").get<double>();
  r.epsilon = j.at("epsilon").get<double>();
  r.q = j.at("q").get<std::int64_t>();
  r.r = j.at("r").get<std::int64_t>();
  r.modulus = j.at("M").get<std::int64_t>();
  for (const auto& a : j.at("attempts"))
    r.attempts.push_back({a.at("M").get<std::int64_t>(), a.at("pass").get<bool>()});
  r.resolution = j.at("resolution").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.c = j.at("c").get<double>();
  r.C = j.at("C").get<double>();
  r.hits = intervals_from(j.at("hits"));
  r.boundary = intervals_from(j.at("boundary"));
  r.lattice_part = intervals_from(j.at("lattice_part"));
  r.root_part = intervals_from(j.at("root_part"));
  r.uncovered = intervals_from(j.at("uncovered"));
  return r;
}

Json to_json(const IntegralReport& r) {
  return {{"I", r.I},
          {"I1", r.I1},
          {"I2", r.I2 ? Json(*r.I2) : Json(nullptr)},
          {"z_fraction", r.z_fraction ? Json(*r.z_fraction) : Json(nullptr)},
          {"step", r.step},
          {"samples", r.samples}};
}

Json to_json(const XLambdaResult& r) {
  Json norms = Json::array();
  for (const auto& v : r.norms) norms.push_back(to_json(v));
  return {{"t", r.slope.str()},
          {"member", r.member},
          {"witness_n", r.witness_level},
          {"max_norm", to_json(r.max_norm)},
          {"norms", norms}};
}

Json to_json(const DecayReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.estimate.level},
                    {"favard", row.estimate.value},
                    {"error_bound", row.estimate.error_bound},
                    {"n_times_favard", row.n_times_favard},
                    {"inverse_n", row.inverse_n},
                    {"inverse_n_log_n", row.inverse_n_log_n},
                    {"inverse_n_pow", row.inverse_n_pow ? Json(*row.inverse_n_pow) : Json(nullptr)}});
  return {{"fitted_exponent", r.fitted_exponent},
          {"fitted_constant", r.fitted_constant},
          {"p_min", r.p_min ? Json(*r.p_min) : Json(nullptr)},
          {"lower_bound_pass", r.lower_bound_pass},
          {"nonincreasing", r.nonincreasing},
          {"band_ratio", r.band_ratio},
          {"rows", rows}};
}

Json to_json(const PlancherelCheck& p) {
  return {{"window", p.window}, {"tail", p.tail}, {"total", p.total},
          {"exact", to_json(p.exact)}, {"error", p.error}};
}

std::vector<FavardCsvRow> favard_csv_rows(const std::vector<DecayRow>& rows, bool all_refinements) {
  std::vector<FavardCsvRow> out;
  for (const auto& row : rows) {
    const int n = row.estimate.level;
    const auto& refs = row.estimate.refinements;
    const std::size_t first = all_refinements ? 0 : refs.size() - 1;
    for (std::size_t i = first; i < refs.size(); ++i)
      out.push_back({n, refs[i].nodes, refs[i].value, refs[i].delta, n * refs[i].value});
  }
  return out;
}

void write_favard_csv(std::ostream& os, const std::vector<FavardCsvRow>& rows) {
  os << "n,nodes,favard_estimate,error_bound,n_times_favard\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.nodes << ',' << format_double(r.favard_estimate) << ','
       << (r.error_bound ? format_double(*r.error_bound) : "") << ','
       << format_double(r.n_times_favard) << '\n';
}

std::vector<FavardCsvRow> read_favard_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "n,nodes,favard_estimate,error_bound,n_times_favard")
    throw DomainError("unexpected Favard CSV header");
  std::vector<FavardCsvRow> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (line.back() == ',') fields.emplace_back();
    if (fields.size() != 5) throw DomainError("malformed Favard CSV line: " + line);
    FavardCsvRow r;
    r.n = std::stoi(fields[0]);
    r.nodes = std::stoi(fields[1]);
    r.favard_estimate = std::stod(fields[2]);
    if (!fields[3].empty()) r.error_bound = std::stod(fields[3]);
    r.n_times_favard = std::stod(fields[4]);
    out.push_back(r);
  }
  return out;
}

void write_spectrum_csv(std::ostream& os, const SpectralGrid& grid) {
  os << "xi,re,im,abs2\n";
  for (const auto& s : grid.samples)
    os << format_double(s.xi) << ',' << format_double(s.value.real()) << ','
       << format_double(s.value.imag()) << ',' << format_double(std::norm(s.value)) << '\n';
}

void write_step_function_csv(std::ostream& os, const StepFunction& f) {
  os << "lo,hi,value\n";
  const auto& bp = f.breakpoints();
  for (std::size_t i = 0; i < f.values().size(); ++i)
    os << to_string(bp[i]) << ',' << to_string(bp[i + 1]) << ','
       << to_string(Rational(f.scale() * f.values()[i])) << '\n';
}

}  // namespace favard
