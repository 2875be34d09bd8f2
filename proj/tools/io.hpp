#pragma once

#include "favard/projection.hpp"
#include "favard/quadrature.hpp"
#include "favard/spectral.hpp"
#include "favard/tiling.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace favard {

using Json = nlohmann::ordered_json;

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);
std::string format_complex(Complex z);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const TilingCertificate& c);
Json to_json(const ExponentReport& e);
Json to_json(const DirectionAnalysis& a);
Json to_json(const ZeroSetReport& r);
Json to_json(const IntegralReport& r);
Json to_json(const XLambdaResult& r);
Json to_json(const DecayReport& r);
Json to_json(const PlancherelCheck& p);

TilingCertificate certificate_from_json(const Json& j);
ExponentReport exponents_from_json(const Json& j);
DirectionAnalysis direction_from_json(const Json& j);
ZeroSetReport zero_set_from_json(const Json& j);

/// One line of the Favard CSV (n, nodes, favard_estimate, error_bound,
/// n_times_favard). error_bound is empty for the coarsest refinement.
struct FavardCsvRow {
  int n = 0;
  int nodes = 0;
  double favard_estimate = 0.0;
  std::optional<double> error_bound;
  double n_times_favard = 0.0;
  friend bool operator==(const FavardCsvRow&, const FavardCsvRow&) = default;
};

std::vector<FavardCsvRow> favard_csv_rows(const std::vector<DecayRow>& rows, bool all_refinements);
void write_favard_csv(std::ostream& os, const std::vector<FavardCsvRow>& rows);
std::vector<FavardCsvRow> read_favard_csv(std::istream& is);

void write_spectrum_csv(std::ostream& os, const SpectralGrid& grid);
void write_step_function_csv(std::ostream& os, const StepFunction& f);

}  // namespace favard
