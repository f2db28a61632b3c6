#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "angelesco/analysis.hpp"
#include "angelesco/measures.hpp"
#include "angelesco/oracle.hpp"
#include "angelesco/params.hpp"
#include "angelesco/poly.hpp"
#include "angelesco/recurrence.hpp"
#include "angelesco/report.hpp"

namespace angelesco::io {

using nlohmann::json;

/// Parses "1.5", "-2i", "0.3+0.2i", "1e-3-4e-2i" (also 'j' for the unit).
Complex parse_complex(const std::string& text);
/// Comma-separated list of complex values.
std::vector<Complex> parse_complex_list(const std::string& text);
/// Comma-separated nonnegative integers.
MultiIndex parse_multi_index(const std::string& text);

/// {"re": "<decimal>", "im": "<decimal>"} with `digits` significant digits.
json complex_to_json(const Complex& z, int digits);
Complex complex_from_json(const json& j);

json params_to_json(const ModelParams<Complex>& p);
ModelParams<Complex> params_from_json(const json& j, const PrecisionContext& ctx);

json poly_to_json(const PolyW<Complex>& poly, const MultiIndex& n, int digits,
                  const NormalityCertificate<Real>* certificate = nullptr);
PolyW<Complex> poly_from_json(const json& j);
std::string poly_to_csv(const PolyW<Complex>& poly, int digits);

json moments_to_json(const ModelParams<Complex>& p, const MomentTable<Complex>& t);
json report_to_json(const VerificationReport& report);

/// Columns kind,root,w_re,w_im,residual,z_re,z_im,ray_index; one "w" row
/// per root followed by one "z" row per fan-out root.
std::string zeros_to_csv(const ZeroSet<Complex>& zeros, int digits);

/// Rows (n, ray): n_0..n_{r-1},ray,b_re,b_im,d_0_re,d_0_im,...
std::string coefficient_table_csv(const ModelParams<Complex>& p, int nmax,
                                  CoefficientSource<Complex>& source);

}  // namespace angelesco::io
