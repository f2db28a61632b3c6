#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "angelesco/analysis.hpp"
#include "angelesco/io.hpp"

using namespace angelesco;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNumerical = 3;

struct RunConfig {
  std::string family = "meixner2";
  int r = 0;
  std::string a, c, beta;
  std::string n = "0";
  std::string method = "cascade";
  int digits = 50;
  std::string tol;
  std::string tol_abs;
  std::string output;
  std::string format = "json";
  std::string config;
  std::string input;
  std::string source;
  int nmax = 4;
  int jmax = 3;
  int mmax = 6;
};

std::string json_scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ",") + json_scalar(e);
    return s;
  }
  if (v.is_object()) {
    const Complex z = io::complex_from_json(v);
    return to_decimal(Real(real(z)), 60) + (imag(z) < 0 ? "-" : "+") +
           to_decimal(Real(abs(imag(z))), 60) + "i";
  }
  return v.dump();
}

// Values from --config fill every option not given on the command line.
void apply_config(CLI::App& app, RunConfig& cfg) {
  if (cfg.config.empty()) return;
  std::ifstream in(cfg.config);
  if (!in) throw ParamDomainError("cannot open config file '" + cfg.config + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParamDomainError(std::string("config file is not valid JSON: ") + e.what());
  }
  auto given = [&](const std::string& flag) {
    try {
      return app.get_option(flag)->count() > 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };
  auto str = [&](const char* key, const std::string& flag, std::string& dst) {
    if (j.contains(key) && !given(flag)) dst = json_scalar(j.at(key));
  };
  auto num = [&](const char* key, const std::string& flag, int& dst) {
    if (j.contains(key) && !given(flag)) dst = std::stoi(json_scalar(j.at(key)));
  };
  str("family", "--family", cfg.family);
  num("r", "--r", cfg.r);
  str("a", "--a", cfg.a);
  str("c", "--c", cfg.c);
  str("beta", "--beta", cfg.beta);
  str("n", "--n", cfg.n);
  str("method", "--method", cfg.method);
  num("digits", "--digits", cfg.digits);
  str("tol", "--tol", cfg.tol);
  str("tol_abs", "--tol-abs", cfg.tol_abs);
  str("output", "--output", cfg.output);
  str("format", "--format", cfg.format);
  num("nmax", "--nmax", cfg.nmax);
  num("jmax", "--jmax", cfg.jmax);
  num("mmax", "--mmax", cfg.mmax);
}

ModelParams<Complex> build_params(const RunConfig& cfg, const PrecisionContext& ctx) {
  json j{{"family", cfg.family}};
  if (!cfg.a.empty()) j["a"] = cfg.a;
  if (!cfg.c.empty()) j["c"] = cfg.c;
  if (!cfg.beta.empty()) j["beta"] = cfg.beta;
  if (cfg.r > 0) j["r"] = cfg.r;
  const Family f = parse_family(cfg.family);
  if (f == Family::CharlierAngelesco && cfg.a.empty()) throw ParamDomainError("charlier needs --a");
  if (f != Family::CharlierAngelesco && (cfg.c.empty() || cfg.beta.empty())) {
    throw ParamDomainError(to_string(f) + " needs --c and --beta");
  }
  return io::params_from_json(j, ctx);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + cfg.output + "'");
  out << text;
}

std::shared_ptr<const MomentTable<Complex>> moments_for(const ModelParams<Complex>& p, int jmax,
                                                        int mmax) {
  const Real tol_abs = p.ctx.epsilon<Real>() * Real(10);
  return std::make_shared<const MomentTable<Complex>>(compute_moment_table(p, jmax, mmax, tol_abs));
}

struct Built {
  PolyW<Complex> poly;
  std::optional<NormalityCertificate<Real>> certificate;
};

Built build_poly(const ModelParams<Complex>& p, const MultiIndex& n, const std::string& method) {
  if (static_cast<int>(n.size()) != p.r) {
    throw ParamDomainError("multi-index has " + std::to_string(n.size()) + " entries but r = " +
                           std::to_string(p.r));
  }
  int jmax = 0;
  for (int v : n) jmax = std::max(jmax, v);
  if (method == "cascade") return {raising_cascade(p, n), std::nullopt};
  if (method == "series") return {explicit_series(p, n), std::nullopt};
  if (method == "rodrigues") return {rodrigues_polynomial(p, n), std::nullopt};
  if (method == "oracle") {
    auto sol = solve_monic(p, n, *moments_for(p, jmax, total_degree(n)));
    return {sol.poly, sol.certificate};
  }
  if (method == "recurrence") {
    auto source = default_source(p, p.family == Family::Meixner2Angelesco
                                        ? nullptr
                                        : moments_for(p, jmax + 1, total_degree(n) + 2));
    return {generate(p, n, *source), std::nullopt};
  }
  throw ParamDomainError("unknown method '" + method +
                         "' (expected series, cascade, rodrigues, recurrence, oracle)");
}

Real parse_tol(const std::string& s, const Real& fallback) {
  if (s.empty()) return fallback;
  const Complex z = io::parse_complex(s);
  if (imag(z) != 0 || real(z) <= 0) throw ParamDomainError("tolerances must be positive reals");
  return real(z);
}

int cmd_compute(const RunConfig& cfg, const ModelParams<Complex>& p) {
  const MultiIndex n = io::parse_multi_index(cfg.n);
  const Built b = build_poly(p, n, cfg.method);
  if (cfg.format == "csv") {
    emit(cfg, io::poly_to_csv(b.poly, p.ctx.digits));
  } else {
    json j = io::poly_to_json(b.poly, n, p.ctx.digits, b.certificate ? &*b.certificate : nullptr);
    j["method"] = cfg.method;
    j["params"] = io::params_to_json(p);
    emit(cfg, j.dump(2) + "\n");
  }
  return kExitPass;
}

// Re-checks a polynomial written by `compute`: orthogonality residuals and
// agreement with the oracle solution.
VerificationReport verify_file(const RunConfig& cfg, const PrecisionContext& ctx) {
  std::ifstream in(cfg.input);
  if (!in) throw ParamDomainError("cannot open input '" + cfg.input + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParamDomainError(std::string("input is not valid JSON: ") + e.what());
  }
  const auto p = io::params_from_json(j.at("params"), ctx);
  VerificationReport report;
  report.warnings = validate(p);
  const MultiIndex n = j.at("n").get<MultiIndex>();
  const PolyW<Complex> poly = io::poly_from_json(j);
  const Real tol = parse_tol(cfg.tol, ctx.verify_tolerance<Real>());
  int jmax = 0;
  for (int v : n) jmax = std::max(jmax, v);
  const auto moments = moments_for(p, jmax, std::max(1, total_degree(n)));
  const Real res = max_residual(residuals(p, n, poly, *moments)) /
                   (std::max(Real(1), max_abs_coeff(poly)) * moments->max_norm());
  report.add(make_check("input_orthogonality" + to_string(n), res, tol));
  report.add(make_check("input_degree" + to_string(n), Real(std::abs(poly.degree() - total_degree(n))),
                        Real(0)));
  try {
    const auto sol = solve_monic(p, n, *moments);
    report.add(make_check("input_vs_oracle" + to_string(n), relative_distance(poly, sol.poly), tol));
  } catch (const NotNormalError& e) {
    report.add({"input_vs_oracle" + to_string(n), 0, 0, Verdict::NotApplicable, e.what()});
  }
  return report;
}

int cmd_verify(const RunConfig& cfg, const ModelParams<Complex>* p, const PrecisionContext& ctx) {
  VerificationReport report;
  if (!cfg.input.empty()) {
    report = verify_file(cfg, ctx);
  } else {
    auto opt = default_verify_options(*p);
    opt.tolerance = parse_tol(cfg.tol, opt.tolerance);
    opt.tol_abs = parse_tol(cfg.tol_abs, opt.tol_abs);
    report = full_verify(*p, cfg.nmax, opt);
  }
  emit(cfg, io::report_to_json(report).dump(2) + "\n");
  for (const auto& c : report.checks) {
    if (c.verdict == Verdict::Fail) std::cerr << "FAIL " << c.name << ": " << c.detail << "\n";
  }
  return report.passed() ? kExitPass : kExitVerifyFailed;
}

int cmd_zeros(const RunConfig& cfg, const ModelParams<Complex>& p) {
  const MultiIndex n = io::parse_multi_index(cfg.n);
  const Built b = build_poly(p, n, cfg.method);
  if (b.poly.degree() < 1) throw ParamDomainError("zeros need |n| >= 1");
  emit(cfg, io::zeros_to_csv(find_roots(b.poly, p.r, p.ctx), p.ctx.digits));
  return kExitPass;
}

int cmd_moments(const RunConfig& cfg, const ModelParams<Complex>& p) {
  if (cfg.jmax < 0 || cfg.mmax < 0) throw ParamDomainError("jmax and mmax must be >= 0");
  const Real tol_abs = parse_tol(cfg.tol_abs, p.ctx.epsilon<Real>() * Real(10));
  const auto t = compute_moment_table(p, cfg.jmax, cfg.mmax, tol_abs);
  emit(cfg, io::moments_to_json(p, t).dump(2) + "\n");
  return kExitPass;
}

int cmd_table(const RunConfig& cfg, const ModelParams<Complex>& p) {
  if (cfg.nmax < 0) throw ParamDomainError("nmax must be >= 0");
  std::unique_ptr<CoefficientSource<Complex>> source;
  const std::string kind = cfg.source.empty()
                               ? (p.family == Family::Meixner2Angelesco ? "closed" : "oracle")
                               : cfg.source;
  if (kind == "closed") {
    if (p.family != Family::Meixner2Angelesco) {
      throw ParamDomainError("closed-form coefficients exist for meixner2 only");
    }
    source = std::make_unique<ClosedFormSource<Complex>>(p);
  } else if (kind == "oracle") {
    source = std::make_unique<OracleSource<Complex>>(p, moments_for(p, cfg.nmax + 1, cfg.nmax + 2));
  } else {
    throw ParamDomainError("unknown coefficient source '" + kind + "' (expected closed, oracle)");
  }
  emit(cfg, io::coefficient_table_csv(p, cfg.nmax, *source));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("ANGELESCO_DIGITS")) {
    try {
      cfg.digits = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: ANGELESCO_DIGITS must be an integer\n";
      return kExitDomain;
    }
  }

  CLI::App app{"Angelesco multiple orthogonal polynomials on the r-star"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--config", cfg.config, "JSON file with default option values");
  app.add_option("--family", cfg.family, "charlier, meixner1 or meixner2");
  app.add_option("--r", cfg.r, "star order (checked against the parameter count)");
  app.add_option("--a", cfg.a, "Charlier parameters a_l, comma separated (re+imi)");
  app.add_option("--c", cfg.c, "c (meixner2) or c_l list (meixner1)");
  app.add_option("--beta", cfg.beta, "beta_l list (meixner2) or beta (meixner1)");
  app.add_option("--digits", cfg.digits, "decimal digits of precision (default 50)");
  app.add_option("--output,-o", cfg.output, "output path (default stdout)");

  auto* compute = app.add_subcommand("compute", "compute P_n by one route");
  compute->add_option("--n", cfg.n, "multi-index, comma separated");
  compute->add_option("--method", cfg.method, "series, cascade, rodrigues, recurrence, oracle");
  compute->add_option("--format", cfg.format, "json or csv");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--nmax", cfg.nmax, "largest |n| checked");
  verify->add_option("--tol", cfg.tol, "agreement tolerance (default 10^(-digits/2))");
  verify->add_option("--tol-abs", cfg.tol_abs, "moment tail tolerance");
  verify->add_option("--input", cfg.input, "re-check a polynomial written by compute");

  auto* zeros = app.add_subcommand("zeros", "zeros of P_n in w and on the star");
  zeros->add_option("--n", cfg.n, "multi-index, comma separated");
  zeros->add_option("--method", cfg.method, "construction route");

  auto* moments = app.add_subcommand("moments", "certified mixed-moment table");
  moments->add_option("--jmax", cfg.jmax, "largest Pochhammer order j");
  moments->add_option("--mmax", cfg.mmax, "largest power m");
  moments->add_option("--tol-abs", cfg.tol_abs, "absolute tail tolerance");

  auto* table = app.add_subcommand("table", "nearest-neighbour coefficients for |n| <= nmax");
  table->add_option("--nmax", cfg.nmax, "largest |n|");
  table->add_option("--source", cfg.source, "closed or oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    apply_config(app, cfg);
    const PrecisionContext ctx = make_precision(cfg.digits);
    PrecisionGuard<Complex> guard(ctx);
    if (verify->parsed() && !cfg.input.empty()) return cmd_verify(cfg, nullptr, ctx);

    const ModelParams<Complex> p = build_params(cfg, ctx);
    for (const auto& w : validate(p)) std::cerr << "warning: " << w << "\n";
    if (compute->parsed()) return cmd_compute(cfg, p);
    if (verify->parsed()) return cmd_verify(cfg, &p, ctx);
    if (zeros->parsed()) return cmd_zeros(cfg, p);
    if (moments->parsed()) return cmd_moments(cfg, p);
    if (table->parsed()) return cmd_table(cfg, p);
  } catch (const ParamDomainError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitDomain;
}
