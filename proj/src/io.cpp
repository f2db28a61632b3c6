#include "angelesco/io.hpp"

#include <sstream>

namespace angelesco::io {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

Real parse_real(const std::string& s, const std::string& whole) {
  if (s.empty()) throw ParamDomainError("cannot parse number '" + whole + "'");
  try {
    std::size_t used = 0;
    (void)std::stod(s, &used);  // syntax check only; value parsed at full precision below
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::out_of_range&) {
    // very small or large magnitudes are still valid decimals
  } catch (const std::exception&) {
    throw ParamDomainError("cannot parse number '" + whole + "'");
  }
  return Real(s);
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text) if (ch != ' ') s += ch;
  if (s.empty()) throw ParamDomainError("empty complex value");
  if (s.back() != 'i' && s.back() != 'j') return Complex(parse_real(s, text), Real(0));

  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  if (im[0] == '+') im = im.substr(1);
  return Complex(parse_real(re, text), parse_real(im, text));
}

std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(trim(item)));
  return out;
}

MultiIndex parse_multi_index(const std::string& text) {
  MultiIndex out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || v < 0) {
      throw ParamDomainError("multi-index entries must be nonnegative integers, got '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

json complex_to_json(const Complex& z, int digits) {
  return json{{"re", to_decimal(Real(real(z)), digits)}, {"im", to_decimal(Real(imag(z)), digits)}};
}

Complex complex_from_json(const json& j) {
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_number()) return Complex(Real(j.dump()), Real(0));
  auto part = [&](const char* key) {
    if (!j.contains(key)) return Real(0);
    const auto& v = j.at(key);
    return v.is_string() ? Real(v.get<std::string>()) : Real(v.dump());
  };
  return Complex(part("re"), part("im"));
}

namespace {
json complex_list(const std::vector<Complex>& v, int digits) {
  json arr = json::array();
  for (const auto& z : v) arr.push_back(complex_to_json(z, digits));
  return arr;
}
std::vector<Complex> complex_list_from(const json& j) {
  std::vector<Complex> out;
  if (j.is_string()) return parse_complex_list(j.get<std::string>());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}
}  // namespace

json params_to_json(const ModelParams<Complex>& p) {
  const int digits = p.ctx.digits;
  json j{{"family", to_string(p.family)}, {"r", p.r}, {"digits", digits}};
  if (!p.a.empty()) j["a"] = complex_list(p.a, digits);
  if (!p.c.empty()) j["c"] = complex_list(p.c, digits);
  if (!p.beta.empty()) j["beta"] = complex_list(p.beta, digits);
  return j;
}

ModelParams<Complex> params_from_json(const json& j, const PrecisionContext& ctx) {
  PrecisionGuard<Complex> guard(ctx);
  const Family f = parse_family(j.at("family").get<std::string>());
  auto list = [&](const char* key) {
    return j.contains(key) ? complex_list_from(j.at(key)) : std::vector<Complex>{};
  };
  ModelParams<Complex> p;
  switch (f) {
    case Family::CharlierAngelesco:
      p = ModelParams<Complex>::charlier(list("a"), ctx);
      break;
    case Family::Meixner1Angelesco: {
      auto beta = list("beta");
      if (beta.size() != 1) throw ParamDomainError("Meixner-I takes a single shared beta");
      p = ModelParams<Complex>::meixner1(beta[0], list("c"), ctx);
      break;
    }
    case Family::Meixner2Angelesco: {
      auto c = list("c");
      if (c.size() != 1) throw ParamDomainError("Meixner-II takes a single shared c");
      p = ModelParams<Complex>::meixner2(list("beta"), c[0], ctx);
      break;
    }
  }
  if (j.contains("r") && j.at("r").get<int>() != p.r) {
    throw ParamDomainError("r = " + std::to_string(j.at("r").get<int>()) +
                           " does not match the number of per-ray parameters (" +
                           std::to_string(p.r) + ")");
  }
  return p;
}

json poly_to_json(const PolyW<Complex>& poly, const MultiIndex& n, int digits,
                  const NormalityCertificate<Real>* certificate) {
  json coeffs = json::array();
  for (Eigen::Index m = 0; m < poly.coeffs.size(); ++m) coeffs.push_back(complex_to_json(poly.coeffs(m), digits));
  json j{{"n", n}, {"degree", poly.degree()}, {"coeffs", coeffs}};
  if (certificate) {
    j["certificate"] = {{"pivot", to_decimal(certificate->min_pivot, 6)},
                        {"cond", to_decimal(certificate->cond_estimate, 6)},
                        {"threshold", to_decimal(certificate->threshold, 6)}};
  }
  return j;
}

PolyW<Complex> poly_from_json(const json& j) {
  const auto& arr = j.at("coeffs");
  VectorX<Complex> c(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t m = 0; m < arr.size(); ++m) c(static_cast<Eigen::Index>(m)) = complex_from_json(arr[m]);
  return PolyW<Complex>(std::move(c));
}

std::string poly_to_csv(const PolyW<Complex>& poly, int digits) {
  std::ostringstream out;
  out << "power,re,im\n";
  for (Eigen::Index m = 0; m < poly.coeffs.size(); ++m) {
    out << m << "," << to_decimal(Real(real(poly.coeffs(m))), digits) << ","
        << to_decimal(Real(imag(poly.coeffs(m))), digits) << "\n";
  }
  return out.str();
}

json moments_to_json(const ModelParams<Complex>& p, const MomentTable<Complex>& t) {
  const int digits = p.ctx.digits;
  json entries = json::array();
  for (int l = 0; l < t.r; ++l) {
    for (int j = 0; j <= t.jmax; ++j) {
      for (int m = 0; m <= t.mmax; ++m) {
        const Complex& v = t(l, j, m);
        entries.push_back({{"ell", l}, {"j", j}, {"m", m},
                           {"re", to_decimal(Real(real(v)), digits)},
                           {"im", to_decimal(Real(imag(v)), digits)}});
      }
    }
  }
  return json{{"family", to_string(p.family)},
              {"r", p.r},
              {"params", params_to_json(p)},
              {"jmax", t.jmax},
              {"mmax", t.mmax},
              {"tol_abs", to_decimal(t.tol_abs, 6)},
              {"truncation_K", t.truncation_K},
              {"tail_bound", to_decimal(t.tail_bound, 6)},
              {"entries", entries}};
}

json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  auto num = [](double x) {
    std::ostringstream s;
    s.precision(6);
    s << std::scientific << x;
    return s.str();
  };
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"residual", num(c.residual)},
                      {"tolerance", num(c.tolerance)},
                      {"verdict", to_string(c.verdict)},
                      {"detail", c.detail}});
  }
  return json{{"passed", report.passed()},
              {"counts",
               {{"pass", report.count(Verdict::Pass)},
                {"fail", report.count(Verdict::Fail)},
                {"info", report.count(Verdict::Info)},
                {"n/a", report.count(Verdict::NotApplicable)}}},
              {"warnings", report.warnings},
              {"checks", checks}};
}

std::string zeros_to_csv(const ZeroSet<Complex>& zeros, int digits) {
  auto dec = [digits](const Real& x) { return to_decimal(x, digits); };
  std::ostringstream out;
  out << "kind,root,w_re,w_im,residual,z_re,z_im,ray_index\n";
  for (std::size_t i = 0; i < zeros.w_roots.size(); ++i) {
    const Complex& w = zeros.w_roots[i];
    out << "w," << i << "," << dec(real(w)) << "," << dec(imag(w)) << ","
        << to_decimal(zeros.residuals[i], 6) << ",,,\n";
  }
  for (const auto& s : zeros.z_roots) {
    const Complex& w = zeros.w_roots[s.root];
    out << "z," << s.root << "," << dec(real(w)) << "," << dec(imag(w)) << ","
        << to_decimal(zeros.residuals[s.root], 6) << "," << dec(real(s.z)) << ","
        << dec(imag(s.z)) << "," << s.ray_index << "\n";
  }
  return out.str();
}

std::string coefficient_table_csv(const ModelParams<Complex>& p, int nmax,
                                  CoefficientSource<Complex>& source) {
  PrecisionGuard<Complex> guard(p.ctx);
  const int digits = p.ctx.digits;
  std::ostringstream out;
  for (int l = 0; l < p.r; ++l) out << "n_" << l << ",";
  out << "ray,b_re,b_im";
  for (int j = 0; j < p.r; ++j) out << ",d_" << j << "_re,d_" << j << "_im";
  out << "\n";
  for (const auto& n : indices_up_to(p.r, nmax)) {
    const auto coeffs = source.coefficients(n, p.r);
    for (int l = 0; l < p.r; ++l) {
      for (int v : n) out << v << ",";
      out << l << "," << to_decimal(Real(real(coeffs.b[l])), digits) << ","
          << to_decimal(Real(imag(coeffs.b[l])), digits);
      for (int j = 0; j < p.r; ++j) {
        out << "," << to_decimal(Real(real(coeffs.d[j])), digits) << ","
            << to_decimal(Real(imag(coeffs.d[j])), digits);
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace angelesco::io
