#include "jacspec/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "jacspec/random_ops.hpp"
#include "json.hpp"

namespace jacspec {

namespace {

using nlohmann::json;

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string jstr(const std::string& s) { return "\"" + escape(s) + "\""; }

// JSON has no inf/nan literals; those land as quoted strings.
std::string jnum(double v) {
  if (std::isfinite(v)) return format_double(v);
  return jstr(format_double(v));
}

std::string jc(Complex z) { return "[" + jnum(z.real()) + "," + jnum(z.imag()) + "]"; }

std::string jbool(bool b) { return b ? "true" : "false"; }

template <typename T, typename Fn>
std::string jarr(const std::vector<T>& items, Fn&& render) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += render(items[i]);
  }
  return out + "]";
}

Complex complex_from(const json& v, const std::string& field) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Complex(v[0].get<double>(), v[1].get<double>());
  throw ConfigError("field '" + field + "': entries must be numbers or [re,im] pairs");
}

std::vector<Complex> complex_list(const json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError("field '" + field + "' must be a list");
  std::vector<Complex> out;
  for (const auto& v : j) out.push_back(complex_from(v, field));
  return out;
}

JacobiOperator operator_from_json(const json& j, const std::string& origin) {
  if (!j.is_object()) throw ConfigError(origin + ": operator must be a JSON object");
  long lo = 0;
  if (j.contains("support_lo")) {
    if (!j["support_lo"].is_number_integer())
      throw ConfigError(origin + ": field 'support_lo' must be an integer");
    lo = j["support_lo"].get<long>();
  }
  std::vector<Complex> b;
  if (j.contains("b")) b = complex_list(j["b"], "b");
  std::vector<Complex> a(b.size(), Complex(1.0)), c(b.size(), Complex(1.0));
  if (j.contains("a")) a = complex_list(j["a"], "a");
  if (j.contains("c")) c = complex_list(j["c"], "c");
  if (a.size() != b.size() || b.size() != c.size())
    throw ConfigError(origin + ": fields 'a', 'b', 'c' must have equal lengths");
  try {
    return JacobiOperator(lo, std::move(a), std::move(b), std::move(c));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(origin + ": " + e.what());
  }
}

json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string membership_json(const OvalMembership& m) {
  std::string out = "{\"lambda\":" + jc(m.lambda) +
                    ",\"multiplicity\":" + std::to_string(m.multiplicity) +
                    ",\"mod_lambda_sq_minus_4\":" + jnum(m.lambda_sq_minus_4) +
                    ",\"in_cassini\":" + jbool(m.in_cassini) +
                    ",\"in_birman_schwinger\":" + jbool(m.in_birman_schwinger) +
                    ",\"in_sharp\":";
  out += m.in_sharp ? jbool(*m.in_sharp) : "null";
  return out + "}";
}

std::string report_json(const InequalityReport& r) {
  std::string out = "{\"label\":" + jstr(r.label) + ",\"epsilon\":" + jnum(r.epsilon);
  if (!r.error.empty()) return out + ",\"error\":" + jstr(r.error) + "}";
  out += ",\"delta\":" + jnum(r.delta) +
         ",\"trace_norm_proxy\":" + jnum(r.trace_norm_proxy) +
         ",\"lt_main\":" + jnum(r.sums.main_sum) + ",\"lt_hk\":" + jnum(r.sums.hk_sum) +
         ",\"ratio_main\":" + jnum(r.ratio_main) + ",\"ratio_hk\":" + jnum(r.ratio_hk) +
         ",\"r_cassini\":" + jnum(r.radii.cassini) +
         ",\"r_birman_schwinger\":" + jnum(r.radii.birman_schwinger) + ",\"r_sharp\":";
  out += r.radii.schrodinger_sharp ? jnum(*r.radii.schrodinger_sharp) : "null";
  out += ",\"schrodinger\":" + jbool(r.schrodinger) +
         ",\"violation\":" + jbool(r.violation) +
         ",\"eigenvalues\":" + jarr(r.memberships, membership_json);
  return out + "}";
}

std::string report_csv_row(const InequalityReport& r) {
  std::string sharp = r.radii.schrodinger_sharp ? format_double(*r.radii.schrodinger_sharp) : "";
  return jstr(r.label) + "," + format_double(r.epsilon) + "," + format_double(r.delta) +
         "," + format_double(r.trace_norm_proxy) + "," + format_double(r.sums.main_sum) +
         "," + format_double(r.sums.hk_sum) + "," + format_double(r.ratio_main) + "," +
         format_double(r.ratio_hk) + "," + format_double(r.radii.cassini) + "," +
         format_double(r.radii.birman_schwinger) + "," + sharp + "," +
         (r.schrodinger ? "1" : "0") + "," + (r.violation ? "1" : "0") + "," +
         jstr(r.error);
}

constexpr const char* kReportCsvHeader =
    "label,epsilon,delta,trace_norm_proxy,lt_main,lt_hk,ratio_main,ratio_hk,"
    "r_cassini,r_birman_schwinger,r_sharp,schrodinger,violation,error\n";

std::string det_row_json(const DeterminantEvaluation& ev) {
  std::string out = "{\"z\":" + jc(ev.z) + ",\"u\":" + jc(ev.u_value) +
                    ",\"x\":" + jnum(ev.margins.x) +
                    ",\"margin_perdet\":" + jnum(ev.margins.perdet) +
                    ",\"margin_exp\":" + jnum(ev.margins.expbound) +
                    ",\"margin_log\":" + jnum(ev.margins.log_bound);
  if (ev.oracle_value) {
    double diff = std::abs(ev.u_value - *ev.oracle_value);
    out += ",\"oracle\":" + jc(*ev.oracle_value) + ",\"abs_diff\":" + jnum(diff) +
           ",\"rel_diff\":" + jnum(diff / (1.0 + std::abs(*ev.oracle_value)));
  }
  return out + "}";
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw ConfigError("unknown format '" + name + "' (expected json or csv)");
}

JacobiOperator operator_from_json_text(const std::string& text, const std::string& origin) {
  return operator_from_json(parse_text(text, origin), origin);
}

JacobiOperator load_operator(const std::string& path) {
  return operator_from_json_text(read_file(path), path);
}

std::string operator_to_json(const JacobiOperator& op) {
  std::vector<Complex> a, b, c;
  if (!op.is_free()) {
    for (long j = op.support_lo(); j <= op.support_hi(); ++j) {
      a.push_back(op.a(j));
      b.push_back(op.b(j));
      c.push_back(op.c(j));
    }
  }
  auto id = [](const Complex& z) { return jc(z); };
  return "{\"support_lo\":" + std::to_string(op.support_lo()) +
         ",\"a\":" + jarr(a, id) + ",\"b\":" + jarr(b, id) + ",\"c\":" + jarr(c, id) +
         "}";
}

std::vector<FamilyMember> load_family(const std::string& path, std::uint64_t seed,
                                      std::vector<double>* epsilons_out) {
  json j = parse_text(read_file(path), path);
  if (!j.is_object()) throw ConfigError(path + ": family must be a JSON object");
  std::vector<FamilyMember> family;
  if (epsilons_out && j.contains("epsilons")) {
    epsilons_out->clear();
    for (const auto& e : j["epsilons"]) {
      if (!e.is_number()) throw ConfigError(path + ": field 'epsilons' must hold numbers");
      epsilons_out->push_back(e.get<double>());
    }
  }
  if (j.contains("members")) {
    std::size_t idx = 0;
    for (const auto& m : j["members"]) {
      std::string label = m.contains("label") && m["label"].is_string()
                              ? m["label"].get<std::string>()
                              : "member[" + std::to_string(idx) + "]";
      if (!m.contains("operator"))
        throw ConfigError(path + ": member '" + label + "' lacks an 'operator'");
      family.push_back({label, operator_from_json(m["operator"], path + ":" + label)});
      ++idx;
    }
  }
  if (j.contains("generator")) {
    const json& g = j["generator"];
    std::string type = g.value("type", "");
    Rng rng(seed);
    if (type == "single_site") {
      if (!g.contains("values"))
        throw ConfigError(path + ": single_site generator needs 'values'");
      std::size_t idx = 0;
      for (const auto& v : g["values"]) {
        Complex bv = complex_from(v, "values");
        family.push_back({"single_site[" + std::to_string(idx++) + "]",
                          JacobiOperator::single_site(bv)});
      }
    } else if (type == "random") {
      RandomOperatorParams params;
      params.max_support = g.value("max_support", 5);
      params.amplitude = g.value("amplitude", 0.5);
      params.center_range = g.value("center_range", 3);
      params.schrodinger = g.value("schrodinger", false);
      long count = g.value("count", 10);
      for (long i = 0; i < count; ++i)
        family.push_back({"random[" + std::to_string(i) + "]", random_operator(rng, params)});
    } else if (type == "gauge_orbit") {
      if (!g.contains("base"))
        throw ConfigError(path + ": gauge_orbit generator needs 'base'");
      JacobiOperator base = operator_from_json(g["base"], path + ":base");
      long count = g.value("count", 5);
      long length = g.value("gauge_length", 3);
      long gauge_lo = g.value("gauge_lo", base.support_lo());
      family.push_back({"gauge_orbit[base]", base});
      for (long i = 0; i < count; ++i) {
        auto r = random_gauge(rng, length);
        family.push_back({"gauge_orbit[" + std::to_string(i) + "]",
                          base.gauge_transformed(gauge_lo, r)});
      }
    } else {
      throw ConfigError(path + ": unknown generator type '" + type + "'");
    }
  }
  if (family.empty()) throw ConfigError(path + ": family holds no operators");
  return family;
}

std::string render_spectrum(const ZeroSearchResult& result, ReportFormat fmt) {
  if (fmt == ReportFormat::csv) {
    std::string out = "re_lambda,im_lambda,re_z,im_z,multiplicity,residual\n";
    for (const auto& p : result.zeros)
      out += format_double(p.lambda.real()) + "," + format_double(p.lambda.imag()) + "," +
             format_double(p.z.real()) + "," + format_double(p.z.imag()) + "," +
             std::to_string(p.multiplicity) + "," + format_double(p.residual) + "\n";
    return out;
  }
  auto zero_json = [](const SpectralPoint& p) {
    return "{\"lambda\":" + jc(p.lambda) + ",\"z\":" + jc(p.z) +
           ",\"multiplicity\":" + std::to_string(p.multiplicity) +
           ",\"residual\":" + jnum(p.residual) + "}";
  };
  auto unresolved_json = [](const UnresolvedRegion& u) {
    return "{\"center\":" + jc(u.center) + ",\"half_width\":" + jnum(u.half_width) +
           ",\"winding\":" + std::to_string(u.winding) + ",\"reason\":" + jstr(u.reason) +
           "}";
  };
  return "{\"eigenvalues\":" + jarr(result.zeros, zero_json) +
         ",\"unresolved\":" + jarr(result.unresolved, unresolved_json) +
         ",\"annulus_winding\":" + std::to_string(result.annulus_winding) +
         ",\"annulus_winding_ok\":" + jbool(result.annulus_winding_ok) +
         ",\"multiplicity_total\":" + std::to_string(result.multiplicity_total()) +
         "}\n";
}

std::string render_det_scan(const std::vector<DeterminantEvaluation>& rows,
                            ReportFormat fmt) {
  double min_margin = std::numeric_limits<double>::infinity();
  for (const auto& ev : rows) min_margin = std::min(min_margin, ev.margins.worst());
  if (fmt == ReportFormat::csv) {
    std::string out = "re_z,im_z,re_u,im_u,x,margin_perdet,margin_exp,margin_log\n";
    for (const auto& ev : rows)
      out += format_double(ev.z.real()) + "," + format_double(ev.z.imag()) + "," +
             format_double(ev.u_value.real()) + "," + format_double(ev.u_value.imag()) +
             "," + format_double(ev.margins.x) + "," + format_double(ev.margins.perdet) +
             "," + format_double(ev.margins.expbound) + "," +
             format_double(ev.margins.log_bound) + "\n";
    return out;
  }
  return "{\"rows\":" + jarr(rows, det_row_json) + ",\"min_margin\":" + jnum(min_margin) +
         "}\n";
}

std::string render_oracle_compare(const std::vector<DeterminantEvaluation>& rows,
                                  ReportFormat fmt) {
  double max_rel = 0.0;
  for (const auto& ev : rows)
    if (ev.oracle_value)
      max_rel = std::max(max_rel, std::abs(ev.u_value - *ev.oracle_value) /
                                      (1.0 + std::abs(*ev.oracle_value)));
  if (fmt == ReportFormat::csv) {
    std::string out = "re_z,im_z,re_u,im_u,re_oracle,im_oracle,abs_diff,rel_diff\n";
    for (const auto& ev : rows) {
      if (!ev.oracle_value) continue;
      double diff = std::abs(ev.u_value - *ev.oracle_value);
      out += format_double(ev.z.real()) + "," + format_double(ev.z.imag()) + "," +
             format_double(ev.u_value.real()) + "," + format_double(ev.u_value.imag()) +
             "," + format_double(ev.oracle_value->real()) + "," +
             format_double(ev.oracle_value->imag()) + "," + format_double(diff) + "," +
             format_double(diff / (1.0 + std::abs(*ev.oracle_value))) + "\n";
    }
    return out;
  }
  return "{\"rows\":" + jarr(rows, det_row_json) +
         ",\"max_rel_diff\":" + jnum(max_rel) + "}\n";
}

std::string render_reports(const std::vector<InequalityReport>& reports,
                           ReportFormat fmt) {
  if (fmt == ReportFormat::csv) {
    std::string out = kReportCsvHeader;
    for (const auto& r : reports) out += report_csv_row(r) + "\n";
    return out;
  }
  return "{\"reports\":" + jarr(reports, report_json) + "}\n";
}

std::string render_enclosure(const InequalityReport& report, ReportFormat fmt) {
  if (fmt == ReportFormat::csv) {
    std::string out =
        "re_lambda,im_lambda,multiplicity,mod_lambda_sq_minus_4,in_cassini,"
        "in_birman_schwinger,in_sharp\n";
    for (const auto& m : report.memberships)
      out += format_double(m.lambda.real()) + "," + format_double(m.lambda.imag()) + "," +
             std::to_string(m.multiplicity) + "," + format_double(m.lambda_sq_minus_4) +
             "," + (m.in_cassini ? "1" : "0") + "," + (m.in_birman_schwinger ? "1" : "0") +
             "," + (m.in_sharp ? (*m.in_sharp ? "1" : "0") : "") + "\n";
    return out;
  }
  return report_json(report) + "\n";
}

std::string render_jost(const JostReport& report, ReportFormat fmt) {
  if (fmt == ReportFormat::csv) {
    std::string out = "side,n,re_value,im_value,re_remainder,im_remainder\n";
    auto rows = [&out](const JostSolution& sol, const char* side) {
      for (long n = sol.n_min; n <= sol.n_max; ++n)
        out += std::string(side) + "," + std::to_string(n) + "," +
               format_double(sol.value(n).real()) + "," +
               format_double(sol.value(n).imag()) + "," +
               format_double(sol.remainder(n).real()) + "," +
               format_double(sol.remainder(n).imag()) + "\n";
    };
    rows(report.right, "plus");
    rows(report.left, "minus");
    return out;
  }
  auto sol_json = [](const JostSolution& sol, const ResidualReport& res) {
    std::string vals = "[", rems = "[";
    for (long n = sol.n_min; n <= sol.n_max; ++n) {
      if (n > sol.n_min) {
        vals += ",";
        rems += ",";
      }
      vals += jc(sol.value(n));
      rems += jc(sol.remainder(n));
    }
    return "{\"n_min\":" + std::to_string(sol.n_min) +
           ",\"n_max\":" + std::to_string(sol.n_max) + ",\"values\":" + vals +
           "],\"remainders\":" + rems + "],\"recurrence_residual_rel\":" +
           jnum(res.max_rel) + "}";
  };
  return "{\"z\":" + jc(report.z) +
         ",\"right\":" + sol_json(report.right, report.right_residual) +
         ",\"left\":" + sol_json(report.left, report.left_residual) + "}\n";
}

std::string render_finite_section(const FiniteSectionResult& result, ReportFormat fmt) {
  if (fmt == ReportFormat::csv) {
    std::string out = "re_lambda,im_lambda\n";
    for (Complex ev : result.eigenvalues)
      out += format_double(ev.real()) + "," + format_double(ev.imag()) + "\n";
    return out;
  }
  auto ev_json = [](const Complex& ev) { return jc(ev); };
  auto match_json = [](const FiniteSectionResult::Match& m) {
    return "{\"point\":" + jc(m.point_lambda) + ",\"nearest\":" + jc(m.section_lambda) +
           ",\"distance\":" + jnum(m.distance) + "}";
  };
  return "{\"half_width\":" + std::to_string(result.half_width) +
         ",\"eigenvalues\":" + jarr(result.eigenvalues, ev_json) +
         ",\"matches\":" + jarr(result.matches, match_json) + "}\n";
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError(path + ": cannot open for writing");
  out << content;
}

}  // namespace jacspec
