// io.hpp — operator and family configs (JSON in) and deterministic report
// emission (JSON/CSV out, 17 significant digits, fixed field order).

#pragma once

#include <string>
#include <vector>

#include "jacspec/determinant.hpp"
#include "jacspec/inequalities.hpp"
#include "jacspec/jost.hpp"
#include "jacspec/operator_model.hpp"
#include "jacspec/spectrum.hpp"

namespace jacspec {

// Input errors carry the offending file/field in the message.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operator schema: {"support_lo": int, "a": [[re,im],...], "b": [...],
// "c": [...]} with equal-length lists; omitted "a"/"c" default to all ones
// (discrete Schrödinger case). Entries may also be plain numbers.
JacobiOperator operator_from_json_text(const std::string& text, const std::string& origin);
JacobiOperator load_operator(const std::string& path);
std::string operator_to_json(const JacobiOperator& op);

// Family schema: {"epsilons": [..], "members": [{"label": s, "operator":
// {...}}...]} and/or {"generator": {"type": "single_site"|"random"|
// "gauge_orbit", ...}}. The seed feeds the random generators.
std::vector<FamilyMember> load_family(const std::string& path, std::uint64_t seed,
                                      std::vector<double>* epsilons_out);

enum class ReportFormat { json, csv };
ReportFormat parse_format(const std::string& name);

// %.17g rendering via std::to_chars; locale-independent and byte-stable.
std::string format_double(double v);

struct JostReport {
  Complex z;
  JostSolution right, left;
  ResidualReport right_residual, left_residual;
};

std::string render_spectrum(const ZeroSearchResult& result, ReportFormat fmt);
std::string render_det_scan(const std::vector<DeterminantEvaluation>& rows,
                            ReportFormat fmt);
std::string render_oracle_compare(const std::vector<DeterminantEvaluation>& rows,
                                  ReportFormat fmt);
std::string render_reports(const std::vector<InequalityReport>& reports,
                           ReportFormat fmt);
std::string render_enclosure(const InequalityReport& report, ReportFormat fmt);
std::string render_jost(const JostReport& report, ReportFormat fmt);
std::string render_finite_section(const FiniteSectionResult& result, ReportFormat fmt);

void write_output(const std::string& path, const std::string& content);  // "-" = stdout

}  // namespace jacspec
