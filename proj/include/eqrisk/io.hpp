#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqrisk/analysis.hpp"
#include "eqrisk/domain.hpp"

namespace eqrisk {

inline constexpr std::string_view kSchemaVersion = "1";

/// Instance file contents after syntax and schema checks, before domain
/// validation.
struct InstanceDocument {
  std::string schema_version{kSchemaVersion};
  InstanceData data;
};

/// JSON text -> document. Throws SyntaxError (with line and column) or
/// SchemaError (with the field path).
InstanceDocument parse_document(std::string_view text);

/// Full pipeline: parse_document followed by validate_instance.
ProblemInstance parse_instance(std::string_view text);

/// Reads and parses a file; IoError names the path.
ProblemInstance load_instance(const std::string& path);

/// Serializes to the instance file format. Doubles round-trip exactly.
std::string serialize_instance(const ProblemInstance& instance);

enum class ReportFormat { Text, Csv };

struct ReportOptions {
  ReportFormat format = ReportFormat::Text;
  int precision = 6;  // decimal places, in [1, 15]
};

/// Fixed-point rendering; never prints "-0.000".
std::string format_fixed(double value, int precision);

/// Quotes a CSV field only when it holds a comma, quote, or line break.
std::string csv_field(std::string_view field);

std::string render_solution(const ProblemInstance& instance, const EffectiveCostVector& costs,
                            const Solution& solution, const RiskProfile& profile,
                            const ReportOptions& options);

std::string render_sweep(const ProblemInstance& instance, const std::vector<SweepRow>& rows,
                         const ReportOptions& options);

std::string render_sensitivities(const ProblemInstance& instance, const Solution& solution,
                                 const Sensitivities& sens, const ReportOptions& options);

}  // namespace eqrisk
