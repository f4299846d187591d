#include "eqrisk/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "eqrisk/error.hpp"
#include "eqrisk/pricing.hpp"

namespace eqrisk {

using nlohmann::json;

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
  // nlohmann reports a 1-based byte offset of the offending character
  const auto end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void require_keys(const json& obj, const std::string& path,
                  std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw Error(ErrorCode::SchemaError, path.empty() ? key : path + "." + key,
                  "unknown field");
  }
  for (auto key : allowed) {
    if (!obj.contains(key))
      throw Error(ErrorCode::SchemaError,
                  path.empty() ? std::string(key) : path + "." + std::string(key),
                  "missing field");
  }
}

double number_field(const json& obj, const std::string& key, const std::string& path) {
  const auto& v = obj.at(key);
  const auto where = path.empty() ? key : path + "." + key;
  if (!v.is_number()) throw Error(ErrorCode::SchemaError, where, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw Error(ErrorCode::SchemaError, where, "number out of range");
  return x;
}

std::string string_field(const json& obj, const std::string& key, const std::string& path) {
  const auto& v = obj.at(key);
  if (!v.is_string())
    throw Error(ErrorCode::SchemaError, path.empty() ? key : path + "." + key,
                "expected a string");
  return v.get<std::string>();
}

// Right-aligned columns; the first column is left-aligned.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return {};
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto pad = std::string(width[c] - row[c].size(), ' ');
      if (c == 0) {
        line += row[c] + pad;
      } else {
        line += "  " + pad + row[c];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string render_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::size_t width = 0;
  for (const auto& [key, value] : pairs) width = std::max(width, key.size());
  std::string out;
  for (const auto& [key, value] : pairs)
    out += key + std::string(width - key.size() + 2, ' ') + value + "\n";
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  return line + "\n";
}

}  // namespace

InstanceDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, line_col(text, e.byte), e.what());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SyntaxError, "", e.what());
  }

  if (!root.is_object()) throw Error(ErrorCode::SchemaError, "", "top level must be an object");
  require_keys(root, "", {"schema_version", "budget", "projects"});

  InstanceDocument doc;
  doc.schema_version = string_field(root, "schema_version", "");
  if (doc.schema_version != kSchemaVersion)
    throw Error(ErrorCode::SchemaError, "schema_version",
                "unsupported version \"" + doc.schema_version + "\"");
  doc.data.budget = number_field(root, "budget", "");

  const auto& projects = root.at("projects");
  if (!projects.is_array()) throw Error(ErrorCode::SchemaError, "projects", "expected an array");
  for (std::size_t i = 0; i < projects.size(); ++i) {
    const auto path = "projects[" + std::to_string(i) + "]";
    const auto& obj = projects[i];
    if (!obj.is_object()) throw Error(ErrorCode::SchemaError, path, "expected an object");
    require_keys(obj, path, {"id", "volume", "base_cost", "inflation_rate", "delay"});
    Project p;
    p.id = string_field(obj, "id", path);
    p.volume = number_field(obj, "volume", path);
    p.base_cost = number_field(obj, "base_cost", path);
    p.inflation_rate = number_field(obj, "inflation_rate", path);
    p.delay = number_field(obj, "delay", path);
    doc.data.projects.push_back(std::move(p));
  }
  return doc;
}

ProblemInstance parse_instance(std::string_view text) {
  return validate_instance(parse_document(text).data);
}

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, path, "cannot open file");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::IoError, path, "read failed");
  return parse_instance(text);
}

std::string serialize_instance(const ProblemInstance& instance) {
  json root;
  root["schema_version"] = std::string(kSchemaVersion);
  root["budget"] = instance.budget();
  json projects = json::array();
  for (const auto& p : instance.projects()) {
    projects.push_back({{"id", p.id},
                        {"volume", p.volume},
                        {"base_cost", p.base_cost},
                        {"inflation_rate", p.inflation_rate},
                        {"delay", p.delay}});
  }
  root["projects"] = std::move(projects);
  return root.dump(2) + "\n";
}

std::string format_fixed(double value, int precision) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_solution(const ProblemInstance& instance, const EffectiveCostVector& costs,
                            const Solution& solution, const RiskProfile& profile,
                            const ReportOptions& options) {
  const auto fx = [&](double v) { return format_fixed(v, options.precision); };
  const auto n = instance.size();
  double total_volume = 0.0, total_units = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total_volume += instance.project(i).volume;
    total_units += solution.allocation.units[i];
  }

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"id", "volume", "base_cost", "effective_cost", "allocation", "spend", "risk"});
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = instance.project(i);
    rows.push_back({p.id, fx(p.volume), fx(p.base_cost), fx(costs[i]),
                    fx(solution.allocation.units[i]), fx(profile.initial_costs[i]),
                    fx(profile.risks[i])});
  }

  if (options.format == ReportFormat::Csv) {
    std::string out;
    for (const auto& row : rows) out += csv_line(row);
    out += csv_line({"TOTAL", fx(total_volume), "", "", fx(total_units), fx(solution.spend),
                     fx(solution.risk_level)});
    return out;
  }

  std::string out;
  out += render_pairs({{"feasibility", to_string(solution.feasibility)},
                       {"risk_level", fx(solution.risk_level)},
                       {"budget", fx(instance.budget())},
                       {"spend", fx(solution.spend)},
                       {"residual", fx(solution.residual)},
                       {"iterations", std::to_string(solution.iterations)}});
  out += "\n";
  out += render_table(rows);
  return out;
}

std::string render_sweep(const ProblemInstance& instance, const std::vector<SweepRow>& rows,
                         const ReportOptions& options) {
  const auto fx = [&](double v) { return format_fixed(v, options.precision); };
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header{"t", "risk_level", "spend", "residual", "feasibility"};
  for (const auto& p : instance.projects()) header.push_back("u_" + p.id);
  table.push_back(std::move(header));
  for (const auto& row : rows) {
    std::vector<std::string> line{fx(row.t), fx(row.risk_level), fx(row.spend),
                                  fx(row.residual), to_string(row.feasibility)};
    for (double u : row.allocation.units) line.push_back(fx(u));
    table.push_back(std::move(line));
  }
  if (options.format == ReportFormat::Csv) {
    std::string out;
    for (const auto& line : table) out += csv_line(line);
    return out;
  }
  return render_table(table);
}

std::string render_sensitivities(const ProblemInstance& instance, const Solution& solution,
                                 const Sensitivities& sens, const ReportOptions& options) {
  const auto fx = [&](double v) { return format_fixed(v, options.precision); };
  if (options.format == ReportFormat::Csv) {
    std::string out = csv_line({"quantity", "id", "value"});
    out += csv_line({"risk_level", "", fx(solution.risk_level)});
    out += csv_line({"dr_dB", "", fx(sens.dr_dB)});
    for (std::size_t i = 0; i < instance.size(); ++i)
      out += csv_line({"du_dB", instance.project(i).id, fx(sens.du_dB[i])});
    for (std::size_t i = 0; i < instance.size(); ++i)
      out += csv_line({"dr_dT", instance.project(i).id, fx(sens.dr_dT[i])});
    return out;
  }
  std::string out = render_pairs({{"risk_level", fx(solution.risk_level)},
                                  {"dr_dB", fx(sens.dr_dB)}});
  out += "\n";
  std::vector<std::vector<std::string>> rows{{"id", "allocation", "du_dB", "dr_dT"}};
  for (std::size_t i = 0; i < instance.size(); ++i)
    rows.push_back({instance.project(i).id, fx(solution.allocation.units[i]),
                    fx(sens.du_dB[i]), fx(sens.dr_dT[i])});
  out += render_table(rows);
  return out;
}

}  // namespace eqrisk
