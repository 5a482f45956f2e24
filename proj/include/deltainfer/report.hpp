#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "deltainfer/bootstrap.hpp"
#include "deltainfer/clt.hpp"
#include "deltainfer/estimands.hpp"

namespace deltainfer {

enum class OutputFormat { Json, Csv, Plain };

inline OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "plain") return OutputFormat::Plain;
  throw InvalidArgument("unknown output format: " + name);
}

namespace detail {

/// 17 significant digits: enough for bit-exact double round-trips.
inline std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// 6 significant digits for human-facing plain output.
inline std::string num6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  out += '"';
  return out;
}

inline std::string json_counts(const std::vector<std::size_t>& n) {
  if (n.size() == 1) return std::to_string(n[0]);
  std::string out = "[";
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(n[i]);
  }
  return out + "]";
}

inline std::string json_ci(const ConfidenceInterval& ci) {
  return std::string("{\"lower\":") + num17(ci.lower) +
         ",\"upper\":" + num17(ci.upper) + ",\"level\":" + num17(ci.level) +
         ",\"scale\":" + json_string(to_string(ci.scale)) + "}";
}

}  // namespace detail

inline std::string to_json(const InferenceResult& r,
                           const std::optional<BootstrapResult>& boot = std::nullopt,
                           const std::optional<std::uint64_t>& seed = std::nullopt) {
  using detail::json_string;
  using detail::num17;
  std::string out = "{";
  out += "\"estimand\":" + json_string(r.method);
  out += ",\"estimate\":" + num17(r.estimate);
  out += ",\"se\":" + num17(r.se);
  out += ",\"ci\":" + detail::json_ci(r.ci);
  out += ",\"n\":" + detail::json_counts(r.n);
  out += ",\"warnings\":[";
  for (std::size_t i = 0; i < r.warnings.size(); ++i) {
    if (i) out += ",";
    out += json_string(r.warnings[i]);
  }
  out += "]";
  if (!r.diagnostics.empty()) {
    out += ",\"diagnostics\":{";
    bool first = true;
    for (const auto& [key, value] : r.diagnostics) {
      if (!first) out += ",";
      first = false;
      out += json_string(key) + ":" + num17(value);
    }
    out += "}";
  }
  if (boot) {
    out += ",\"bootstrap\":{\"se\":" + num17(boot->se) +
           ",\"ci\":" + detail::json_ci(boot->percentile_ci) +
           ",\"replicates\":" + std::to_string(boot->replicates) + "}";
  }
  if (seed) out += ",\"seed\":" + std::to_string(*seed);
  out += "}";
  return out;
}

inline std::string to_plain(const InferenceResult& r,
                            const std::optional<BootstrapResult>& boot = std::nullopt) {
  using detail::num6;
  std::string out;
  out += "estimand      " + r.method + "\n";
  out += "estimate      " + num6(r.estimate) + "\n";
  out += "se            " + num6(r.se) + "\n";
  out += "ci            [" + num6(r.ci.lower) + ", " + num6(r.ci.upper) + "]\n";
  out += "level         " + num6(r.ci.level) + "\n";
  out += "scale         " + std::string(to_string(r.ci.scale)) + "\n";
  out += "n             ";
  for (std::size_t i = 0; i < r.n.size(); ++i)
    out += (i ? " " : "") + std::to_string(r.n[i]);
  out += "\n";
  for (const auto& w : r.warnings) out += "warning       " + w + "\n";
  if (boot) {
    out += "bootstrap_se  " + num6(boot->se) + "\n";
    out += "bootstrap_ci  [" + num6(boot->percentile_ci.lower) + ", " +
           num6(boot->percentile_ci.upper) + "]\n";
  }
  return out;
}

inline std::string to_csv(const InferenceResult& r,
                          const std::optional<BootstrapResult>& boot = std::nullopt) {
  using detail::num17;
  std::string header =
      "estimand,estimate,se,ci_lower,ci_upper,level,scale,n";
  std::string row = r.method + "," + num17(r.estimate) + "," + num17(r.se) + "," +
                    num17(r.ci.lower) + "," + num17(r.ci.upper) + "," +
                    num17(r.ci.level) + "," + to_string(r.ci.scale) + ",";
  for (std::size_t i = 0; i < r.n.size(); ++i) row += (i ? ";" : "") + std::to_string(r.n[i]);
  if (boot) {
    header += ",bootstrap_se,bootstrap_ci_lower,bootstrap_ci_upper";
    row += "," + num17(boot->se) + "," + num17(boot->percentile_ci.lower) + "," +
           num17(boot->percentile_ci.upper);
  }
  return header + "\n" + row + "\n";
}

inline std::string to_json(const AfDiagnostic& d) {
  using detail::num17;
  std::string out = "{\"diagnostic\":\"attributable_fraction\"";
  out += ",\"theta_hat\":" + num17(d.theta_hat);
  out += ",\"se_theta\":" + num17(d.se_theta);
  out += ",\"exposure\":" + num17(d.exposure);
  out += ",\"delta_se\":" + num17(d.delta_se);
  out += ",\"monte_carlo_se\":" + num17(d.monte_carlo_se);
  out += ",\"divergence_ratio\":" + num17(d.divergence_ratio);
  out += std::string(",\"warning\":") + (d.warning ? "true" : "false");
  out += ",\"draws\":" + std::to_string(d.draws);
  out += ",\"seed\":" + std::to_string(d.seed);
  out += "}";
  return out;
}

inline std::string to_plain(const AfDiagnostic& d) {
  using detail::num6;
  std::string out;
  out += "diagnostic        attributable_fraction\n";
  out += "delta_se          " + num6(d.delta_se) + "\n";
  out += "monte_carlo_se    " + num6(d.monte_carlo_se) + "\n";
  out += "divergence_ratio  " + num6(d.divergence_ratio) + "\n";
  out += std::string("warning           ") + (d.warning ? "yes" : "no") + "\n";
  return out;
}

inline std::string to_json(const CltReport& report) {
  using detail::num17;
  std::string out = "{\"experiment\":\"clt\"";
  out += ",\"distribution\":" + detail::json_string(report.distribution);
  out += ",\"replicates\":" + std::to_string(report.replicates);
  out += ",\"seed\":" + std::to_string(report.seed);
  out += ",\"results\":[";
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    if (i) out += ",";
    out += "{\"n\":" + std::to_string(report.entries[i].n) +
           ",\"ks\":" + num17(report.entries[i].ks) + "}";
  }
  out += "]}";
  return out;
}

inline std::string to_plain(const CltReport& report) {
  std::string out = "distribution " + report.distribution + "\n";
  for (const auto& e : report.entries)
    out += "n " + std::to_string(e.n) + "  ks " + detail::num6(e.ks) + "\n";
  return out;
}

/// Replicate-level CSV (n, replicate, z) for external plotting of the
/// empirical distributions.
inline std::string to_csv(const CltReport& report) {
  std::string out = "n,replicate,z\n";
  for (const auto& e : report.entries)
    for (std::size_t r = 0; r < e.z.size(); ++r)
      out += std::to_string(e.n) + "," + std::to_string(r) + "," +
             detail::num17(e.z[r]) + "\n";
  return out;
}

inline std::string influence_curve_csv(const InfluenceCurve& curve) {
  std::string out = "row_index,influence_value\n";
  for (std::size_t i = 0; i < curve.values.size(); ++i)
    out += std::to_string(i) + "," + detail::num17(curve.values[i]) + "\n";
  return out;
}

}  // namespace deltainfer
