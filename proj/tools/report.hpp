#pragma once

#include <json.hpp>
#include <string>

#include "midx/enumerate.hpp"
#include "midx/geometry.hpp"

namespace midx::cli {

enum class Format { Text, Json, Latex };

Format parse_format(const std::string& name);

// A rendered command result. JSON output wraps the payload with stable
// metadata; text and LaTeX render the same payload.
struct ReportDocument {
  std::string command;
  nlohmann::ordered_json parameters;
  nlohmann::ordered_json payload;
  std::string text;
  std::string latex;

  std::string render(Format format) const;
};

ReportDocument enumerate_report(const GradingContext& ctx);
ReportDocument reduced_report(const GradingContext& ctx, bool even_only, bool with_fibers);
ReportDocument geo_dim_report(int noises);
ReportDocument geo_basis_report(int noises);
ReportDocument counterterms_report(const GradingContext& ctx, bool gaussian);

}  // namespace midx::cli
