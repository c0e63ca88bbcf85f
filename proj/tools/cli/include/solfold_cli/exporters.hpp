#pragma once

#include "solfold_cli/config.hpp"
#include "solfold_cli/json_out.hpp"

#include <string>
#include <vector>

namespace solfold::cli {

// Numeric table rendered as CSV (header row, LF endings) or as a JSON object
// {"columns": [...], "rows": [[...], ...]}.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::string to_csv() const;
  Json to_json() const;
};

// Normal flow line through cfg.z (default (i, i)) sampled over cfg.s_range.
Table flow_table(const RunConfig& cfg);
// Diagonal of the induced leaf metric over cfg.t_range at cfg.z (default z0,
// must be purely imaginary).
Table leaf_metric_table(const RunConfig& cfg);
// Orbit of cfg.base under the conjugated word ball of radius cfg.N (default 4).
Table orbit_table(const RunConfig& cfg);

// Limit kernels of the word ball of radius cfg.N (default 8).
Json limit_set_json(const RunConfig& cfg);
// Fundamental-domain data for cfg.A, with the reduction of cfg.z when given.
Json domain_json(const RunConfig& cfg);

// Rendered export for cfg.subcommand in cfg.format. Throws ConfigError.
std::string render_export(const RunConfig& cfg);

}  // namespace solfold::cli
