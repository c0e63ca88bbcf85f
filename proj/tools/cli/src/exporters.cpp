#include "solfold_cli/exporters.hpp"

#include <solfold/kleinian.hpp>
#include <solfold/sol.hpp>

#include <cmath>

namespace solfold::cli {

namespace {

const char* kind_name(LimitLineKind kind) {
  switch (kind) {
    case LimitLineKind::LineAtInfinity: return "line_at_infinity";
    case LimitLineKind::PencilZ1: return "pencil_z1";
    case LimitLineKind::PencilZ2: return "pencil_z2";
    case LimitLineKind::Other: return "other";
  }
  return "other";
}

Json complex_vector(const CVec3& v) {
  Json out = Json::array();
  for (int i = 0; i < 3; ++i) out.push_back(Json::array({v[i].real(), v[i].imag()}));
  return out;
}

template <class Matrix>
Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

ProductPoint point_from(const std::array<double, 4>& z) { return {{z[0], z[1]}, {z[2], z[3]}}; }

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_double(row[i]);
    out += "\n";
  }
  return out;
}

Json Table::to_json() const {
  Json out;
  out["columns"] = columns;
  out["rows"] = Json::array();
  for (const auto& row : rows) out["rows"].push_back(row);
  return out;
}

Table flow_table(const RunConfig& cfg) {
  const ProductPoint z = point_from(cfg.z.value_or(std::array<double, 4>{0.0, 1.0, 0.0, 1.0}));
  Table t{{"s", "x1", "y1", "x2", "y2"}, {}};
  for (std::size_t i = 0; i < cfg.s_range.count(); ++i) {
    const double s = cfg.s_range.at(i);
    const Vec4 c = normal_flow(z, s).coords();
    t.rows.push_back({s, c[0], c[1], c[2], c[3]});
  }
  return t;
}

Table leaf_metric_table(const RunConfig& cfg) {
  const ProductPoint z = cfg.z ? point_from(*cfg.z) : special_point();
  if (z.z1.x() != 0.0 || z.z2.x() != 0.0) throw ConfigError("z", "leaf-metric needs purely imaginary z");
  Table t{{"t", "g_tt", "g_xx", "g_yy"}, {}};
  for (std::size_t i = 0; i < cfg.t_range.count(); ++i) {
    const double s = cfg.t_range.at(i);
    const Eigen::Matrix3d g = leaf_metric(z, s);
    t.rows.push_back({s, g(0, 0), g(1, 1), g(2, 2)});
  }
  return t;
}

Table orbit_table(const RunConfig& cfg) {
  const ToralGroupSpec spec(cfg.A);
  Table t{{"k", "n", "m", "x1", "y1", "x2", "y2"}, {}};
  for (const auto& entry : word_ball(spec, cfg.N.value_or(4), ToralForm::Conjugated)) {
    const Eigen::Matrix3d& m = entry.matrix;
    const auto apply = [&](int row, std::complex<double> z) { return m(row, row) * z + m(row, 2); };
    const std::complex<double> w1 = apply(0, cfg.base[0]);
    const std::complex<double> w2 = apply(1, cfg.base[1]);
    const ToralElement& g = entry.element;
    t.rows.push_back({static_cast<double>(g.k), static_cast<double>(g.n), static_cast<double>(g.m),
                      w1.real(), w1.imag(), w2.real(), w2.imag()});
  }
  return t;
}

Json limit_set_json(const RunConfig& cfg) {
  const ToralGroupSpec spec(cfg.A);
  const int n_max = cfg.N.value_or(8);
  const LimitKernels kernels = pseudo_limit_kernels(spec, n_max);
  Json out;
  out["A"] = matrix_json(spec.A());
  out["lambda"] = spec.lambda();
  out["N"] = n_max;
  out["limit_maps"] = kernels.limit_maps;
  out["unconverged"] = kernels.unconverged;
  out["lines"] = Json::array();
  std::vector<ProjectiveLine> lines;
  for (const auto& l : kernels.lines) {
    Json item;
    item["dual"] = complex_vector(l.line.dual());
    item["kind"] = kind_name(classify_limit_line(l.line));
    item["cluster_size"] = l.cluster_size;
    out["lines"].push_back(std::move(item));
    lines.push_back(l.line);
  }
  out["points"] = Json::array();
  for (const auto& p : kernels.points) {
    Json item;
    item["coords"] = complex_vector(p.point.coords());
    item["cluster_size"] = p.cluster_size;
    out["points"].push_back(std::move(item));
  }
  const GeneralPositionResult gp = general_position_max(lines);
  out["general_position"] = {{"k", gp.k}, {"witness", gp.witness}, {"exact", gp.exact}};
  return out;
}

Json domain_json(const RunConfig& cfg) {
  const ToralGroupSpec spec(cfg.A);
  Json out;
  out["A"] = matrix_json(spec.A());
  out["lambda"] = spec.lambda();
  out["P"] = matrix_json(spec.P());
  out["P_inv"] = matrix_json(spec.P_inv());
  out["lattice_basis"] = matrix_json(spec.lattice_basis());
  out["component_count"] = toral_component_count(spec);
  if (cfg.z) {
    if (!(spec.lambda() > 0.0)) throw ConfigError("z", "fundamental-domain reduction needs tr A > 2");
    const DomainReduction r = fundamental_domain_reduce(spec, point_from(*cfg.z));
    const Vec4 c = r.representative.coords();
    out["reduction"] = {{"z", *cfg.z},
                        {"element", {{"k", r.element.k}, {"n", r.element.n}, {"m", r.element.m}}},
                        {"representative", {c[0], c[1], c[2], c[3]}}};
  }
  return out;
}

std::string render_export(const RunConfig& cfg) {
  const std::string format = cfg.format.empty() ? "" : cfg.format;
  const auto table = [&](const Table& t) { return format == "json" ? dump_json(t.to_json()) : t.to_csv(); };
  const auto json_only = [&](const Json& j) {
    if (format == "csv") throw ConfigError("format", cfg.subcommand + " is only available as json");
    return dump_json(j);
  };
  if (cfg.subcommand == "flow") return table(flow_table(cfg));
  if (cfg.subcommand == "leaf-metric") return table(leaf_metric_table(cfg));
  if (cfg.subcommand == "orbit") return table(orbit_table(cfg));
  if (cfg.subcommand == "limit-set") return json_only(limit_set_json(cfg));
  if (cfg.subcommand == "domain") return json_only(domain_json(cfg));
  throw ConfigError("export", "unknown export '" + cfg.subcommand + "'");
}

}  // namespace solfold::cli
