#include "solfold/sol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace solfold {

namespace {

const double kSqrt2 = std::sqrt(2.0);

double max_abs_diff(const ProductPoint& a, const ProductPoint& b) {
  return (a.coords() - b.coords()).cwiseAbs().maxCoeff();
}

// Shape operator at one step size, without the step-halving check.
ShapeOperator shape_operator_at_step(double t, double s, double h) {
  const auto leaf = [s](double tt, double x, double y) -> Vec4 {
    return {x, std::exp(-tt - s) / kSqrt2, y, std::exp(tt - s) / kSqrt2};
  };
  const auto unit_normal = [](const Vec4& p) -> Vec4 { return {0.0, p[1], 0.0, p[3]}; };

  const Vec4 p = leaf(t, 0.0, 0.0);
  Eigen::Matrix<double, 4, 3> basis;
  basis.col(0) = (leaf(t + h, 0.0, 0.0) - leaf(t - h, 0.0, 0.0)) / (2.0 * h);
  basis.col(1) = (leaf(t, h, 0.0) - leaf(t, -h, 0.0)) / (2.0 * h);
  basis.col(2) = (leaf(t, 0.0, h) - leaf(t, 0.0, -h)) / (2.0 * h);

  const MetricSpec metric = HalfHyperbolicProduct{};
  const Christoffel gamma = christoffel(metric, p);
  const Vec4 normal = unit_normal(p);

  Eigen::Matrix<double, 4, 3> nabla;
  for (int c = 0; c < 3; ++c) {
    const Vec4 b = basis.col(c);
    Vec4 v = (unit_normal(p + h * b) - unit_normal(p - h * b)) / (2.0 * h);
    for (int k = 0; k < 4; ++k) {
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) v[k] += gamma(k, i, j) * b[i] * normal[j];
      }
    }
    nabla.col(c) = v;
  }

  ShapeOperator out;
  out.matrix = basis.colPivHouseholderQr().solve(nabla);
  out.normal_leakage = (basis * out.matrix - nabla).cwiseAbs().maxCoeff();

  // Self-adjoint with respect to the induced metric G = B^T g B; with G = L L^T
  // the matrix L^T S L^{-T} is symmetric.
  const Eigen::Matrix4d g = metric_matrix(metric, p);
  const Eigen::Matrix3d induced = basis.transpose() * g * basis;
  const Eigen::LLT<Eigen::Matrix3d> llt(induced);
  const Eigen::Matrix3d lower = llt.matrixL();
  const Eigen::Matrix3d lower_t_inv = lower.transpose().inverse();
  Eigen::Matrix3d sym = lower.transpose() * out.matrix * lower_t_inv;
  sym = 0.5 * (sym + sym.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver;
  solver.computeDirect(sym);
  out.principal_curvatures = solver.eigenvalues();
  out.principal_directions = lower_t_inv * solver.eigenvectors();
  return out;
}

}  // namespace

SolElement sol_mul(const SolElement& g, const SolElement& h) {
  return {g.t + h.t, g.x + std::exp(g.t) * h.x, g.y + std::exp(-g.t) * h.y};
}

SolElement sol_inverse(const SolElement& g) {
  return {-g.t, -std::exp(-g.t) * g.x, -std::exp(g.t) * g.y};
}

SolParams::SolParams(double lambda, double a, double b, double c, double d) : lambda_(lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda) || lambda == 1.0) {
    throw std::invalid_argument("SolParams: lambda must be positive and different from 1");
  }
  m_ << a, b, c, d;
  if (!m_.allFinite() || m_.determinant() == 0.0) {
    throw std::invalid_argument("SolParams: translation matrix [[a, b], [c, d]] is degenerate");
  }
  log_lambda_ = std::log(lambda);
}

SolParams SolParams::standard() { return SolParams(std::exp(1.0), 1.0, 0.0, 0.0, 1.0); }

SolElement to_standard(const SolParams& p, const SolElement& g) {
  const Eigen::Vector2d v = p.translation_matrix() * Eigen::Vector2d(g.x, g.y);
  return {g.t * p.log_lambda(), v[0], v[1]};
}

SolElement from_standard(const SolParams& p, const SolElement& g) {
  const Eigen::Vector2d v = p.translation_matrix().inverse() * Eigen::Vector2d(g.x, g.y);
  return {g.t / p.log_lambda(), v[0], v[1]};
}

SolElement sol_mul(const SolParams& p, const SolElement& g, const SolElement& h) {
  return from_standard(p, sol_mul(to_standard(p, g), to_standard(p, h)));
}

Eigen::Matrix3d sol_matrix_rep(const SolElement& g, const SolParams& p) {
  const SolElement s = to_standard(p, g);
  Eigen::Matrix3d m;
  m << std::exp(s.t), 0.0, s.x,
       0.0, std::exp(-s.t), s.y,
       0.0, 0.0, 1.0;
  return m;
}

ProductPoint sol_act(const SolParams& p, const SolElement& g, const ProductPoint& z) {
  const SolElement s = to_standard(p, g);
  const double up = std::exp(s.t);
  const double down = std::exp(-s.t);
  return {{up * z.z1.x() + s.x, up * z.z1.y()}, {down * z.z2.x() + s.y, down * z.z2.y()}};
}

ProductPoint leaf_embed(const SolParams& p, const ProductPoint& z, const SolElement& g) {
  return sol_act(p, g, z);
}

SolElement leaf_chart(const SolParams& p, const ProductPoint& z, const ProductPoint& w) {
  const double ratio = w.z1.y() / z.z1.y();  // lambda^t
  const double t = std::log(ratio) / p.log_lambda();
  const Eigen::Vector2d rhs(w.z1.x() - ratio * z.z1.x(), w.z2.x() - z.z2.x() / ratio);
  const Eigen::Vector2d xy = p.translation_matrix().inverse() * rhs;
  return {t, xy[0], xy[1]};
}

Eigen::Matrix<double, 4, 3> leaf_jacobian(const SolParams& p, const ProductPoint& z,
                                          const SolElement& g) {
  const double ln = p.log_lambda();
  const double up = std::exp(g.t * ln);
  const double down = 1.0 / up;
  const Eigen::Matrix2d& m = p.translation_matrix();
  Eigen::Matrix<double, 4, 3> j;
  j << ln * up * z.z1.x(), m(0, 0), m(0, 1),
       ln * up * z.z1.y(), 0.0, 0.0,
       -ln * down * z.z2.x(), m(1, 0), m(1, 1),
       -ln * down * z.z2.y(), 0.0, 0.0;
  return j;
}

TangentVector4 leaf_normal(const SolParams& p, const ProductPoint& z, const SolElement& g) {
  const double ln = p.log_lambda();
  const double up = std::exp(g.t * ln);
  const Vec4 x{0.0, -ln * z.z2.y() / up, 0.0, -ln * up * z.z1.y()};
  return {leaf_embed(p, z, g).coords(), x};
}

TangentVector4 leaf_unit_normal(const ProductPoint& w) {
  return {w.coords(), Vec4(0.0, w.z1.y(), 0.0, w.z2.y())};
}

ProductPoint normal_flow(const ProductPoint& z, double s) {
  const double k = std::exp(s);
  return {{z.z1.x(), k * z.z1.y()}, {z.z2.x(), k * z.z2.y()}};
}

double flow_equivariance_defect(const SolParams& p, const ProductPoint& z, const SolElement& g,
                                double s) {
  return max_abs_diff(normal_flow(leaf_embed(p, z, g), s), leaf_embed(p, normal_flow(z, s), g));
}

ProductPoint special_point() { return {{0.0, 1.0 / kSqrt2}, {0.0, 1.0 / kSqrt2}}; }

ProductPoint rectify(const LeafCoordinates& q) {
  return normal_flow(leaf_embed(SolParams::standard(), special_point(), {q.t, q.x, q.y}), q.s);
}

LeafCoordinates rectify_inverse(const ProductPoint& z) {
  const double a = std::log(kSqrt2 * z.z1.y());  // t + s
  const double b = std::log(kSqrt2 * z.z2.y());  // s - t
  return {0.5 * (a - b), z.z1.x(), z.z2.x(), 0.5 * (a + b)};
}

Eigen::Matrix4d rectify_jacobian(const LeafCoordinates& q) {
  const double up = std::exp(q.t + q.s) / kSqrt2;
  const double down = std::exp(q.s - q.t) / kSqrt2;
  Eigen::Matrix4d j;
  j << 0.0, 1.0, 0.0, 0.0,
       up, 0.0, 0.0, up,
       0.0, 0.0, 1.0, 0.0,
       -down, 0.0, 0.0, down;
  return j;
}

ProductPoint rectify_isometric(const LeafCoordinates& q) {
  const double k = std::exp(q.s);
  return rectify({q.t, k * q.x, k * q.y, q.s});
}

LeafCoordinates rectify_isometric_inverse(const ProductPoint& z) {
  LeafCoordinates q = rectify_inverse(z);
  const double k = std::exp(-q.s);
  q.x *= k;
  q.y *= k;
  return q;
}

Eigen::Matrix4d rectify_isometric_jacobian(const LeafCoordinates& q) {
  const double k = std::exp(q.s);
  const double up = std::exp(q.t + q.s) / kSqrt2;
  const double down = std::exp(q.s - q.t) / kSqrt2;
  Eigen::Matrix4d j;
  j << 0.0, k, 0.0, k * q.x,
       up, 0.0, 0.0, up,
       0.0, 0.0, k, k * q.y,
       -down, 0.0, 0.0, down;
  return j;
}

Eigen::Matrix3d sol_metric(double t) {
  return Eigen::Vector3d(1.0, std::exp(-2.0 * t), std::exp(2.0 * t)).asDiagonal();
}

Eigen::Matrix3d leaf_metric(const ProductPoint& z, double t) {
  if (z.z1.x() != 0.0 || z.z2.x() != 0.0) {
    throw std::invalid_argument("leaf_metric: base point must be purely imaginary");
  }
  return metric_matrix(LeafSolMetric{z.z1.y(), z.z2.y()}, Eigen::Vector3d(t, 0.0, 0.0));
}

LeafCoordinates sol_product_isometry(const LeafIsometry& a, const LeafCoordinates& q) {
  return {q.t + a.t, std::exp(a.t + a.s) * q.x + a.x, std::exp(-a.t + a.s) * q.y + a.y, q.s + a.s};
}

LeafIsometry compose(const LeafIsometry& outer, const LeafIsometry& inner) {
  return {inner.t + outer.t, std::exp(outer.t + outer.s) * inner.x + outer.x,
          std::exp(-outer.t + outer.s) * inner.y + outer.y, inner.s + outer.s};
}

LeafIsometry isometry_between(const LeafCoordinates& from, const LeafCoordinates& to) {
  const double dt = to.t - from.t;
  const double ds = to.s - from.s;
  return {dt, to.x - std::exp(dt + ds) * from.x, to.y - std::exp(-dt + ds) * from.y, ds};
}

double leaf_separation(double s0, double s1) { return std::abs(s1 - s0); }

SeparationResult leaf_separation_numeric(double s0, double s1, std::size_t budget) {
  const Objective squared_distance = [s0, s1](std::span<const double> v) {
    const double d = product_distance(rectify({v[0], v[1], v[2], s0}), rectify({v[3], v[4], v[5], s1}));
    return d * d;
  };
  SearchBox box;
  box.lower = {-3.0, -5.0, -5.0, -3.0, -5.0, -5.0};
  box.upper = {3.0, 5.0, 5.0, 3.0, 5.0, 5.0};
  box.points_per_axis = 5;
  const SearchResult r = grid_compass_minimize(squared_distance, box, 1e-6, budget);

  SeparationResult out;
  out.status = r.status;
  out.evaluations = r.evaluations;
  if (!r.argmin.empty()) {
    out.distance = std::sqrt(r.value);
    out.first = {r.argmin[0], r.argmin[1], r.argmin[2], s0};
    out.second = {r.argmin[3], r.argmin[4], r.argmin[5], s1};
  }
  return out;
}

ShapeOperator shape_operator(double t, double s, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("shape_operator: step must be > 0");
  const ShapeOperator coarse = shape_operator_at_step(t, s, h);
  const ShapeOperator fine = shape_operator_at_step(t, s, 0.5 * h);
  const double drift = (coarse.matrix - fine.matrix).cwiseAbs().maxCoeff();
  if (!(drift <= 1e-6)) {
    throw std::runtime_error("shape_operator: finite differences did not converge");
  }
  return fine;
}

}  // namespace solfold
