#include "solfold/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace solfold {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite and > 0");
  }
}

void require_dimension(const MetricSpec& m, const Eigen::VectorXd& point) {
  if (point.size() != metric_dimension(m)) {
    throw std::invalid_argument("point dimension does not match metric");
  }
  for (Eigen::Index i = 0; i < point.size(); ++i) {
    if (!std::isfinite(point[i])) throw std::invalid_argument("point has non-finite coordinates");
  }
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// dg(i, k) = d g_ii / d x_k.
Eigen::MatrixXd diagonal_gradient(const MetricSpec& m, const Eigen::VectorXd& p) {
  const Eigen::VectorXd g = metric_diagonal(m, p);
  const int n = metric_dimension(m);
  Eigen::MatrixXd dg = Eigen::MatrixXd::Zero(n, n);
  std::visit(overloaded{
                 [&](const HalfHyperbolicProduct&) {
                   const double d1 = -1.0 / (p[1] * p[1] * p[1]);
                   const double d2 = -1.0 / (p[3] * p[3] * p[3]);
                   dg(0, 1) = d1;
                   dg(1, 1) = d1;
                   dg(2, 3) = d2;
                   dg(3, 3) = d2;
                 },
                 [&](const EuclideanTimesHyperbolic&) {
                   const double d = -2.0 / (p[3] * p[3] * p[3]);
                   dg(2, 3) = d;
                   dg(3, 3) = d;
                 },
                 [&](const LeafSolMetric&) {
                   dg(1, 0) = -2.0 * g[1];
                   dg(2, 0) = 2.0 * g[2];
                 },
                 [&](const HeisPullback&) {},
             },
             m);
  return dg;
}

}  // namespace

UpperHalfPoint::UpperHalfPoint(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x)) throw std::invalid_argument("upper half point: x must be finite");
  require_positive(y, "upper half point: y");
}

int metric_dimension(const MetricSpec& m) {
  return std::visit(overloaded{
                        [](const HalfHyperbolicProduct&) { return 4; },
                        [](const EuclideanTimesHyperbolic&) { return 4; },
                        [](const LeafSolMetric&) { return 3; },
                        [](const HeisPullback&) { return 3; },
                    },
                    m);
}

Eigen::VectorXd metric_diagonal(const MetricSpec& m, const Eigen::VectorXd& p) {
  require_dimension(m, p);
  return std::visit(
      overloaded{
          [&](const HalfHyperbolicProduct&) -> Eigen::VectorXd {
            require_positive(p[1], "y1");
            require_positive(p[3], "y2");
            const double g1 = 1.0 / (2.0 * p[1] * p[1]);
            const double g2 = 1.0 / (2.0 * p[3] * p[3]);
            return Eigen::Vector4d(g1, g1, g2, g2);
          },
          [&](const EuclideanTimesHyperbolic&) -> Eigen::VectorXd {
            require_positive(p[3], "Im w");
            const double g = 1.0 / (p[3] * p[3]);
            return Eigen::Vector4d(1.0, 1.0, g, g);
          },
          [&](const LeafSolMetric& leaf) -> Eigen::VectorXd {
            require_positive(leaf.y1, "leaf metric y1");
            require_positive(leaf.y2, "leaf metric y2");
            const double t = p[0];
            return Eigen::Vector3d(1.0, std::exp(-2.0 * t) / (2.0 * leaf.y1 * leaf.y1),
                                   std::exp(2.0 * t) / (2.0 * leaf.y2 * leaf.y2));
          },
          [&](const HeisPullback& heis) -> Eigen::VectorXd {
            require_positive(heis.y0, "pullback y0");
            return Eigen::Vector3d(heis.y0 * heis.y0, 1.0 / (heis.y0 * heis.y0), 1.0);
          },
      },
      m);
}

Eigen::MatrixXd metric_matrix(const MetricSpec& m, const Eigen::VectorXd& point) {
  return metric_diagonal(m, point).asDiagonal();
}

double metric_inner(const MetricSpec& m, const TangentVector4& u, const TangentVector4& v) {
  if (metric_dimension(m) != 4) {
    throw std::invalid_argument("metric_inner expects a four-dimensional metric");
  }
  if (u.base != v.base) throw std::invalid_argument("tangent vectors have different base points");
  const Eigen::VectorXd g = metric_diagonal(m, u.base);
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += g[i] * u.components[i] * v.components[i];
  return acc;
}

Christoffel christoffel(const MetricSpec& m, const Eigen::VectorXd& point) {
  const Eigen::VectorXd g = metric_diagonal(m, point);
  const Eigen::MatrixXd dg = diagonal_gradient(m, point);
  const int n = metric_dimension(m);
  Christoffel gamma(n);
  // Diagonal metric: Gamma^k_ij = (d_i g_kk delta_jk + d_j g_kk delta_ik - d_k g_ii delta_ij) / (2 g_kk)
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double num = 0.0;
        if (j == k) num += dg(k, i);
        if (i == k) num += dg(k, j);
        if (i == j) num -= dg(i, k);
        gamma(k, i, j) = num / (2.0 * g[k]);
      }
    }
  }
  return gamma;
}

double geodesic_residual(const MetricSpec& m, const Curve& curve, double t, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("geodesic_residual: step must be > 0");
  const Eigen::VectorXd c0 = curve(t);
  const Eigen::VectorXd cp = curve(t + h);
  const Eigen::VectorXd cm = curve(t - h);
  // Validates that all three samples lie in the metric's domain.
  metric_diagonal(m, cp);
  metric_diagonal(m, cm);
  const Christoffel gamma = christoffel(m, c0);

  const Eigen::VectorXd vel = (cp - cm) / (2.0 * h);
  const Eigen::VectorXd acc = (cp - 2.0 * c0 + cm) / (h * h);
  const int n = gamma.dim();
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    double r = acc[k];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) r += gamma(k, i, j) * vel[i] * vel[j];
    }
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double curve_length(const MetricSpec& m, const Curve& curve, double a, double b, int segments) {
  if (segments < 1) throw std::invalid_argument("curve_length: segments must be >= 1");
  const double dt = (b - a) / segments;
  const double h = kFirstDerivativeStep * std::max(1.0, std::abs(b - a));
  double length = 0.0;
  for (int s = 0; s < segments; ++s) {
    const double t = a + (s + 0.5) * dt;
    const Eigen::VectorXd vel = (curve(t + h) - curve(t - h)) / (2.0 * h);
    const Eigen::VectorXd g = metric_diagonal(m, curve(t));
    length += std::sqrt(g.dot(vel.cwiseProduct(vel))) * std::abs(dt);
  }
  return length;
}

double hyperbolic_distance(const UpperHalfPoint& p, const UpperHalfPoint& q) {
  // cosh d = 1 + r^2 / (2 y y')  <=>  sinh(d / 2) = r / (2 sqrt(y y')).
  const double r = std::hypot(p.x() - q.x(), p.y() - q.y());
  return 2.0 * std::asinh(r / (2.0 * std::sqrt(p.y() * q.y())));
}

double hyperbolic_distance_scaled(const UpperHalfPoint& p, const UpperHalfPoint& q) {
  return hyperbolic_distance(p, q) / std::sqrt(2.0);
}

double product_distance(const ProductPoint& p, const ProductPoint& q) {
  return std::hypot(hyperbolic_distance_scaled(p.z1, q.z1), hyperbolic_distance_scaled(p.z2, q.z2));
}

double mixed_distance(const MixedPoint& p, const MixedPoint& q) {
  return std::hypot(std::abs(p.z - q.z), hyperbolic_distance(p.w, q.w));
}

Vec4 cross_r4(const Vec4& u, const Vec4& v, const Vec4& w) {
  Eigen::Matrix<double, 3, 4> rows;
  rows.row(0) = u.transpose();
  rows.row(1) = v.transpose();
  rows.row(2) = w.transpose();
  Vec4 out;
  for (int i = 0; i < 4; ++i) {
    Eigen::Matrix3d minor;
    for (int c = 0, col = 0; c < 4; ++c) {
      if (c == i) continue;
      minor.col(col++) = rows.col(c);
    }
    // Cofactor of the last row in det[u; v; w; e].
    out[i] = ((i % 2 == 0) ? -1.0 : 1.0) * minor.determinant();
  }
  return out;
}

TangentVector4 cross_r4(const TangentVector4& u, const TangentVector4& v, const TangentVector4& w) {
  if (u.base != v.base || u.base != w.base) {
    throw std::invalid_argument("cross_r4: tangent vectors have different base points");
  }
  return {u.base, cross_r4(u.components, v.components, w.components)};
}

}  // namespace solfold
