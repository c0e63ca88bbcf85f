#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <functional>
#include <variant>

namespace solfold {

using Vec4 = Eigen::Vector4d;

// Central-difference steps used throughout the library.
inline constexpr double kFirstDerivativeStep = 1e-5;
inline constexpr double kSecondDerivativeStep = 1e-4;

// A point x + iy of the upper half plane. Construction throws
// std::invalid_argument unless y > 0 and both coordinates are finite.
class UpperHalfPoint {
 public:
  UpperHalfPoint(double x, double y);

  static UpperHalfPoint from_complex(std::complex<double> z) { return {z.real(), z.imag()}; }

  double x() const { return x_; }
  double y() const { return y_; }
  std::complex<double> as_complex() const { return {x_, y_}; }

  friend bool operator==(const UpperHalfPoint&, const UpperHalfPoint&) = default;

 private:
  double x_;
  double y_;
};

// (z1, z2) in H x H. Coordinates are ordered (x1, y1, x2, y2).
struct ProductPoint {
  UpperHalfPoint z1;
  UpperHalfPoint z2;

  Vec4 coords() const { return {z1.x(), z1.y(), z2.x(), z2.y()}; }
  static ProductPoint from_coords(const Vec4& c) { return {{c[0], c[1]}, {c[2], c[3]}}; }

  friend bool operator==(const ProductPoint&, const ProductPoint&) = default;
};

// (z, w) in C x H. Coordinates are ordered (Re z, Im z, p, q) with w = p + qi.
struct MixedPoint {
  std::complex<double> z;
  UpperHalfPoint w;

  Vec4 coords() const { return {z.real(), z.imag(), w.x(), w.y()}; }
  static MixedPoint from_coords(const Vec4& c) { return {{c[0], c[1]}, {c[2], c[3]}}; }

  friend bool operator==(const MixedPoint&, const MixedPoint&) = default;
};

// Tangent vector in R^4 coordinates e1..e4, attached to a base point.
struct TangentVector4 {
  Vec4 base;
  Vec4 components;
};

// (dx1^2 + dy1^2) / (2 y1^2) + (dx2^2 + dy2^2) / (2 y2^2) on H x H.
struct HalfHyperbolicProduct {};
// |dz|^2 + (dp^2 + dq^2) / q^2 on C x H.
struct EuclideanTimesHyperbolic {};
// dt^2 + e^{-2t}/(2 y1^2) dx^2 + e^{2t}/(2 y2^2) dy^2 in leaf coordinates (t, x, y).
struct LeafSolMetric {
  double y1;
  double y2;
};
// y0^2 dp^2 + dq^2 / y0^2 + dt^2 in Heisenberg coordinates (p, q, t).
struct HeisPullback {
  double y0;
};

using MetricSpec =
    std::variant<HalfHyperbolicProduct, EuclideanTimesHyperbolic, LeafSolMetric, HeisPullback>;

int metric_dimension(const MetricSpec& m);

// All supported metrics are diagonal in their coordinates. Both functions
// throw std::invalid_argument when the point is outside the metric's domain
// or the metric parameters are not strictly positive.
Eigen::VectorXd metric_diagonal(const MetricSpec& m, const Eigen::VectorXd& point);
Eigen::MatrixXd metric_matrix(const MetricSpec& m, const Eigen::VectorXd& point);

// g_p(u, v) for a four-dimensional metric; u and v must share their base point.
double metric_inner(const MetricSpec& m, const TangentVector4& u, const TangentVector4& v);

// Levi-Civita connection coefficients Gamma^k_ij, dimension <= 4.
class Christoffel {
 public:
  explicit Christoffel(int dim) : dim_(dim) { data_.fill(0.0); }

  int dim() const { return dim_; }
  double operator()(int k, int i, int j) const { return data_[index(k, i, j)]; }
  double& operator()(int k, int i, int j) { return data_[index(k, i, j)]; }

 private:
  static constexpr std::size_t index(int k, int i, int j) { return (k * 4 + i) * 4 + j; }

  int dim_;
  std::array<double, 64> data_{};
};

Christoffel christoffel(const MetricSpec& m, const Eigen::VectorXd& point);

using Curve = std::function<Eigen::VectorXd(double)>;

// ||c'' + Gamma(c', c')||_inf at parameter t, derivatives by central differences.
double geodesic_residual(const MetricSpec& m, const Curve& curve, double t,
                         double h = kSecondDerivativeStep);

// Riemannian length of curve on [a, b] by the midpoint rule.
double curve_length(const MetricSpec& m, const Curve& curve, double a, double b, int segments);

// Distance for the half-hyperbolic metric (dx^2 + dy^2) / (2 y^2):
// cosh(sqrt(2) rho) = 1 + (dx^2 + dy^2) / (2 y_p y_q).
double hyperbolic_distance_scaled(const UpperHalfPoint& p, const UpperHalfPoint& q);

// Distance for the standard metric (dx^2 + dy^2) / y^2.
double hyperbolic_distance(const UpperHalfPoint& p, const UpperHalfPoint& q);

// sqrt(rho1^2 + rho2^2) with rho_k the scaled hyperbolic distances.
double product_distance(const ProductPoint& p, const ProductPoint& q);

// Euclidean x standard hyperbolic product distance on C x H.
double mixed_distance(const MixedPoint& p, const MixedPoint& q);

// Triple cross product in R^4: the unique X with <X, a> = det[u; v; w; a] for
// every a. X is Euclidean-orthogonal to u, v, w and det[u; v; w; X] = |X|^2.
Vec4 cross_r4(const Vec4& u, const Vec4& v, const Vec4& w);
TangentVector4 cross_r4(const TangentVector4& u, const TangentVector4& v, const TangentVector4& w);

}  // namespace solfold
