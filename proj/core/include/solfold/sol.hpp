#pragma once

#include "solfold/geometry.hpp"
#include "solfold/search.hpp"

#include <Eigen/Dense>

#include <cstddef>

namespace solfold {

// Element (t, x, y) of Sol with product
// (t1, x1, y1) . (t2, x2, y2) = (t1 + t2, x1 + e^{t1} x2, y1 + e^{-t1} y2).
struct SolElement {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const SolElement&, const SolElement&) = default;
};

SolElement sol_mul(const SolElement& g, const SolElement& h);
SolElement sol_inverse(const SolElement& g);

// Matrix-representation parameters (lambda, M = [[a, b], [c, d]]). An element
// (t, x, y) is represented by
//   [[lambda^t, 0, a x + b y], [0, lambda^-t, c x + d y], [0, 0, 1]].
// Requires lambda > 0, lambda != 1 and det M != 0.
class SolParams {
 public:
  SolParams(double lambda, double a, double b, double c, double d);

  // lambda = e, M = identity: general and standard coordinates coincide.
  static SolParams standard();

  double lambda() const { return lambda_; }
  double log_lambda() const { return log_lambda_; }
  const Eigen::Matrix2d& translation_matrix() const { return m_; }

 private:
  double lambda_;
  double log_lambda_;
  Eigen::Matrix2d m_;
};

// Reparametrization from (lambda, M) coordinates to standard Sol coordinates:
// t -> t ln(lambda), (x, y) -> M (x, y).
SolElement to_standard(const SolParams& p, const SolElement& g);
SolElement from_standard(const SolParams& p, const SolElement& g);

// Group law in (lambda, M) coordinates, transported from the standard one.
SolElement sol_mul(const SolParams& p, const SolElement& g, const SolElement& h);

Eigen::Matrix3d sol_matrix_rep(const SolElement& g, const SolParams& p);

// (lambda^t z1 + a x + b y, lambda^-t z2 + c x + d y).
ProductPoint sol_act(const SolParams& p, const SolElement& g, const ProductPoint& z);

// Orbit map f_z(g) = g . z and its left inverse F with F(f_z(g)) = g.
ProductPoint leaf_embed(const SolParams& p, const ProductPoint& z, const SolElement& g);
SolElement leaf_chart(const SolParams& p, const ProductPoint& z, const ProductPoint& w);

// d f_z at g, rows (x1, y1, x2, y2), columns (t, x, y).
Eigen::Matrix<double, 4, 3> leaf_jacobian(const SolParams& p, const ProductPoint& z,
                                          const SolElement& g);

// Euclidean normal X = -ln(lambda) (lambda^-t y2 e2 + lambda^t y1 e4) at f_z(g),
// where (y1, y2) are the imaginary parts of z. Equals
// cross_r4(columns of leaf_jacobian) / det M.
TangentVector4 leaf_normal(const SolParams& p, const ProductPoint& z, const SolElement& g);

// Unit normal of the leaf through w for the half-hyperbolic product metric:
// y1 d/dy1 + y2 d/dy2, the generator of normal_flow.
TangentVector4 leaf_unit_normal(const ProductPoint& w);

// psi_s(z1, z2) = (x1, e^s y1, x2, e^s y2).
ProductPoint normal_flow(const ProductPoint& z, double s);

// ||psi_s(f_z(g)) - f_{psi_s(z)}(g)||_inf.
double flow_equivariance_defect(const SolParams& p, const ProductPoint& z, const SolElement& g,
                                double s);

// Coordinates (t, x, y, s) of Sol x R.
struct LeafCoordinates {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double s = 0.0;
};

// z0 = (i / sqrt 2, i / sqrt 2).
ProductPoint special_point();

// Psi(t, x, y, s) = psi_s(f_{z0}(t, x, y)) = (x, e^{t+s}/sqrt2, y, e^{s-t}/sqrt2), standard form.
ProductPoint rectify(const LeafCoordinates& q);
LeafCoordinates rectify_inverse(const ProductPoint& z);
// Rows (x1, y1, x2, y2), columns (t, x, y, s).
Eigen::Matrix4d rectify_jacobian(const LeafCoordinates& q);

// Psi~(t, x, y, s) = Psi(t, e^s x, e^s y, s); each slice s = const is an isometric copy of Sol.
ProductPoint rectify_isometric(const LeafCoordinates& q);
LeafCoordinates rectify_isometric_inverse(const ProductPoint& z);
Eigen::Matrix4d rectify_isometric_jacobian(const LeafCoordinates& q);

// Left-invariant Sol metric diag(1, e^{-2t}, e^{2t}) in (t, x, y).
Eigen::Matrix3d sol_metric(double t);

// Induced metric on the leaf through z = (y1 i, y2 i) at leaf parameter t:
// diag(1, e^{-2t} / (2 y1^2), e^{2t} / (2 y2^2)). Throws std::invalid_argument
// when z is not purely imaginary.
Eigen::Matrix3d leaf_metric(const ProductPoint& z, double t);

// Leaf-preserving isometry of H x H written in Psi coordinates:
// (t, x, y, s) -> (t + t', e^{t'+s'} x + x', e^{-t'+s'} y + y', s + s').
struct LeafIsometry {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double s = 0.0;
};

LeafCoordinates sol_product_isometry(const LeafIsometry& params, const LeafCoordinates& q);
// (outer o inner) as a single LeafIsometry.
LeafIsometry compose(const LeafIsometry& outer, const LeafIsometry& inner);
// The unique isometry of the family sending `from` to `to`.
LeafIsometry isometry_between(const LeafCoordinates& from, const LeafCoordinates& to);

// Distance between the leaves Psi(., s0) and Psi(., s1).
double leaf_separation(double s0, double s1);

struct SeparationResult {
  double distance = 0.0;
  SearchStatus status = SearchStatus::Converged;
  std::size_t evaluations = 0;
  LeafCoordinates first;   // minimizing point on leaf s0
  LeafCoordinates second;  // minimizing point on leaf s1
};

// Minimizes the product distance between Psi(t, x, y, s0) and Psi(t', x', y', s1)
// by a 5^6 grid over t, t' in [-3, 3] and x, y, x', y' in [-5, 5] followed by
// compass refinement down to a 1e-6 step.
SeparationResult leaf_separation_numeric(double s0, double s1, std::size_t budget = 100000);

struct ShapeOperator {
  // Shape operator v -> nabla_v X in the leaf basis (d/dt, d/dx, d/dy).
  Eigen::Matrix3d matrix;
  // Ascending.
  Eigen::Vector3d principal_curvatures;
  // Columns: principal directions in (t, x, y) coordinates, matching principal_curvatures.
  Eigen::Matrix3d principal_directions;
  // Largest component of nabla X normal to the leaf (should vanish).
  double normal_leakage = 0.0;
};

// Shape operator of the leaf (x, e^{-t-s}/sqrt2, y, e^{t-s}/sqrt2) at (t, s) with
// respect to the upward unit normal, via Christoffel symbols and central
// differences of step h. Throws std::runtime_error when halving the step
// changes the result by more than 1e-6.
ShapeOperator shape_operator(double t, double s, double h = kFirstDerivativeStep);

}  // namespace solfold
