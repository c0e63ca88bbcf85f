#include <solfold/sol.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace solfold {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;

Eigen::Vector3d vec(const SolElement& g) { return {g.t, g.x, g.y}; }
Eigen::Vector4d vec(const LeafCoordinates& q) { return {q.t, q.x, q.y, q.s}; }

SolElement random_element(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return {u(rng), u(rng), u(rng)};
}

ProductPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {{2.0 * u(rng), std::exp(u(rng))}, {2.0 * u(rng), std::exp(u(rng))}};
}

TEST(SolGroup, ProductFormulaAndIdentity) {
  const SolElement g{1.0, 2.0, 3.0};
  const SolElement h{-0.5, 1.0, -1.0};
  const SolElement gh = sol_mul(g, h);
  EXPECT_DOUBLE_EQ(gh.t, 0.5);
  EXPECT_DOUBLE_EQ(gh.x, 2.0 + std::exp(1.0));
  EXPECT_DOUBLE_EQ(gh.y, 3.0 - std::exp(-1.0));
  EXPECT_EQ(sol_mul(g, SolElement{}), g);
  EXPECT_EQ(sol_mul(SolElement{}, g), g);
  EXPECT_LT((vec(sol_mul(sol_inverse(g), g)) - vec(SolElement{})).norm(), 1e-15);
}

TEST(SolGroup, NonAbelian) {
  const SolElement t{1.0, 0.0, 0.0};
  const SolElement x{0.0, 1.0, 0.0};
  EXPECT_FALSE(sol_mul(t, x) == sol_mul(x, t));
}

TEST(SolParamsTest, ValidatesParameters) {
  EXPECT_THROW(SolParams(1.0, 1, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(SolParams(-2.0, 1, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(SolParams(0.0, 1, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(SolParams(2.0, 1, 2, 2, 4), std::invalid_argument);
  EXPECT_THROW(SolParams(NAN, 1, 0, 0, 1), std::invalid_argument);
  EXPECT_NO_THROW(SolParams(0.5, 0, 1, 1, 0));
}

TEST(SolParamsTest, MatrixRepresentationLayout) {
  const SolParams p(2.0, 1.0, 2.0, 3.0, 4.0);
  const Eigen::Matrix3d m = sol_matrix_rep({1.0, 1.0, -1.0}, p);
  Eigen::Matrix3d expected;
  expected << 2.0, 0.0, -1.0, 0.0, 0.5, -1.0, 0.0, 0.0, 1.0;
  EXPECT_LT((m - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(SolParamsTest, StandardCoordinatesRoundTrip) {
  const SolParams p(3.0, 1.0, 0.5, -0.25, 1.0);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const SolElement g = random_element(rng);
    EXPECT_LT((vec(from_standard(p, to_standard(p, g))) - vec(g)).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(SolAction, ExplicitFormula) {
  const SolParams p(2.0, 1.0, 1.0, 0.0, 1.0);
  const ProductPoint z{{1.0, 1.0}, {-1.0, 2.0}};
  const ProductPoint w = sol_act(p, {1.0, 2.0, 3.0}, z);
  EXPECT_DOUBLE_EQ(w.z1.x(), 2.0 + 5.0);
  EXPECT_DOUBLE_EQ(w.z1.y(), 2.0);
  EXPECT_DOUBLE_EQ(w.z2.x(), -0.5 + 3.0);
  EXPECT_DOUBLE_EQ(w.z2.y(), 1.0);
}

TEST(SolLeaves, JacobianMatchesFiniteDifferences) {
  const SolParams p(2.5, 1.0, 0.5, -0.25, 1.0);
  std::mt19937_64 rng(2);
  const double h = 1e-6;
  for (int trial = 0; trial < 25; ++trial) {
    const ProductPoint z = random_point(rng);
    const SolElement g = random_element(rng);
    const Eigen::Matrix<double, 4, 3> j = leaf_jacobian(p, z, g);
    for (int c = 0; c < 3; ++c) {
      Eigen::Vector3d plus = vec(g), minus = vec(g);
      plus[c] += h;
      minus[c] -= h;
      const Vec4 fd = (leaf_embed(p, z, {plus[0], plus[1], plus[2]}).coords() -
                       leaf_embed(p, z, {minus[0], minus[1], minus[2]}).coords()) /
                      (2.0 * h);
      EXPECT_LT((fd - j.col(c)).cwiseAbs().maxCoeff(), 1e-7 * std::max(1.0, fd.cwiseAbs().maxCoeff()));
    }
  }
}

TEST(SolLeaves, NormalIsMetricOrthogonalToLeaf) {
  const SolParams p(2.0, 1.0, 0.0, 0.5, 2.0);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const ProductPoint z = random_point(rng);
    const SolElement g = random_element(rng);
    const ProductPoint w = leaf_embed(p, z, g);
    const TangentVector4 n = leaf_unit_normal(w);
    EXPECT_NEAR(metric_inner(HalfHyperbolicProduct{}, n, n), 1.0, 1e-14);
    const Eigen::Matrix<double, 4, 3> j = leaf_jacobian(p, z, g);
    for (int c = 0; c < 3; ++c) {
      const TangentVector4 v{w.coords(), j.col(c)};
      EXPECT_NEAR(metric_inner(HalfHyperbolicProduct{}, n, v), 0.0, 1e-12);
    }
  }
}

TEST(SolLeaves, ChartInvertsEmbedding) {
  const SolParams p(0.3, 2.0, 1.0, 1.0, 1.0);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const ProductPoint z = random_point(rng);
    const SolElement g = random_element(rng);
    EXPECT_LT((vec(leaf_chart(p, z, leaf_embed(p, z, g))) - vec(g)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(NormalFlow, ScalesImaginaryPartsAndIsAFlow) {
  const ProductPoint z{{0.5, 2.0}, {-1.0, 0.25}};
  const ProductPoint w = normal_flow(z, std::log(3.0));
  EXPECT_DOUBLE_EQ(w.z1.x(), 0.5);
  EXPECT_NEAR(w.z1.y(), 6.0, 1e-14);
  EXPECT_NEAR(w.z2.y(), 0.75, 1e-15);
  const Vec4 composed = normal_flow(normal_flow(z, 0.3), -1.1).coords();
  EXPECT_LT((composed - normal_flow(z, -0.8).coords()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_EQ(normal_flow(z, 0.0), z);
}

TEST(NormalFlow, MovesDistanceEqualToTime) {
  const ProductPoint z{{0.5, 2.0}, {-1.0, 0.25}};
  for (double s : {0.1, 0.7, 2.0}) EXPECT_NEAR(product_distance(z, normal_flow(z, s)), s, 1e-12);
}

TEST(Rectify, SpecialPointAndFormula) {
  const ProductPoint z0 = special_point();
  EXPECT_DOUBLE_EQ(z0.z1.y(), 1.0 / kSqrt2);
  const ProductPoint w = rectify({0.5, 1.0, -2.0, 0.25});
  EXPECT_DOUBLE_EQ(w.z1.x(), 1.0);
  EXPECT_NEAR(w.z1.y(), std::exp(0.75) / kSqrt2, 1e-15);
  EXPECT_DOUBLE_EQ(w.z2.x(), -2.0);
  EXPECT_NEAR(w.z2.y(), std::exp(-0.25) / kSqrt2, 1e-15);
  const ProductPoint v = rectify_isometric({0.5, 1.0, -2.0, 0.25});
  EXPECT_NEAR(v.z1.x(), std::exp(0.25), 1e-15);
  EXPECT_NEAR(v.z2.x(), -2.0 * std::exp(0.25), 1e-15);
}

TEST(Rectify, JacobiansMatchFiniteDifferences) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const double h = 1e-6;
  for (int trial = 0; trial < 25; ++trial) {
    const LeafCoordinates q{u(rng), u(rng), u(rng), u(rng)};
    const Eigen::Matrix4d j = rectify_jacobian(q);
    const Eigen::Matrix4d ji = rectify_isometric_jacobian(q);
    for (int c = 0; c < 4; ++c) {
      Eigen::Vector4d plus = vec(q), minus = vec(q);
      plus[c] += h;
      minus[c] -= h;
      const LeafCoordinates qp{plus[0], plus[1], plus[2], plus[3]};
      const LeafCoordinates qm{minus[0], minus[1], minus[2], minus[3]};
      const Vec4 fd = (rectify(qp).coords() - rectify(qm).coords()) / (2.0 * h);
      const Vec4 fdi = (rectify_isometric(qp).coords() - rectify_isometric(qm).coords()) / (2.0 * h);
      EXPECT_LT((fd - j.col(c)).cwiseAbs().maxCoeff(), 1e-8);
      EXPECT_LT((fdi - ji.col(c)).cwiseAbs().maxCoeff(), 1e-8);
    }
    EXPECT_GT(std::abs(j.determinant()), 0.0);
  }
}

TEST(Rectify, SlicesOfIsometricRectificationCarrySolMetric) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int trial = 0; trial < 25; ++trial) {
    const LeafCoordinates q{u(rng), u(rng), u(rng), u(rng)};
    const Eigen::Matrix4d j = rectify_isometric_jacobian(q);
    const Eigen::Matrix4d g = metric_matrix(HalfHyperbolicProduct{}, rectify_isometric(q).coords());
    const Eigen::Matrix4d pulled = j.transpose() * g * j;
    EXPECT_LT((pulled.topLeftCorner<3, 3>() - sol_metric(q.t)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(LeafMetric, RejectsNonImaginaryBase) {
  EXPECT_THROW(leaf_metric({{1.0, 1.0}, {0.0, 1.0}}, 0.0), std::invalid_argument);
  const Eigen::Matrix3d g = leaf_metric({{0.0, 2.0}, {0.0, 0.5}}, 0.0);
  EXPECT_DOUBLE_EQ(g(1, 1), 1.0 / 8.0);
  EXPECT_DOUBLE_EQ(g(2, 2), 2.0);
}

TEST(LeafIsometries, PreserveProductDistanceAndLeaves) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const LeafIsometry a{u(rng), u(rng), u(rng), u(rng)};
    const LeafCoordinates p{u(rng), u(rng), u(rng), u(rng)};
    const LeafCoordinates q{u(rng), u(rng), u(rng), p.s};
    const LeafCoordinates ap = sol_product_isometry(a, p);
    const LeafCoordinates aq = sol_product_isometry(a, q);
    EXPECT_NEAR(product_distance(rectify(ap), rectify(aq)), product_distance(rectify(p), rectify(q)), 1e-11);
    EXPECT_DOUBLE_EQ(ap.s, aq.s);

    const LeafIsometry b{u(rng), u(rng), u(rng), u(rng)};
    const LeafCoordinates lhs = sol_product_isometry(compose(a, b), p);
    const LeafCoordinates rhs = sol_product_isometry(a, sol_product_isometry(b, p));
    EXPECT_LT((vec(lhs) - vec(rhs)).cwiseAbs().maxCoeff(), 1e-13);

    const LeafCoordinates mapped = sol_product_isometry(isometry_between(p, q), p);
    EXPECT_LT((vec(mapped) - vec(q)).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(ShapeOperatorTest, SpectrumAndDirections) {
  const ShapeOperator so = shape_operator(0.3, -0.7);
  EXPECT_NEAR(so.principal_curvatures[0], -1.0, 1e-6);
  EXPECT_NEAR(so.principal_curvatures[1], -1.0, 1e-6);
  EXPECT_NEAR(so.principal_curvatures[2], 0.0, 1e-6);
  EXPECT_LT(so.normal_leakage, 1e-6);
  // The flat direction is d/dt.
  EXPECT_NEAR(std::abs(so.principal_directions.col(2).normalized()[0]), 1.0, 1e-6);
  EXPECT_THROW(shape_operator(0.0, 0.0, -1.0), std::invalid_argument);
}

TEST(Separation, NumericMatchesClosedForm) {
  EXPECT_DOUBLE_EQ(leaf_separation(-1.0, 1.0), 2.0);
  const SeparationResult r = leaf_separation_numeric(0.0, 0.5);
  EXPECT_EQ(r.status, SearchStatus::Converged);
  EXPECT_NEAR(r.distance, 0.5, 1e-4);
  EXPECT_NEAR(r.first.s, 0.0, 0.0);
  EXPECT_NEAR(r.second.s, 0.5, 0.0);
  EXPECT_NEAR(product_distance(rectify(r.first), rectify(r.second)), r.distance, 1e-12);
}

TEST(Separation, TinyBudgetIsReported) {
  EXPECT_EQ(leaf_separation_numeric(0.0, 1.0, 100).status, SearchStatus::BudgetExhausted);
}

}  // namespace
}  // namespace solfold
