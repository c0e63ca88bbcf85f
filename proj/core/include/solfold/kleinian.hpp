#pragma once

#include "solfold/geometry.hpp"
#include "solfold/sol.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace solfold {

using Complex = std::complex<double>;
using CVec3 = Eigen::Vector3cd;
using CMat3 = Eigen::Matrix3cd;

// Scales v to sup-norm 1 and rotates its first non-negligible coordinate
// (|v_i| > 1e-9) onto the positive real axis. Throws std::invalid_argument for v = 0.
CVec3 normalize_projective(const CVec3& v);

// [z1 : z2 : z3], stored normalized.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(const CVec3& homogeneous);
  ProjectivePoint(Complex z1, Complex z2, Complex z3) : ProjectivePoint(CVec3(z1, z2, z3)) {}

  const CVec3& coords() const { return v_; }

 private:
  CVec3 v_;
};

// Line {l1 z1 + l2 z2 + l3 z3 = 0} in dual coordinates, stored normalized.
class ProjectiveLine {
 public:
  explicit ProjectiveLine(const CVec3& dual);
  ProjectiveLine(Complex l1, Complex l2, Complex l3) : ProjectiveLine(CVec3(l1, l2, l3)) {}

  const CVec3& dual() const { return l_; }
  bool contains(const ProjectivePoint& p, double tol = 1e-9) const;
  // Sup-norm distance between normalized duals below tol.
  bool same_as(const ProjectiveLine& other, double tol = 1e-9) const;

 private:
  CVec3 l_;
};

// Throws std::invalid_argument when p and q coincide projectively.
ProjectiveLine line_through(const ProjectivePoint& p, const ProjectivePoint& q);
// Throws std::invalid_argument when the lines coincide.
ProjectivePoint intersection(const ProjectiveLine& a, const ProjectiveLine& b);
// |det[l1; l2; l3]| <= tol for the normalized duals.
bool lines_concurrent(const ProjectiveLine& a, const ProjectiveLine& b, const ProjectiveLine& c,
                      double tol = 1e-9);

// Projectivized kernel of a nonzero 3x3 matrix: empty, a point, or a line.
struct ProjectiveKernel {
  int dimension = 0;  // complex dimension of ker S
  std::optional<ProjectivePoint> point;
  std::optional<ProjectiveLine> line;
};

// Nonzero 3x3 complex matrix up to scale, stored with the same normalization
// as projective coordinates (row-major order decides the leading entry).
class PseudoProjectiveMap {
 public:
  explicit PseudoProjectiveMap(const CMat3& m);

  const CMat3& matrix() const { return m_; }
  // Singular values below rank_tol * sigma_max count as zero.
  int rank(double rank_tol) const;
  ProjectiveKernel kernel(double rank_tol) const;
  // Sup-norm distance between the normalized matrices.
  double distance(const PseudoProjectiveMap& other) const;

 private:
  CMat3 m_;
};

using IntMat2 = Eigen::Matrix<std::int64_t, 2, 2>;
using IntVec2 = Eigen::Matrix<std::int64_t, 2, 1>;

IntMat2 int_mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
IntMat2 int_inverse_sl2(const IntMat2& a);  // requires det = 1
IntMat2 int_pow(const IntMat2& a, std::int64_t k);  // requires det = 1 when k < 0

// Hyperbolic A in SL(2, Z) with its eigendata: lambda is the eigenvalue with
// |lambda| > 1 (negative when tr A < -2), P has eigenvector columns for lambda
// and 1/lambda, each scaled to sup-norm 1 with positive leading entry, so
// A P = P diag(lambda, 1/lambda). The translation lattice in conjugated
// coordinates is P^-1 Z^2 with basis the columns of P^-1.
class ToralGroupSpec {
 public:
  // Throws std::invalid_argument unless det A = 1 and |tr A| > 2.
  explicit ToralGroupSpec(const IntMat2& a);

  const IntMat2& A() const { return a_; }
  std::int64_t trace() const { return a_(0, 0) + a_(1, 1); }
  double lambda() const { return lambda_; }
  const Eigen::Matrix2d& P() const { return p_; }
  const Eigen::Matrix2d& P_inv() const { return p_inv_; }
  Eigen::Matrix2d lattice_basis() const { return p_inv_; }

 private:
  IntMat2 a_;
  double lambda_;
  Eigen::Matrix2d p_;
  Eigen::Matrix2d p_inv_;
};

// (k, n, m) <-> [[A^k, (n, m)], [0, 1]]; composition is that of Z^2 x|_A Z.
struct ToralElement {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;

  friend bool operator==(const ToralElement&, const ToralElement&) = default;
  friend auto operator<=>(const ToralElement&, const ToralElement&) = default;
};

ToralElement toral_compose(const ToralGroupSpec& spec, const ToralElement& g, const ToralElement& h);
ToralElement toral_inverse(const ToralGroupSpec& spec, const ToralElement& g);

enum class ToralForm { Integral, Conjugated };

using IntMat3 = Eigen::Matrix<std::int64_t, 3, 3>;

IntMat3 toral_integral_matrix(const ToralGroupSpec& spec, const ToralElement& g);
// Integral form, or its conjugate diag(P^-1, 1) M diag(P, 1) =
// [[lambda^k, 0, u], [0, lambda^-k, v], [0, 0, 1]] with (u, v) = P^-1 (n, m).
Eigen::Matrix3d toral_element(const ToralGroupSpec& spec, const ToralElement& g, ToralForm form);

struct WordBallEntry {
  ToralElement element;
  Eigen::Matrix3d matrix;
};

// All (k, n, m) with |k| + |n| + |m| <= n_max in lexicographic order.
std::vector<WordBallEntry> word_ball(const ToralGroupSpec& spec, int n_max,
                                     ToralForm form = ToralForm::Conjugated);

struct KernelLine {
  ProjectiveLine line;
  std::size_t cluster_size = 0;
};

struct KernelPoint {
  ProjectivePoint point;
  std::size_t cluster_size = 0;
};

struct LimitKernels {
  std::vector<KernelLine> lines;
  std::vector<KernelPoint> points;
  std::size_t limit_maps = 0;      // number of distinct limit maps after clustering
  std::size_t unconverged = 0;     // power sequences that failed to settle
};

// For every nonidentity g in the conjugated word ball, the limits of g^j and
// g^-j (j -> infinity) in pseudo-projective space, obtained by normalized
// repeated squaring. Limits within cluster_eps are merged, kernels are taken
// with rank_tol and lines are deduplicated (cluster sizes add). Sorted by dual
// coordinates. n_max = 0 yields an empty result.
LimitKernels pseudo_limit_kernels(const ToralGroupSpec& spec, int n_max, double cluster_eps = 1e-6,
                                  double rank_tol = 1e-8);

enum class LimitLineKind { LineAtInfinity, PencilZ1, PencilZ2, Other };

// LineAtInfinity: {z3 = 0}; PencilZ1: {z1 = r z3}, r real; PencilZ2: {z2 = r z3}, r real.
LimitLineKind classify_limit_line(const ProjectiveLine& line, double tol = 1e-8);

// {z3 = 0}, {z1 = 0}, {z2 = 0}.
std::vector<ProjectiveLine> analytic_limit_generators();

struct GeneralPositionResult {
  std::size_t k = 0;
  std::vector<std::size_t> witness;  // indices into the input
  bool exact = true;                 // false if the node budget ran out
};

// Largest subset of lines with no two equal and no three concurrent, by
// branch and bound over concurrency classes.
GeneralPositionResult general_position_max(const std::vector<ProjectiveLine>& lines,
                                           double tol = 1e-9, std::size_t node_budget = 5000000);

struct KulkarniMembership {
  bool in_omega = false;
  int sign_z1 = 0;  // sign of Im(z1 / z3) when in_omega
  int sign_z2 = 0;
};

// Conjugated coordinates: in the discontinuity region iff z3 != 0 and both
// affine coordinates z1/z3, z2/z3 have nonzero imaginary part.
KulkarniMembership kulkarni_membership(const ToralGroupSpec& spec, const ProjectivePoint& p,
                                       double tol = 1e-12);

// Product of closed intervals in (x1, y1, x2, y2), affine chart of the conjugated form.
struct AffineBox {
  double x1_lo, x1_hi, y1_lo, y1_hi, x2_lo, x2_hi, y2_lo, y2_hi;

  // Throws std::invalid_argument for reversed bounds or y_lo <= 0.
  void validate() const;
};

struct DiscontinuityCount {
  std::size_t count = 0;
  std::vector<ToralElement> intersecting;  // word-ball order
};

// Whether g(box) meets box for the conjugated action, intervals widened by 1e-12.
bool toral_box_meets_translate(const ToralGroupSpec& spec, const ToralElement& g,
                               const AffineBox& box);

DiscontinuityCount proper_discontinuity_count(const ToralGroupSpec& spec, const AffineBox& box,
                                              int n_max);

// (k, n, m) -> (k ln lambda, P^-1 (n, m)) in standard Sol coordinates.
// Throws std::domain_error when lambda < 0 (the group then swaps half-planes).
SolElement sol_lattice_embed(const ToralGroupSpec& spec, const ToralElement& g);

enum class IsoStatus { Found, NotFound, Refuted };
enum class IsoTarget { B, BInverse };

struct IsoResult {
  IsoStatus status = IsoStatus::NotFound;
  IntMat2 conjugator = IntMat2::Identity();
  IsoTarget target = IsoTarget::B;
};

// Searches U in GL(2, Z) with entries in [-bound, bound] and U A U^-1 in
// {B, B^-1}. Refuted when the traces differ. Any returned conjugator has been
// verified in exact integer arithmetic. Throws std::invalid_argument unless
// both matrices are hyperbolic with det 1.
IsoResult lattice_iso_test(const IntMat2& a, const IntMat2& b, std::int64_t bound = 50);

struct DomainReduction {
  ToralElement element;
  ProductPoint representative;
};

// Picks k with lambda^k y1 in [1, lambda), then reduces the real parts modulo
// the conjugated lattice into P^-1 [0, 1)^2. The representative is
// sol_act(sol_lattice_embed(element), z). Requires lambda > 0.
DomainReduction fundamental_domain_reduce(const ToralGroupSpec& spec, const ProductPoint& z);

// Number of orbits of the group on the four sign components H+- x H+- of the
// discontinuity region.
int toral_component_count(const ToralGroupSpec& spec);

}  // namespace solfold
