#include "solfold_cli/suites.hpp"

#include <solfold/heisenberg.hpp>
#include <solfold/kleinian.hpp>
#include <solfold/quotient.hpp>
#include <solfold/sol.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace solfold::cli {

namespace {

class Collector {
 public:
  explicit Collector(double tol_scale) : tol_scale_(tol_scale) {}

  void tolerance(std::string name, double residual, double base, std::string ref) {
    const double threshold = base / tol_scale_;
    checks_.push_back({std::move(name), residual, threshold,
                       std::isfinite(residual) && residual <= threshold, std::move(ref)});
  }

  void exact(std::string name, double residual, std::string ref) {
    checks_.push_back({std::move(name), residual, 0.0, residual == 0.0, std::move(ref)});
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  double tol_scale_;
  std::vector<Check> checks_;
};

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    rng_.seed(seq);
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  SolElement sol_element() { return {uniform(-2.0, 2.0), uniform(-3.0, 3.0), uniform(-3.0, 3.0)}; }
  UpperHalfPoint half_plane() { return {uniform(-3.0, 3.0), std::exp(uniform(-1.0, 1.0))}; }
  ProductPoint product_point() { return {half_plane(), half_plane()}; }
  MixedPoint mixed_point() { return {{uniform(-3.0, 3.0), uniform(-3.0, 3.0)}, half_plane()}; }
  HeisElement heis_element() { return {uniform(-3.0, 3.0), uniform(-3.0, 3.0), uniform(-3.0, 3.0)}; }

 private:
  std::mt19937_64 rng_;
};

template <class A, class B>
double relative_gap(const A& a, const B& b) {
  const double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

Eigen::Vector3d vec(const SolElement& g) { return {g.t, g.x, g.y}; }
Eigen::Vector3d vec(const HeisElement& g) { return {g.a, g.b, g.c}; }
Eigen::Vector4d vec(const LeafCoordinates& q) { return {q.t, q.x, q.y, q.s}; }

const std::array<std::pair<double, double>, 4> kSeparationPairs{
    {{0.0, 0.5}, {0.0, 1.0}, {0.0, 2.0}, {-1.0, 1.0}}};

// Brute force for g K ∩ K, K = [0, 1]^3, over the grid (1/12) Z^3 in exact
// integers. The intersection is a polytope whose vertices lie on this grid
// whenever |g.a| <= 4.
bool heis_unit_cube_meets_brute(const HeisLatticeElement& g) {
  constexpr std::int64_t m = 12;
  const auto inside = [](std::int64_t v) { return v >= 0 && v <= m; };
  for (std::int64_t a = 0; a <= m; ++a) {
    for (std::int64_t b = 0; b <= m; ++b) {
      for (std::int64_t c = 0; c <= m; ++c) {
        // m * (g . (a, b, c) / m) = (a + m ga, b + m gb, c + m gc + ga b).
        if (inside(a + m * g.a) && inside(b + m * g.b) && inside(c + m * g.c + g.a * b)) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<Check> sol_checks(const RunConfig& cfg) {
  Collector out(cfg.tol_scale);
  Sampler rnd(cfg.seed, 1);
  const SolParams p(cfg.lambda, 1.0, 0.5, -0.25, 1.0);
  const SolParams standard = SolParams::standard();

  double axioms = 0.0, homomorphism = 0.0, action = 0.0, equivariance = 0.0, chart = 0.0;
  double normal = 0.0, rectify_rt = 0.0, rectify_iso_rt = 0.0, pullback = 0.0;
  double geodesic = 0.0, speed = 0.0;
  double not_free = 0.0;
  const SolElement identity{};
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const SolElement g = rnd.sol_element();
    const SolElement h = rnd.sol_element();
    const SolElement k = rnd.sol_element();
    const ProductPoint z = rnd.product_point();
    const double s = rnd.uniform(-2.0, 2.0);

    axioms = std::max({axioms, relative_gap(vec(sol_mul(sol_mul(g, h), k)), vec(sol_mul(g, sol_mul(h, k)))),
                       relative_gap(vec(sol_mul(g, sol_inverse(g))), vec(identity))});
    homomorphism = std::max(homomorphism, relative_gap(sol_matrix_rep(sol_mul(p, g, h), p),
                                                       Eigen::Matrix3d(sol_matrix_rep(g, p) * sol_matrix_rep(h, p))));
    action = std::max(action, relative_gap(sol_act(p, sol_mul(p, g, h), z).coords(),
                                           sol_act(p, g, sol_act(p, h, z)).coords()));
    if (!((sol_act(p, g, z).coords() - z.coords()).cwiseAbs().maxCoeff() > 0.0)) not_free += 1.0;
    equivariance = std::max(equivariance, flow_equivariance_defect(p, z, g, s));
    chart = std::max(chart, relative_gap(vec(leaf_chart(p, z, leaf_embed(p, z, g))), vec(g)));

    const Eigen::Matrix<double, 4, 3> j = leaf_jacobian(p, z, g);
    const Vec4 cross = cross_r4(Vec4(j.col(0)), Vec4(j.col(1)), Vec4(j.col(2)));
    normal = std::max(normal, relative_gap(cross, Vec4(p.translation_matrix().determinant() *
                                                       leaf_normal(p, z, g).components)));

    const LeafCoordinates q{rnd.uniform(-2.0, 2.0), rnd.uniform(-5.0, 5.0), rnd.uniform(-5.0, 5.0),
                            rnd.uniform(-2.0, 2.0)};
    rectify_rt = std::max({rectify_rt, relative_gap(vec(rectify_inverse(rectify(q))), vec(q)),
                           relative_gap(rectify(rectify_inverse(z)).coords(), z.coords())});
    rectify_iso_rt = std::max(rectify_iso_rt,
                              relative_gap(vec(rectify_isometric_inverse(rectify_isometric(q))), vec(q)));

    const ProductPoint base{{0.0, z.z1.y()}, {0.0, z.z2.y()}};
    const SolElement on_leaf{q.t, q.x, q.y};
    const Eigen::Matrix<double, 4, 3> jl = leaf_jacobian(standard, base, on_leaf);
    const Eigen::Matrix4d gm = metric_matrix(HalfHyperbolicProduct{}, leaf_embed(standard, base, on_leaf).coords());
    pullback = std::max(pullback, relative_gap(Eigen::Matrix3d(jl.transpose() * gm * jl), leaf_metric(base, q.t)));

    const double t = rnd.uniform(-1.0, 1.0);
    const Curve flow = [&](double u) -> Eigen::VectorXd { return normal_flow(z, u).coords(); };
    geodesic = std::max(geodesic, geodesic_residual(HalfHyperbolicProduct{}, flow, t));
    const TangentVector4 v = leaf_unit_normal(normal_flow(z, t));
    speed = std::max(speed, std::abs(std::sqrt(metric_inner(HalfHyperbolicProduct{}, v, v)) - 1.0));
  }

  double sol_metric_gap = 0.0;
  for (int i = -8; i <= 8; ++i) {
    const double t = 0.25 * i;
    sol_metric_gap = std::max(sol_metric_gap, relative_gap(leaf_metric(special_point(), t), sol_metric(t)));
  }

  double curvature = 0.0;
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      const ShapeOperator so = shape_operator(-1.0 + 0.5 * a, -1.0 + 0.5 * b);
      curvature = std::max({curvature, std::abs(so.principal_curvatures[0] + 1.0),
                            std::abs(so.principal_curvatures[1] + 1.0),
                            std::abs(so.principal_curvatures[2])});
    }
  }
  double separation = 0.0;
  for (const auto& [s0, s1] : kSeparationPairs) {
    const SeparationResult r = leaf_separation_numeric(s0, s1);
    separation = std::max(separation, r.status == SearchStatus::Converged
                                          ? std::abs(r.distance - leaf_separation(s0, s1))
                                          : INFINITY);
  }

  out.tolerance("sol.group_axioms", axioms, 1e-12, "associativity and inverses of the Sol product");
  out.tolerance("sol.matrix_homomorphism", homomorphism, 1e-12,
                "matrix representation with parameters (lambda, M) respects the product");
  out.tolerance("sol.action_axiom", action, 1e-12, "Sol acts on H x H through (lambda, M) coordinates");
  out.exact("sol.action_free", not_free, "the Sol action on H x H has trivial stabilizers");
  out.tolerance("sol.leaf_chart_round_trip", chart, 1e-12, "orbit maps have a continuous left inverse");
  out.tolerance("sol.normal_cross_product", normal, 1e-12,
                "the leaf normal is the triple cross product of the Jacobian columns");
  out.tolerance("sol.flow_equivariance", equivariance, 1e-12,
                "the normal flow commutes with the leaf embeddings");
  out.tolerance("sol.flow_geodesic_residual", geodesic, 1e-6, "normal flow lines are geodesics");
  out.tolerance("sol.flow_unit_speed", speed, 1e-10, "normal flow lines have unit speed");
  out.tolerance("sol.rectify_round_trip", rectify_rt, 1e-12, "the rectifying map is a bijection");
  out.tolerance("sol.rectify_isometric_round_trip", rectify_iso_rt, 1e-12,
                "the leafwise isometric rectification is a bijection");
  out.tolerance("sol.leaf_metric_pullback", pullback, 1e-10,
                "induced leaf metric dt^2 + e^-2t/(2y1^2) dx^2 + e^2t/(2y2^2) dy^2");
  out.tolerance("sol.leaf_metric_special_point", sol_metric_gap, 1e-12,
                "at z0 the leaf metric is the Sol metric diag(1, e^-2t, e^2t)");
  out.tolerance("sol.principal_curvatures", curvature, 1e-6, "leaf principal curvatures are -1, -1, 0");
  out.tolerance("sol.leaf_separation", separation, 1e-4, "distance between leaves s0 and s1 is |s1 - s0|");
  return out.take();
}

std::vector<Check> heis_checks(const RunConfig& cfg) {
  Collector out(cfg.tol_scale);
  Sampler rnd(cfg.seed, 2);

  double int_axioms = 0.0, axioms = 0.0, action = 0.0, symplectic = 0.0, rank = 0.0;
  double rectify_rt = 0.0, equivariance = 0.0, normal = 0.0, pullback = 0.0, cube = 0.0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const HeisLatticeElement gi{rnd.integer(-50, 50), rnd.integer(-50, 50), rnd.integer(-50, 50)};
    const HeisLatticeElement hi{rnd.integer(-50, 50), rnd.integer(-50, 50), rnd.integer(-50, 50)};
    const HeisLatticeElement ki{rnd.integer(-50, 50), rnd.integer(-50, 50), rnd.integer(-50, 50)};
    if (!(heis_mul(heis_mul(gi, hi), ki) == heis_mul(gi, heis_mul(hi, ki))) ||
        !(heis_mul(gi, heis_inv(gi)) == HeisLatticeElement{}) ||
        !(heis_commutator(gi, HeisLatticeElement{0, 0, 1}) == HeisLatticeElement{})) {
      int_axioms += 1.0;
    }

    const HeisElement g = rnd.heis_element();
    const HeisElement h = rnd.heis_element();
    const HeisElement k = rnd.heis_element();
    const MixedPoint m = rnd.mixed_point();
    axioms = std::max({axioms, relative_gap(vec(heis_mul(heis_mul(g, h), k)), vec(heis_mul(g, heis_mul(h, k)))),
                       relative_gap(vec(heis_mul(g, heis_inv(g))), vec(HeisElement{}))});
    action = std::max(action, relative_gap(heis_act(heis_mul(g, h), m).coords(),
                                           heis_act(g, heis_act(h, m)).coords()));
    const SymplecticElement u{g.a, g.b, g.c};
    const SymplecticElement v{h.a, h.b, h.c};
    const SymplecticElement uv = symplectic_mul(u, v);
    symplectic = std::max(symplectic, relative_gap(heis_from_symplectic(uv.p, uv.q, uv.t),
                                                   Eigen::Matrix3d(heis_from_symplectic(u.p, u.q, u.t) *
                                                                   heis_from_symplectic(v.p, v.q, v.t))));

    const Eigen::JacobiSVD<Eigen::Matrix<double, 4, 3>> svd(heis_leaf_jacobian(m, g));
    if (!(svd.singularValues()[2] > 1e-10 * svd.singularValues()[0])) rank += 1.0;

    const double s = rnd.uniform(-2.0, 2.0);
    const HeisLeafPoint back = heis_rectify_inverse(heis_rectify(g, s));
    rectify_rt = std::max({rectify_rt, relative_gap(vec(back.g), vec(g)), std::abs(back.s - s)});
    const HeisLeafPoint fwd = heis_rectify_inverse(m);
    rectify_rt = std::max(rectify_rt, relative_gap(heis_rectify(fwd.g, fwd.s).coords(), m.coords()));
    equivariance = std::max(equivariance, relative_gap(heis_rectify(heis_mul(h, g), s).coords(),
                                                       heis_act(h, heis_rectify(g, s)).coords()));

    const TangentVector4 x = heis_normal_field(m);
    const Eigen::Matrix<double, 4, 3> j = heis_leaf_jacobian(m, g);
    normal = std::max(normal, std::abs(metric_inner(EuclideanTimesHyperbolic{}, x, x) - 1.0));
    for (int c = 0; c < 3; ++c) {
      const TangentVector4 tangent{x.base, j.col(c)};
      normal = std::max(normal, std::abs(metric_inner(EuclideanTimesHyperbolic{}, x, tangent)));
    }

    const double y0 = std::exp(rnd.uniform(-1.5, 1.5));
    const MixedPoint on_axis{{0.0, 0.0}, {0.0, y0}};
    const Eigen::Matrix<double, 4, 3> ja = heis_leaf_jacobian(on_axis, HeisElement{});
    const Eigen::Matrix4d gm = metric_matrix(EuclideanTimesHyperbolic{}, on_axis.coords());
    pullback = std::max(pullback, relative_gap(Eigen::Matrix3d(ja.transpose() * gm * ja), heis_pullback_metric(y0)));

    const HeisElement w{rnd.uniform(-20.0, 20.0), rnd.uniform(-20.0, 20.0), rnd.uniform(-20.0, 20.0)};
    const HeisReduction red = heis_reduce_mod_integer_lattice(w);
    const HeisBox unit{0.0, 1.0, 0.0, 1.0, 0.0, 1.0};
    int hits = 0;
    for (int da = -1; da <= 1; ++da) {
      for (int db = -1; db <= 1; ++db) {
        for (int dc = -1; dc <= 1; ++dc) {
          const HeisLatticeElement l{red.lattice.a + da, red.lattice.b + db, red.lattice.c + dc};
          const HeisElement r = heis_mul(heis_inv(to_real(l)), w);
          if (r.a >= 0.0 && r.a < 1.0 && r.b >= 0.0 && r.b < 1.0 && r.c >= 0.0 && r.c < 1.0) ++hits;
        }
      }
    }
    const bool in_cube = unit.contains(red.rep) && red.rep.a < 1.0 && red.rep.b < 1.0 && red.rep.c < 1.0;
    const double reassembly = relative_gap(vec(heis_mul(to_real(red.lattice), red.rep)), vec(w));
    if (hits != 1 || !in_cube || reassembly > 1e-12) cube += 1.0;
  }

  const HeisLatticeElement commutator =
      heis_commutator(HeisLatticeElement{1, 0, 0}, HeisLatticeElement{0, 1, 0});
  const double commutator_gap = commutator == HeisLatticeElement{0, 0, 1} ? 0.0 : 1.0;

  double separation = 0.0;
  for (const auto& [s0, s1] : kSeparationPairs) {
    const HeisSeparationResult r = heis_leaf_separation_numeric(s0, s1);
    separation = std::max(separation, r.status == SearchStatus::Converged
                                          ? std::abs(r.distance - heis_leaf_separation(s0, s1))
                                          : INFINITY);
  }

  double factored = 0.0;
  const HeisBox unit{0.0, 1.0, 0.0, 1.0, 0.0, 1.0};
  for (int n = 0; n <= 4; ++n) {
    const auto ball = heis_word_ball(n);
    const FactoredCounts counts = factored_proper_discontinuity_check(ball, unit, 0.5);
    std::size_t brute = 0;
    for (const auto& g : ball) brute += heis_unit_cube_meets_brute(g) ? 1 : 0;
    factored += std::abs(static_cast<double>(counts.count_x) - static_cast<double>(counts.count_xy)) +
                std::abs(static_cast<double>(counts.count_x) - static_cast<double>(brute));
  }

  out.exact("heis.group_axioms_integer", int_axioms, "Heisenberg group axioms and central c-axis");
  out.tolerance("heis.group_axioms", axioms, 1e-14, "Heisenberg group axioms in floating point");
  out.tolerance("heis.action_axiom", action, 1e-14, "Heis acts on C x H by (z + a w + c, w + b)");
  out.tolerance("heis.symplectic_homomorphism", symplectic, 1e-14,
                "unipotent matrix model of the symplectic product");
  out.exact("heis.jacobian_rank", rank, "orbit maps into C x H have rank 3");
  out.tolerance("heis.normal_field", normal, 1e-12, "q e4 is a unit normal to the Heis leaves");
  out.tolerance("heis.rectify_round_trip", rectify_rt, 1e-12, "Heis x R -> C x H is a bijection");
  out.tolerance("heis.rectify_equivariance", equivariance, 1e-12, "the rectification is Heis-equivariant");
  out.tolerance("heis.pullback_metric", pullback, 1e-10, "pullback metric y0^2 dp^2 + dq^2/y0^2 + dt^2");
  out.exact("heis.commutator", commutator_gap, "the standard generators commute up to (0,0,1)");
  out.exact("heis.fundamental_cube", cube, "the unit cube is a fundamental domain for Heis_Z");
  out.tolerance("heis.leaf_separation", separation, 1e-4, "distance between Heis leaves is |s1 - s0|");
  out.exact("heis.factored_discontinuity", factored,
            "for factored actions the X and X x Y intersection counts agree");
  return out.take();
}

std::vector<Check> kleinian_checks(const RunConfig& cfg) {
  Collector out(cfg.tol_scale);
  Sampler rnd(cfg.seed, 3);
  const ToralGroupSpec spec(cfg.A);
  const int n_max = cfg.N.value_or(8);

  double homomorphism = 0.0, conjugation = 0.0;
  for (std::size_t i = 0; i < std::min<std::size_t>(cfg.samples, 2000); ++i) {
    const ToralElement g{rnd.integer(-4, 4), rnd.integer(-20, 20), rnd.integer(-20, 20)};
    const ToralElement h{rnd.integer(-4, 4), rnd.integer(-20, 20), rnd.integer(-20, 20)};
    if (toral_integral_matrix(spec, g) * toral_integral_matrix(spec, h) !=
        toral_integral_matrix(spec, toral_compose(spec, g, h))) {
      homomorphism += 1.0;
    }
    Eigen::Matrix3d q = Eigen::Matrix3d::Identity();
    q.topLeftCorner<2, 2>() = spec.P();
    const Eigen::Matrix3d conj = q.inverse() * toral_element(spec, g, ToralForm::Integral) * q;
    conjugation = std::max(conjugation, relative_gap(conj, toral_element(spec, g, ToralForm::Conjugated)));
  }
  const Eigen::Matrix2d eigen_gap = spec.A().cast<double>() * spec.P() -
                                    spec.P() * Eigen::Vector2d(spec.lambda(), 1.0 / spec.lambda()).asDiagonal();

  const LimitKernels kernels = pseudo_limit_kernels(spec, n_max);
  double outside = static_cast<double>(kernels.unconverged);
  std::vector<ProjectiveLine> lines;
  for (const auto& l : kernels.lines) {
    if (classify_limit_line(l.line) == LimitLineKind::Other) outside += 1.0;
    lines.push_back(l.line);
  }
  for (const auto& l : analytic_limit_generators()) {
    if (std::none_of(lines.begin(), lines.end(), [&](const ProjectiveLine& x) { return x.same_as(l); })) {
      lines.push_back(l);
    }
  }
  const GeneralPositionResult gp = general_position_max(lines);
  const double gp_gap = std::abs(static_cast<double>(gp.k) - 4.0) + (gp.exact ? 0.0 : 1.0);

  const AffineBox box{-0.75, 0.75, 1.0, 3.0, -0.75, 0.75, 1.0, 3.0};
  const DiscontinuityCount c6 = proper_discontinuity_count(spec, box, 6);
  const DiscontinuityCount c12 = proper_discontinuity_count(spec, box, 12);
  const double stabilization = c6.intersecting == c12.intersecting ? 0.0 : 1.0;

  const std::int64_t tr = spec.trace();
  const std::int64_t other_tr = tr > 0 ? tr + 1 : tr - 1;
  const IntMat2 other = int_mat(other_tr - 1, 1, other_tr - 2, 1);
  double iso = 0.0;
  for (const auto& [b, expect] : {std::pair{spec.A(), IsoStatus::Found},
                                  std::pair{int_inverse_sl2(spec.A()), IsoStatus::Found},
                                  std::pair{other, IsoStatus::Refuted}}) {
    const IsoResult r = lattice_iso_test(spec.A(), b);
    if (r.status != expect) iso += 1.0;
    if (r.status == IsoStatus::Found) {
      const IntMat2 target = r.target == IsoTarget::B ? b : int_inverse_sl2(b);
      const IntMat2& u = r.conjugator;
      const std::int64_t det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
      if (u * spec.A() != target * u || (det != 1 && det != -1)) iso += 1.0;
    }
  }

  out.exact("kleinian.toral_homomorphism", homomorphism, "(k, n, m) -> G_A respects the semidirect product");
  out.tolerance("kleinian.toral_conjugation", conjugation, 1e-10, "G_A is conjugate to a diagonal-translation form");
  out.tolerance("kleinian.eigenbasis", eigen_gap.cwiseAbs().maxCoeff(), 1e-12, "A P = P diag(lambda, 1/lambda)");
  out.exact("kleinian.limit_lines_in_pencils", outside,
            "every limit kernel is the line at infinity or lies in one of two real pencils");
  out.exact("kleinian.general_position_max", gp_gap,
            "the limit set contains at most four lines in general position");
  out.exact("kleinian.discontinuity_stabilizes", stabilization,
            "only finitely many elements move a compact box of Omega back onto itself");
  if (spec.lambda() > 0.0) {
    double embed = 0.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(cfg.samples, 2000); ++i) {
      const ToralElement g{rnd.integer(-3, 3), rnd.integer(-10, 10), rnd.integer(-10, 10)};
      const ProductPoint z = rnd.product_point();
      const Eigen::Matrix3d m = toral_element(spec, g, ToralForm::Conjugated);
      const Vec4 projective{m(0, 0) * z.z1.x() + m(0, 2), m(0, 0) * z.z1.y(), m(1, 1) * z.z2.x() + m(1, 2),
                            m(1, 1) * z.z2.y()};
      embed = std::max(embed, relative_gap(projective,
                                           sol_act(SolParams::standard(), sol_lattice_embed(spec, g), z).coords()));
    }
    out.tolerance("kleinian.lattice_embedding", embed, 1e-10, "G_A is a lattice in Sol");
  }
  out.exact("kleinian.lattice_isomorphism", iso,
            "G_A and G_B are isomorphic when A is GL(2,Z)-conjugate to B or B^-1");
  return out.take();
}

std::vector<Check> quotient_checks(const RunConfig& cfg) {
  Collector out(cfg.tol_scale);
  const ToralGroupSpec spec(cfg.A);
  const std::size_t samples = std::min<std::size_t>(cfg.samples, 2000);
  const auto add = [&](const QuotientReport& report, const std::string& prefix, const std::string& ref) {
    for (const auto& c : report.checks) {
      if (c.threshold == 0.0) {
        out.exact(prefix + c.name, c.residual, ref);
      } else {
        out.tolerance(prefix + c.name, c.residual, c.threshold, ref);
      }
    }
  };
  if (spec.lambda() > 0.0) {
    add(sol_quotient_check(spec, samples, cfg.seed), "quotient.sol.",
        "the G_A action preserves leaves and the quotient splits as (Sol/G_A) x R");
  }
  add(heis_quotient_check(HeisSublattice{}, samples, cfg.seed), "quotient.heis.",
      "C x H / Heis_Z splits as (Heis/Heis_Z) x R");
  return out.take();
}

SuiteReport run_suite(const RunConfig& cfg) {
  SuiteReport report;
  report.suite = cfg.suite;
  report.seed = cfg.seed;
  report.tol_scale = cfg.tol_scale;
  const auto append = [&](std::vector<Check> checks) {
    for (auto& c : checks) report.checks.push_back(std::move(c));
  };
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "sol") append(sol_checks(cfg));
  if (all || cfg.suite == "heis") append(heis_checks(cfg));
  if (all || cfg.suite == "kleinian") append(kleinian_checks(cfg));
  if (all || cfg.suite == "quotient") append(quotient_checks(cfg));
  return report;
}

Json report_to_json(const SuiteReport& report) {
  Json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["tol_scale"] = report.tol_scale;
  j["checks"] = Json::array();
  for (const auto& c : report.checks) {
    Json item;
    item["name"] = c.name;
    item["residual"] = c.residual;
    item["threshold"] = c.threshold;
    item["pass"] = c.pass;
    item["paper_ref"] = c.paper_ref;
    j["checks"].push_back(std::move(item));
  }
  return j;
}

SuiteReport report_from_json(const Json& j) {
  const auto fail = [](const std::string& what) -> void { throw ConfigError("in", "invalid report: " + what); };
  if (!j.is_object()) fail("expected an object");
  for (const char* key : {"suite", "seed", "checks"}) {
    if (!j.contains(key)) fail(std::string("missing '") + key + "'");
  }
  if (!j["suite"].is_string()) fail("'suite' must be a string");
  if (!j["seed"].is_number_unsigned() && !(j["seed"].is_number_integer() && j["seed"].get<std::int64_t>() >= 0)) {
    fail("'seed' must be a non-negative integer");
  }
  if (!j["checks"].is_array()) fail("'checks' must be an array");
  SuiteReport report;
  report.suite = j["suite"].get<std::string>();
  report.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("tol_scale")) {
    if (!j["tol_scale"].is_number()) fail("'tol_scale' must be a number");
    report.tol_scale = j["tol_scale"].get<double>();
  }
  for (const auto& c : j["checks"]) {
    if (!c.is_object()) fail("check entries must be objects");
    for (const char* key : {"name", "residual", "threshold", "pass", "paper_ref"}) {
      if (!c.contains(key)) fail(std::string("check missing '") + key + "'");
    }
    if (!c["name"].is_string() || !c["paper_ref"].is_string()) fail("check name and paper_ref must be strings");
    if (!c["residual"].is_number() && !c["residual"].is_null()) fail("check residual must be a number or null");
    if (!c["threshold"].is_number()) fail("check threshold must be a number");
    if (!c["pass"].is_boolean()) fail("check pass must be a boolean");
    report.checks.push_back({c["name"].get<std::string>(),
                             c["residual"].is_null() ? NAN : c["residual"].get<double>(),
                             c["threshold"].get<double>(), c["pass"].get<bool>(),
                             c["paper_ref"].get<std::string>()});
  }
  return report;
}

std::string report_to_csv(const SuiteReport& report) {
  std::string out = "name,residual,threshold,pass\n";
  for (const auto& c : report.checks) {
    out += c.name + "," + format_double(c.residual) + "," + format_double(c.threshold) + "," +
           (c.pass ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace solfold::cli
