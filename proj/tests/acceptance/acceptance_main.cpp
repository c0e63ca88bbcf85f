// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "solfold_cli/config.hpp"
#include "solfold_cli/suites.hpp"

#include <solfold/heisenberg.hpp>
#include <solfold/kleinian.hpp>
#include <solfold/quotient.hpp>
#include <solfold/sol.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <string>

namespace {

using namespace solfold;

struct Outcome {
  bool pass = false;
  std::string detail;
};

char buffer[512];

template <class... Args>
std::string fmt(const char* format, Args... args) {
  std::snprintf(buffer, sizeof(buffer), format, args...);
  return buffer;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

ProductPoint random_point(std::mt19937_64& rng) {
  return {{uniform(rng, -3, 3), std::exp(uniform(rng, -1, 1))}, {uniform(rng, -3, 3), std::exp(uniform(rng, -1, 1))}};
}

SolElement random_sol(std::mt19937_64& rng) { return {uniform(rng, -2, 2), uniform(rng, -3, 3), uniform(rng, -3, 3)}; }

double gap(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return (a - b).cwiseAbs().maxCoeff(); }

Eigen::Vector4d vec(const LeafCoordinates& q) { return {q.t, q.x, q.y, q.s}; }

Outcome equivariance() {
  std::mt19937_64 rng(1);
  const SolParams p(2.0, 1.0, 0.5, -0.25, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const ProductPoint z = random_point(rng);
    const SolElement g = random_sol(rng);
    worst = std::max(worst, flow_equivariance_defect(p, z, g, uniform(rng, -2, 2)));
  }
  return {worst < 1e-12, fmt("max defect %.3g over 1e4 samples (< 1e-12)", worst)};
}

Outcome flow_geodesy() {
  std::mt19937_64 rng(2);
  double residual = 0.0, speed = 0.0, tangency = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ProductPoint z = random_point(rng);
    const double t = uniform(rng, -1, 1);
    const Curve flow = [&](double s) -> Eigen::VectorXd { return normal_flow(z, s).coords(); };
    residual = std::max(residual, geodesic_residual(HalfHyperbolicProduct{}, flow, t));
    const TangentVector4 n = leaf_unit_normal(normal_flow(z, t));
    speed = std::max(speed, std::abs(std::sqrt(metric_inner(HalfHyperbolicProduct{}, n, n)) - 1.0));
    // The unit normal must be the velocity of the flow line.
    const double h = 1e-5;
    const Eigen::VectorXd velocity = (flow(t + h) - flow(t - h)) / (2.0 * h);
    tangency = std::max(tangency, gap(velocity, n.components) / std::max(1.0, n.components.cwiseAbs().maxCoeff()));
  }
  return {residual < 1e-6 && speed < 1e-10 && tangency < 1e-6,
          fmt("geodesic residual %.3g (< 1e-6), unit-speed error %.3g (< 1e-10), velocity vs normal %.3g "
              "(< 1e-6), 1e3 samples",
              residual, speed, tangency)};
}

Outcome leaf_metric_check() {
  std::mt19937_64 rng(3);
  const SolParams standard = SolParams::standard();
  double pullback = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ProductPoint base{{0.0, std::exp(uniform(rng, -1, 1))}, {0.0, std::exp(uniform(rng, -1, 1))}};
    const SolElement g = random_sol(rng);
    const Eigen::Matrix<double, 4, 3> j = leaf_jacobian(standard, base, g);
    const Eigen::Matrix4d m = metric_matrix(HalfHyperbolicProduct{}, leaf_embed(standard, base, g).coords());
    const Eigen::Matrix3d pulled = j.transpose() * m * j;
    const Eigen::Matrix3d expected = leaf_metric(base, g.t);
    pullback = std::max(pullback, gap(pulled, expected) / std::max(1.0, expected.cwiseAbs().maxCoeff()));
  }
  double special = 0.0;
  for (int i = -20; i <= 20; ++i) {
    const double t = 0.1 * i;
    special = std::max(special, gap(leaf_metric(special_point(), t), sol_metric(t)) / std::exp(2.0 * std::abs(t)));
  }
  return {pullback < 1e-10 && special < 1e-12,
          fmt("pullback error %.3g (< 1e-10), at z0 vs Sol metric %.3g (< 1e-12)", pullback, special)};
}

Outcome principal_curvatures() {
  double worst = 0.0;
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      const Eigen::Vector3d k = shape_operator(-1.0 + 0.5 * a, -1.0 + 0.5 * b).principal_curvatures;
      worst = std::max({worst, std::abs(k[0] + 1.0), std::abs(k[1] + 1.0), std::abs(k[2])});
    }
  }
  return {worst < 1e-6, fmt("spectrum error vs {-1,-1,0} %.3g on 5x5 grid (< 1e-6)", worst)};
}

Outcome separation() {
  double worst = 0.0;
  bool converged = true;
  for (const auto& [s0, s1] : {std::pair{0.0, 0.5}, std::pair{0.0, 1.0}, std::pair{0.0, 2.0}, std::pair{-1.0, 1.0}}) {
    const SeparationResult sol = leaf_separation_numeric(s0, s1);
    const HeisSeparationResult heis = heis_leaf_separation_numeric(s0, s1);
    converged = converged && sol.status == SearchStatus::Converged && heis.status == SearchStatus::Converged;
    worst = std::max({worst, std::abs(sol.distance - std::abs(s1 - s0)), std::abs(heis.distance - std::abs(s1 - s0))});
  }
  return {converged && worst < 1e-4, fmt("max |d - |s1-s0|| %.3g over Sol and Heis pairs (< 1e-4)", worst)};
}

Outcome rectifications() {
  std::mt19937_64 rng(6);
  double round_trip = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const LeafCoordinates q{uniform(rng, -2, 2), uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -2, 2)};
    const Eigen::Vector4d v = vec(q);
    round_trip = std::max({round_trip, gap(vec(rectify_inverse(rectify(q))), v),
                           gap(vec(rectify_isometric_inverse(rectify_isometric(q))), v)});
    const ProductPoint z = random_point(rng);
    round_trip = std::max({round_trip, gap(rectify(rectify_inverse(z)).coords(), z.coords()),
                           gap(rectify_isometric(rectify_isometric_inverse(z)).coords(), z.coords())});
  }
  const QuotientReport q = sol_quotient_check(ToralGroupSpec(int_mat(2, 1, 1, 1)), 1000, 6);
  const double leaf = q.check("leaf_preservation").residual;
  return {round_trip < 1e-12 && leaf < 1e-10,
          fmt("round trip %.3g (< 1e-12) on 1e4 samples, leaf preservation %.3g (< 1e-10)", round_trip, leaf)};
}

Outcome heisenberg_suite() {
  solfold::cli::RunConfig cfg;
  cfg.samples = 1000;
  cfg.seed = 7;
  std::string failed;
  std::size_t count = 0;
  for (const auto& c : solfold::cli::heis_checks(cfg)) {
    const bool wanted = c.name != "heis.leaf_separation" && c.name != "heis.factored_discontinuity";
    if (!wanted) continue;
    ++count;
    const double limit = c.name == "heis.group_axioms" || c.name == "heis.action_axiom" ||
                                 c.name == "heis.symplectic_homomorphism"
                             ? 1e-14
                         : c.name == "heis.pullback_metric" ? 1e-10
                         : c.threshold == 0.0              ? 0.0
                                                           : 1e-12;
    if (!(c.residual <= limit)) failed += " " + c.name;
  }
  return {failed.empty() && count >= 10,
          failed.empty() ? fmt("%zu checks within pinned tolerances, 1e3 samples", count) : "failed:" + failed};
}

Outcome factored_discontinuity() {
  const HeisBox k{0, 1, 0, 1, 0, 1};
  std::string detail;
  bool ok = true;
  for (int n = 0; n <= 4; ++n) {
    const auto ball = heis_word_ball(n);
    std::size_t brute = 0;
    for (const auto& g : ball) {
      // Exact grid search on (1/12) Z^3, which contains every vertex of g K ∩ K for |g.a| <= 4.
      bool meets = false;
      for (std::int64_t a = 0; a <= 12 && !meets; ++a) {
        for (std::int64_t b = 0; b <= 12 && !meets; ++b) {
          for (std::int64_t c = 0; c <= 12 && !meets; ++c) {
            const std::int64_t ga = a + 12 * g.a, gb = b + 12 * g.b, gc = c + 12 * g.c + g.a * b;
            meets = ga >= 0 && ga <= 12 && gb >= 0 && gb <= 12 && gc >= 0 && gc <= 12;
          }
        }
      }
      brute += meets ? 1 : 0;
    }
    const FactoredCounts counts = factored_proper_discontinuity_check(ball, k, 0.5);
    ok = ok && counts.count_x == counts.count_xy && counts.count_x == brute;
    detail += fmt("%sN=%d:%zu/%zu/%zu", n ? " " : "", n, counts.count_x, counts.count_xy, brute);
  }
  return {ok, "count_X/count_XY/brute " + detail};
}

Outcome limit_set() {
  std::string detail;
  bool ok = true;
  for (const IntMat2& a : {int_mat(2, 1, 1, 1), int_mat(3, 2, 1, 1)}) {
    const LimitKernels kernels = pseudo_limit_kernels(ToralGroupSpec(a), 8);
    std::size_t other = 0;
    std::vector<ProjectiveLine> lines;
    for (const auto& l : kernels.lines) {
      if (classify_limit_line(l.line) == LimitLineKind::Other) ++other;
      lines.push_back(l.line);
    }
    const GeneralPositionResult gp = general_position_max(lines);
    ok = ok && other == 0 && kernels.unconverged == 0 && gp.k == 4 && gp.exact;
    detail += fmt("%str=%lld: %zu lines, %zu outside, k=%zu", detail.empty() ? "" : "; ",
                  static_cast<long long>(a.trace()), lines.size(), other, gp.k);
  }
  return {ok, detail + " (N=8, expect k=4)"};
}

bool returns_brute(double s, double shift, double lo, double hi) {
  double a = (lo - shift) / s, b = (hi - shift) / s;
  if (a > b) std::swap(a, b);
  return std::max(a, lo) <= std::min(b, hi) + 1e-12;
}

Outcome proper_discontinuity() {
  const ToralGroupSpec spec(int_mat(2, 1, 1, 1));
  const AffineBox box{-0.75, 0.75, 1.0, 3.0, -0.75, 0.75, 1.0, 3.0};
  const DiscontinuityCount c6 = proper_discontinuity_count(spec, box, 6);
  const DiscontinuityCount c12 = proper_discontinuity_count(spec, box, 12);
  std::size_t brute = 0;
  for (const auto& e : word_ball(spec, 12)) {
    const Eigen::Matrix3d& m = e.matrix;
    brute += returns_brute(m(0, 0), m(0, 2), box.x1_lo, box.x1_hi) && returns_brute(m(0, 0), 0.0, box.y1_lo, box.y1_hi) &&
                     returns_brute(m(1, 1), m(1, 2), box.x2_lo, box.x2_hi) &&
                     returns_brute(m(1, 1), 0.0, box.y2_lo, box.y2_hi)
                 ? 1
                 : 0;
  }
  return {c6.intersecting == c12.intersecting && c12.count == brute,
          fmt("count N=6: %zu, N=12: %zu, brute force N=12: %zu", c6.count, c12.count, brute)};
}

Outcome lattice_embedding() {
  std::mt19937_64 rng(11);
  const ToralGroupSpec spec(int_mat(2, 1, 1, 1));
  double worst = 0.0;
  std::size_t relation_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const ToralElement g{uniform_int(rng, -3, 3), uniform_int(rng, -10, 10), uniform_int(rng, -10, 10)};
    const ProductPoint z = random_point(rng);
    const Eigen::Matrix3cd m = toral_element(spec, g, ToralForm::Conjugated).cast<std::complex<double>>();
    const Eigen::Vector3cd image = m * Eigen::Vector3cd(z.z1.as_complex(), z.z2.as_complex(), 1.0);
    const ProductPoint w = sol_act(SolParams::standard(), sol_lattice_embed(spec, g), z);
    worst = std::max({worst, std::abs(image[0] / image[2] - w.z1.as_complex()) / std::max(1.0, std::abs(image[0])),
                      std::abs(image[1] / image[2] - w.z2.as_complex()) / std::max(1.0, std::abs(image[1]))});
    // t v t^-1 = A v in exact integers.
    const ToralElement t{1, 0, 0};
    const ToralElement v{0, g.n, g.m};
    const ToralElement conj = toral_compose(spec, toral_compose(spec, t, v), toral_inverse(spec, t));
    const IntVec2 av = spec.A() * IntVec2(g.n, g.m);
    if (!(conj == ToralElement{0, av[0], av[1]})) ++relation_failures;
  }
  return {worst < 1e-10 && relation_failures == 0,
          fmt("action mismatch %.3g (< 1e-10), semidirect relation failures %zu (exact)", worst, relation_failures)};
}

Outcome lattice_isomorphism() {
  std::size_t failures = 0, found = 0;
  const auto verified = [](const IntMat2& a, const IntMat2& b, const IsoResult& r) {
    const IntMat2 target = r.target == IsoTarget::B ? b : int_inverse_sl2(b);
    const std::int64_t det = r.conjugator.determinant();
    return r.conjugator * a == target * r.conjugator && (det == 1 || det == -1);
  };
  std::mt19937_64 rng(12);
  for (const IntMat2& a : {int_mat(2, 1, 1, 1), int_mat(3, 2, 1, 1), int_mat(-3, 1, -1, 0)}) {
    for (const IntMat2& b : {a, int_inverse_sl2(a)}) {
      const IsoResult r = lattice_iso_test(a, b);
      if (r.status != IsoStatus::Found || !verified(a, b, r)) ++failures;
    }
    const std::int64_t t = a.trace() + (a.trace() > 0 ? 1 : -1);
    if (lattice_iso_test(a, int_mat(t - 1, 1, t - 2, 1)).status != IsoStatus::Refuted) ++failures;
    for (int i = 0; i < 200; ++i) {
      const IntMat2 u = int_mat(uniform_int(rng, -4, 4), uniform_int(rng, -4, 4), uniform_int(rng, -4, 4),
                                uniform_int(rng, -4, 4));
      const std::int64_t det = u.determinant();
      if (det != 1 && det != -1) continue;
      const IntMat2 b = u * a * (det * int_mat(u(1, 1), -u(0, 1), -u(1, 0), u(0, 0)));
      const IsoResult r = lattice_iso_test(a, b);
      if (r.status == IsoStatus::Found) {
        ++found;
        if (!verified(a, b, r)) ++failures;
      }
    }
  }
  return {failures == 0, fmt("failures %zu; %zu random conjugates found and verified exactly", failures, found)};
}

Outcome cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path a = dir / "solfold_acceptance_a.json";
  const fs::path b = dir / "solfold_acceptance_b.json";
  const std::string cmd = std::string(SOLFOLD_CLI_PATH) + " verify --suite all --seed 13 --samples 500 --out ";
  const int ra = std::system((cmd + a.string()).c_str());
  const int rb = std::system((cmd + b.string()).c_str());
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  const std::string sa = slurp(a), sb = slurp(b);
  fs::remove(a);
  fs::remove(b);
  return {ra == 0 && rb == 0 && !sa.empty() && sa == sb,
          fmt("exit codes %d/%d, %zu bytes, identical=%s", ra, rb, sa.size(), sa == sb ? "yes" : "no")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"equivariance", 5, equivariance},
      {"flow geodesy", 5, flow_geodesy},
      {"leaf metric", 1e9, leaf_metric_check},
      {"principal curvatures", 10, principal_curvatures},
      {"leaf separation", 60, separation},
      {"rectifications", 1e9, rectifications},
      {"heisenberg suite", 1e9, heisenberg_suite},
      {"factored proper discontinuity", 1e9, factored_discontinuity},
      {"limit-set combinatorics", 60, limit_set},
      {"proper discontinuity", 60, proper_discontinuity},
      {"lattice embedding", 1e9, lattice_embedding},
      {"lattice isomorphism", 1e9, lattice_isomorphism},
      {"cli determinism", 1e9, cli_determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_s;
    const bool pass = outcome.pass && in_time;
    if (!pass) ++failures;
    std::string timing = fmt("%.2f s", seconds);
    if (c.budget_s < 1e9) timing += fmt(" (< %g s)", c.budget_s);
    std::printf("%s %2d %s: %s [%s]\n", pass ? "PASS" : "FAIL", index, c.name, outcome.detail.c_str(), timing.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
