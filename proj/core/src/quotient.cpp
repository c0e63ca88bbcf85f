#include "solfold/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace solfold {

namespace {

constexpr int kElementsPerSample = 10;

double scaled_gap(const ProductPoint& a, const ProductPoint& b) {
  const Vec4 ca = a.coords();
  const Vec4 cb = b.coords();
  const double scale = std::max({1.0, ca.cwiseAbs().maxCoeff(), cb.cwiseAbs().maxCoeff()});
  return (ca - cb).cwiseAbs().maxCoeff() / scale;
}

double sol_gap(const SolElement& a, const SolElement& b) {
  return std::max({std::abs(a.t - b.t), std::abs(a.x - b.x), std::abs(a.y - b.y)});
}

ResidualCheck make_check(std::string name, double residual, double threshold) {
  return {std::move(name), residual, threshold, residual <= threshold};
}

std::string matrix_text(const IntMat2& a) {
  std::ostringstream os;
  os << "[[" << a(0, 0) << "," << a(0, 1) << "],[" << a(1, 0) << "," << a(1, 1) << "]]";
  return os.str();
}

}  // namespace

bool QuotientReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ResidualCheck& c) { return c.pass; });
}

const ResidualCheck& QuotientReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("QuotientReport: no check named " + name);
}

QuotientReport sol_quotient_check(const std::optional<ToralGroupSpec>& spec, std::size_t samples,
                                  std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("sol_quotient_check: samples must be >= 1");
  if (spec && spec->lambda() < 0.0) {
    throw std::domain_error("sol_quotient_check: tr A < -2 swaps the half-plane components");
  }

  QuotientReport report;
  report.seed = seed;
  report.samples = samples;
  report.group = spec ? "G_A, A = " + matrix_text(spec->A()) : "trivial";
  report.component_count = spec ? toral_component_count(*spec) : 4;
  if (spec) {
    const Eigen::Matrix2d basis = spec->lattice_basis();
    std::ostringstream os;
    os.precision(17);
    os << "{lambda^k y1 in [1, lambda)} x {x in P^-1 [0,1)^2}, lambda = " << spec->lambda()
       << ", lattice basis (" << basis(0, 0) << ", " << basis(1, 0) << "), (" << basis(0, 1) << ", "
       << basis(1, 1) << ")";
    report.domain = os.str();
  } else {
    report.domain = "H+ x H+";
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> real_part(-2.0, 2.0);
  std::uniform_real_distribution<double> log_imag(-1.5, 1.5);
  std::uniform_int_distribution<int> k_dist(-3, 3);
  std::uniform_int_distribution<int> nm_dist(-5, 5);

  double leaf = 0.0;
  double orbit = 0.0;
  double reassembly = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const ProductPoint z{{real_part(rng), std::exp(log_imag(rng))},
                         {real_part(rng), std::exp(log_imag(rng))}};
    if (!spec) continue;
    const double s = rectify_inverse(z).s;
    const DomainReduction base = fundamental_domain_reduce(*spec, z);
    const SolElement back = sol_inverse(sol_lattice_embed(*spec, base.element));
    reassembly = std::max(reassembly, scaled_gap(sol_act(SolParams::standard(), back, base.representative), z));
    for (int j = 0; j < kElementsPerSample; ++j) {
      const ToralElement g{k_dist(rng), nm_dist(rng), nm_dist(rng)};
      const ProductPoint gz = sol_act(SolParams::standard(), sol_lattice_embed(*spec, g), z);
      leaf = std::max(leaf, std::abs(rectify_inverse(gz).s - s));
      const DomainReduction moved = fundamental_domain_reduce(*spec, gz);
      orbit = std::max(orbit, scaled_gap(moved.representative, base.representative));
    }
  }

  double relation_sol = 0.0;
  double relation_int = 0.0;
  if (spec) {
    const ToralElement t{1, 0, 0};
    for (const ToralElement v : {ToralElement{0, 1, 0}, ToralElement{0, 0, 1}}) {
      const IntVec2 av = spec->A() * IntVec2(v.n, v.m);
      const ToralElement target{0, av[0], av[1]};
      const SolElement lhs = sol_mul(sol_mul(sol_lattice_embed(*spec, t), sol_lattice_embed(*spec, v)),
                                     sol_inverse(sol_lattice_embed(*spec, t)));
      relation_sol = std::max(relation_sol, sol_gap(lhs, sol_lattice_embed(*spec, target)));
      const ToralElement exact =
          toral_compose(*spec, toral_compose(*spec, t, v), toral_inverse(*spec, t));
      if (!(exact == target)) relation_int = 1.0;
    }
  }

  report.checks.push_back(make_check("leaf_preservation", leaf, 1e-10));
  report.checks.push_back(make_check("representative_orbit_invariance", orbit, 1e-10));
  report.checks.push_back(make_check("representative_reassembly", reassembly, 1e-10));
  report.checks.push_back(make_check("semidirect_relation_sol", relation_sol, 1e-12));
  report.checks.push_back(make_check("semidirect_relation_integer", relation_int, 0.0));
  report.checks.push_back(
      make_check("component_count", std::abs(report.component_count - 4.0), 0.0));
  return report;
}

QuotientReport heis_quotient_check(const std::optional<HeisSublattice>& sub, std::size_t samples,
                                   std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("heis_quotient_check: samples must be >= 1");
  if (sub) sub->validate();

  QuotientReport report;
  report.seed = seed;
  report.samples = samples;
  report.component_count = 1;
  if (sub) {
    std::ostringstream os;
    os << "Heis_Z sublattice (" << sub->p << ", " << sub->q << ", " << sub->r << ")";
    report.group = os.str();
    std::ostringstream dom;
    dom << "[0," << sub->p << ") x [0," << sub->q << ") x [0," << sub->r << ") x R";
    report.domain = dom.str();
    report.commutator = heis_commutator(HeisLatticeElement{sub->p, 0, 0}, HeisLatticeElement{0, sub->q, 0});
  } else {
    report.group = "trivial";
    report.domain = "Heis x R";
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> log_imag(-1.5, 1.5);
  std::uniform_int_distribution<int> step(-3, 3);

  double im_w = 0.0;
  double equivariance = 0.0;
  double reduction = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const MixedPoint m{{coord(rng), coord(rng)}, {coord(rng), std::exp(log_imag(rng))}};
    if (!sub) continue;
    const HeisLeafPoint leaf = heis_rectify_inverse(m);
    const HeisReduction base = heis_reduce(*sub, leaf.g);
    for (int j = 0; j < kElementsPerSample; ++j) {
      const HeisLatticeElement g{sub->p * step(rng), sub->q * step(rng), sub->r * step(rng)};
      const MixedPoint gm = heis_act(to_real(g), m);
      im_w = std::max(im_w, std::abs(gm.w.y() - m.w.y()));
      const MixedPoint lhs = heis_rectify(heis_mul(to_real(g), leaf.g), leaf.s);
      const MixedPoint rhs = heis_act(to_real(g), heis_rectify(leaf.g, leaf.s));
      const double scale = std::max(1.0, lhs.coords().cwiseAbs().maxCoeff());
      equivariance = std::max(equivariance, (lhs.coords() - rhs.coords()).cwiseAbs().maxCoeff() / scale);
      const HeisReduction moved = heis_reduce(*sub, heis_rectify_inverse(gm).g);
      reduction = std::max({reduction, std::abs(moved.rep.a - base.rep.a),
                            std::abs(moved.rep.b - base.rep.b), std::abs(moved.rep.c - base.rep.c)});
    }
  }

  double commutator_gap = 0.0;
  if (sub) {
    const HeisLatticeElement expected{0, 0, sub->p * sub->q};
    if (!(*report.commutator == expected)) commutator_gap = 1.0;
  }

  report.checks.push_back(make_check("im_w_invariance", im_w, 0.0));
  report.checks.push_back(make_check("rectify_equivariance", equivariance, 1e-12));
  report.checks.push_back(make_check("reduction_orbit_invariance", reduction, 1e-9));
  report.checks.push_back(make_check("commutator_central", commutator_gap, 0.0));
  return report;
}

std::vector<StructuralNote> structural_notes(const ToralGroupSpec& spec) {
  const std::string status = "NOT VERIFIED - REPORT ONLY";
  std::vector<StructuralNote> notes;
  notes.push_back({"fiber_bundle",
                   "For A = " + matrix_text(spec.A()) +
                       ", the quotient of each component of the discontinuity region is asserted "
                       "to fiber with base S^1 x R and fiber T^2 x R; the projection map is left "
                       "unspecified.",
                   "quotient factorization into (Sol/G_A) x R", false, status});
  notes.push_back({"countability",
                   "Up to conjugation only countably many complex Kleinian groups with four lines in "
                   "general position in their limit set arise this way, one for each conjugacy class "
                   "of hyperbolic matrices in SL(2,Z).",
                   "lattice isomorphism criterion: G_A and G_B are isomorphic when A is conjugate in "
                   "GL(2,Z) to B or B^-1 (see lattice_iso_test)",
                   false, status});
  return notes;
}

}  // namespace solfold
