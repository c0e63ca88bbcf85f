#include "solfold/heisenberg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <tuple>

namespace solfold {

namespace {

std::int64_t floor_div(double num, std::int64_t den) {
  return static_cast<std::int64_t>(std::floor(num / static_cast<double>(den)));
}

}  // namespace

Eigen::Matrix3d heis_matrix(const HeisElement& g) {
  Eigen::Matrix3d m;
  m << 1.0, g.a, g.c,
       0.0, 1.0, g.b,
       0.0, 0.0, 1.0;
  return m;
}

SymplecticElement symplectic_mul(const SymplecticElement& g, const SymplecticElement& h) {
  const double omega = g.p * h.q - g.q * h.p;
  return {g.p + h.p, g.q + h.q, g.t + h.t + 0.5 * omega};
}

Eigen::Matrix3d heis_from_symplectic(double p, double q, double t) {
  Eigen::Matrix3d m;
  m << 1.0, p, t + 0.5 * p * q,
       0.0, 1.0, q,
       0.0, 0.0, 1.0;
  return m;
}

MixedPoint heis_act(const HeisElement& g, const MixedPoint& m) {
  const std::complex<double> w = m.w.as_complex();
  return {m.z + g.a * w + g.c, {m.w.x() + g.b, m.w.y()}};
}

Eigen::Matrix<double, 4, 3> heis_leaf_jacobian(const MixedPoint& m, const HeisElement&) {
  Eigen::Matrix<double, 4, 3> j;
  j << m.w.x(), 0.0, 1.0,
       m.w.y(), 0.0, 0.0,
       0.0, 1.0, 0.0,
       0.0, 0.0, 0.0;
  return j;
}

TangentVector4 heis_normal_field(const MixedPoint& m) {
  return {m.coords(), Vec4(0.0, 0.0, 0.0, m.w.y())};
}

MixedPoint heis_normal_flow(const MixedPoint& m, double s) {
  return {m.z, {m.w.x(), std::exp(s) * m.w.y()}};
}

MixedPoint heis_rectify(const HeisElement& g, double s) {
  const double q = std::exp(s);
  return {{g.c, g.a * q}, {g.b, q}};
}

HeisLeafPoint heis_rectify_inverse(const MixedPoint& m) {
  const double q = m.w.y();
  return {{m.z.imag() / q, m.w.x(), m.z.real()}, std::log(q)};
}

Eigen::Matrix3d heis_pullback_metric(double y0) {
  return metric_matrix(HeisPullback{y0}, Eigen::Vector3d::Zero());
}

Eigen::Matrix3d heis_standard_metric(double p) {
  Eigen::Matrix3d m;
  m << 1.0, 0.0, 0.0,
       0.0, 1.0 + p * p, -0.5 * p,
       0.0, -0.5 * p, 1.0;
  return m;
}

double heis_leaf_separation(double s0, double s1) { return std::abs(s1 - s0); }

HeisSeparationResult heis_leaf_separation_numeric(double s0, double s1, std::size_t budget) {
  const Objective squared_distance = [s0, s1](std::span<const double> v) {
    const double d = mixed_distance(heis_rectify({v[0], v[1], v[2]}, s0),
                                    heis_rectify({v[3], v[4], v[5]}, s1));
    return d * d;
  };
  SearchBox box;
  box.lower.assign(6, -5.0);
  box.upper.assign(6, 5.0);
  const SearchResult r = grid_compass_minimize(squared_distance, box, 1e-6, budget);

  HeisSeparationResult out;
  out.status = r.status;
  out.evaluations = r.evaluations;
  if (!r.argmin.empty()) {
    out.distance = std::sqrt(r.value);
    out.first = {{r.argmin[0], r.argmin[1], r.argmin[2]}, s0};
    out.second = {{r.argmin[3], r.argmin[4], r.argmin[5]}, s1};
  }
  return out;
}

void HeisSublattice::validate() const {
  if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("HeisSublattice: p, q, r must be >= 1");
  if ((p * q) % r != 0) throw std::invalid_argument("HeisSublattice: r must divide p * q");
}

bool HeisSublattice::contains(const HeisLatticeElement& g) const {
  return g.a % p == 0 && g.b % q == 0 && g.c % r == 0;
}

HeisReduction heis_reduce(const HeisSublattice& sub, const HeisElement& g) {
  sub.validate();
  HeisReduction out;
  out.lattice.a = sub.p * floor_div(g.a, sub.p);
  out.lattice.b = sub.q * floor_div(g.b, sub.q);
  out.rep.a = g.a - static_cast<double>(out.lattice.a);
  out.rep.b = g.b - static_cast<double>(out.lattice.b);
  const double central = g.c - static_cast<double>(out.lattice.a) * out.rep.b;
  out.lattice.c = sub.r * floor_div(central, sub.r);
  out.rep.c = central - static_cast<double>(out.lattice.c);
  return out;
}

HeisReduction heis_reduce_mod_integer_lattice(const HeisElement& g) {
  return heis_reduce(HeisSublattice{}, g);
}

std::vector<HeisLatticeElement> heis_word_ball(int n) {
  if (n < 0) throw std::invalid_argument("heis_word_ball: n must be >= 0");
  using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
  const HeisLatticeElement generators[] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                           {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::set<Key> seen{{0, 0, 0}};
  std::vector<HeisLatticeElement> frontier{{0, 0, 0}};
  for (int step = 0; step < n; ++step) {
    std::vector<HeisLatticeElement> next;
    for (const auto& g : frontier) {
      for (const auto& s : generators) {
        const HeisLatticeElement h = heis_mul(g, s);
        if (seen.insert({h.a, h.b, h.c}).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  std::vector<HeisLatticeElement> out;
  out.reserve(seen.size());
  for (const auto& [a, b, c] : seen) out.push_back({a, b, c});
  return out;
}

void HeisBox::validate() const {
  if (!(a0 <= a1 && b0 <= b1 && c0 <= c1)) throw std::invalid_argument("HeisBox: bounds reversed");
}

bool HeisBox::contains(const HeisElement& g) const {
  return a0 <= g.a && g.a <= a1 && b0 <= g.b && g.b <= b1 && c0 <= g.c && g.c <= c1;
}

bool heis_box_meets_translate(const HeisLatticeElement& g, const HeisBox& k) {
  k.validate();
  const double ga = static_cast<double>(g.a);
  const double gb = static_cast<double>(g.b);
  const double gc = static_cast<double>(g.c);
  // Need (a, b, c) in K with (a + ga, b + gb, c + gc + ga b) in K.
  if (std::max(k.a0, k.a0 - ga) > std::min(k.a1, k.a1 - ga)) return false;
  const double b_lo = std::max(k.b0, k.b0 - gb);
  const double b_hi = std::min(k.b1, k.b1 - gb);
  if (b_lo > b_hi) return false;
  // The c-shift gc + ga b ranges over an interval; it must fit within the c-width.
  const double e0 = gc + ga * b_lo;
  const double e1 = gc + ga * b_hi;
  const double width = k.c1 - k.c0;
  return std::min(e0, e1) <= width && std::max(e0, e1) >= -width;
}

FactoredCounts factored_proper_discontinuity_check(const std::vector<HeisLatticeElement>& group,
                                                   const HeisBox& k, double y) {
  k.validate();
  FactoredCounts out;
  for (const auto& g : group) {
    const bool meets_x = heis_box_meets_translate(g, k);
    if (meets_x) ++out.count_x;
    // The second factor is fixed by every g, so it meets K_Y = {y} iff y = y.
    const double gy = y;
    if (meets_x && gy == y) ++out.count_xy;
  }
  return out;
}

}  // namespace solfold
