#pragma once

#include "solfold/geometry.hpp"
#include "solfold/search.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace solfold {

// Heisenberg triple (a, b, c) with (a, b, c) * (a', b', c') = (a + a', b + b', c + c' + a b').
template <class T>
struct HeisTriple {
  T a{};
  T b{};
  T c{};

  friend bool operator==(const HeisTriple&, const HeisTriple&) = default;
};

using HeisElement = HeisTriple<double>;
using HeisLatticeElement = HeisTriple<std::int64_t>;

template <class T>
HeisTriple<T> heis_mul(const HeisTriple<T>& g, const HeisTriple<T>& h) {
  return {g.a + h.a, g.b + h.b, g.c + h.c + g.a * h.b};
}

template <class T>
HeisTriple<T> heis_inv(const HeisTriple<T>& g) {
  return {-g.a, -g.b, -g.c + g.a * g.b};
}

// g h g^-1 h^-1.
template <class T>
HeisTriple<T> heis_commutator(const HeisTriple<T>& g, const HeisTriple<T>& h) {
  return heis_mul(heis_mul(g, h), heis_mul(heis_inv(g), heis_inv(h)));
}

inline HeisElement to_real(const HeisLatticeElement& g) {
  return {static_cast<double>(g.a), static_cast<double>(g.b), static_cast<double>(g.c)};
}

// [[1, a, c], [0, 1, b], [0, 0, 1]].
Eigen::Matrix3d heis_matrix(const HeisElement& g);

// Symplectic model V x R with V = R^2, omega((p, q), (p', q')) = p q' - q p'.
struct SymplecticElement {
  double p = 0.0;
  double q = 0.0;
  double t = 0.0;
};

// (v, t) * (w, s) = (v + w, t + s + omega(v, w) / 2).
SymplecticElement symplectic_mul(const SymplecticElement& g, const SymplecticElement& h);

// [[1, p, t + p q / 2], [0, 1, q], [0, 0, 1]]; a homomorphism for symplectic_mul.
Eigen::Matrix3d heis_from_symplectic(double p, double q, double t);

// (z, w) -> (z + a w + c, w + b).
MixedPoint heis_act(const HeisElement& g, const MixedPoint& m);

// Jacobian of g -> g . m in coordinates (Re z, Im z, p, q) x (a, b, c), with
// w = p + q i the second factor of m: [[p, 0, 1], [q, 0, 0], [0, 1, 0], [0, 0, 0]].
Eigen::Matrix<double, 4, 3> heis_leaf_jacobian(const MixedPoint& m, const HeisElement& g);

// q e4, unit and orthogonal to the leaf in the Euclidean x hyperbolic metric.
TangentVector4 heis_normal_field(const MixedPoint& m);

// Integral curve of heis_normal_field: (z, p + e^s q i).
MixedPoint heis_normal_flow(const MixedPoint& m, double s);

// (g, s) -> g . (0, e^s i) = (a e^s i + c, e^s i + b).
MixedPoint heis_rectify(const HeisElement& g, double s);

struct HeisLeafPoint {
  HeisElement g;
  double s = 0.0;
};

// Inverse of heis_rectify; rejects Im w <= 0 through MixedPoint's invariant.
HeisLeafPoint heis_rectify_inverse(const MixedPoint& m);

// diag(y0^2, 1 / y0^2, 1) in the basis (d/da, d/db, d/dc) along the leaf
// through (0, y0 i). Throws std::invalid_argument for y0 <= 0.
Eigen::Matrix3d heis_pullback_metric(double y0);

// Left-invariant comparison metric dp^2 + (1 + p^2) dq^2 + dt^2 - p dq dt.
Eigen::Matrix3d heis_standard_metric(double p);

double heis_leaf_separation(double s0, double s1);

struct HeisSeparationResult {
  double distance = 0.0;
  SearchStatus status = SearchStatus::Converged;
  std::size_t evaluations = 0;
  HeisLeafPoint first;
  HeisLeafPoint second;
};

// Minimizes the Euclidean x hyperbolic distance between heis_rectify(g, s0)
// and heis_rectify(g', s1) over a 5^6 grid of [-5, 5]^6 plus compass refinement.
HeisSeparationResult heis_leaf_separation_numeric(double s0, double s1,
                                                  std::size_t budget = 100000);

// Sublattice of Heis_Z generated by (p, 0, 0), (0, q, 0), (0, 0, r), with r | p q.
// Its elements are exactly (p i, q j, r k).
struct HeisSublattice {
  std::int64_t p = 1;
  std::int64_t q = 1;
  std::int64_t r = 1;

  void validate() const;
  bool contains(const HeisLatticeElement& g) const;
};

struct HeisReduction {
  HeisLatticeElement lattice;
  HeisElement rep;
};

// g = lattice * rep with rep in [0, p) x [0, q) x [0, r). a and b are fixed
// first; the central coordinate absorbs the cross term a_lattice * b_rep.
HeisReduction heis_reduce(const HeisSublattice& sub, const HeisElement& g);
HeisReduction heis_reduce_mod_integer_lattice(const HeisElement& g);

// Elements of Heis_Z of word length <= n in the generators (+-1, 0, 0),
// (0, +-1, 0), (0, 0, +-1), sorted lexicographically by (a, b, c).
std::vector<HeisLatticeElement> heis_word_ball(int n);

// Closed box [a0, a1] x [b0, b1] x [c0, c1] in Heis coordinates.
struct HeisBox {
  double a0 = 0.0, a1 = 1.0;
  double b0 = 0.0, b1 = 1.0;
  double c0 = 0.0, c1 = 1.0;

  void validate() const;
  bool contains(const HeisElement& g) const;
};

// Whether g . K meets K for left multiplication (exact interval reasoning).
bool heis_box_meets_translate(const HeisLatticeElement& g, const HeisBox& k);

struct FactoredCounts {
  std::size_t count_x = 0;
  std::size_t count_xy = 0;
};

// For the factored action g . (x, y) = (g x, y) on Heis x R: counts elements
// of `group` with g K ∩ K nonempty, and with g (K x {y}) ∩ (K x {y}) nonempty.
FactoredCounts factored_proper_discontinuity_check(const std::vector<HeisLatticeElement>& group,
                                                   const HeisBox& k, double y);

}  // namespace solfold
