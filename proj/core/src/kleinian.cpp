#include "solfold/kleinian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace solfold {

namespace {

constexpr double kLeadingEntryTol = 1e-9;
constexpr double kOverlapSlack = 1e-12;
constexpr int kPowerSquarings = 64;

template <class Derived>
void normalize_in_place(Eigen::MatrixBase<Derived>& m) {
  const double sup = m.cwiseAbs().maxCoeff();
  if (!(sup > 0.0) || !std::isfinite(sup)) {
    throw std::invalid_argument("projective normalization of a zero or non-finite array");
  }
  // Row-major scan for the leading entry.
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double mag = std::abs(m(i, j));
      if (mag > kLeadingEntryTol * sup) {
        const Complex phase = std::conj(m(i, j)) / mag;
        m *= phase / sup;
        return;
      }
    }
  }
}

bool lex_less(const CVec3& a, const CVec3& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

CVec3 cross3(const CVec3& a, const CVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Complex bilinear(const CVec3& a, const CVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

std::int64_t det2(const IntMat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

void require_hyperbolic(const IntMat2& a, const char* who) {
  if (det2(a) != 1) throw std::invalid_argument(std::string(who) + ": det must be 1");
  const std::int64_t tr = a(0, 0) + a(1, 1);
  if (tr <= 2 && tr >= -2) throw std::invalid_argument(std::string(who) + ": |tr| must exceed 2");
}

Eigen::Vector2d eigenvector(const IntMat2& a, double mu) {
  Eigen::Vector2d v;
  if (a(0, 1) != 0) {
    v << static_cast<double>(a(0, 1)), mu - static_cast<double>(a(0, 0));
  } else {
    v << mu - static_cast<double>(a(1, 1)), static_cast<double>(a(1, 0));
  }
  const double sup = v.cwiseAbs().maxCoeff();
  v /= sup;
  const double lead = std::abs(v[0]) > 1e-12 ? v[0] : v[1];
  if (lead < 0.0) v = -v;
  return v;
}

CMat3 to_complex(const Eigen::Matrix3d& m) { return m.cast<Complex>(); }

// Limit of S^(2^j) in pseudo-projective space, or nullopt if it does not settle.
std::optional<PseudoProjectiveMap> power_limit(const CMat3& s, double eps) {
  CMat3 x = s;
  normalize_in_place(x);
  double diff = INFINITY;
  for (int i = 0; i < kPowerSquarings; ++i) {
    CMat3 y = x * x;
    normalize_in_place(y);
    diff = (y - x).cwiseAbs().maxCoeff();
    x = y;
  }
  if (!(diff < eps)) return std::nullopt;
  return PseudoProjectiveMap(x);
}

int sign_of(double v) { return v > 0.0 ? 1 : -1; }

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int i) { return parent_[i] == i ? i : parent_[i] = find(parent_[i]); }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

CVec3 normalize_projective(const CVec3& v) {
  CVec3 out = v;
  normalize_in_place(out);
  return out;
}

ProjectivePoint::ProjectivePoint(const CVec3& homogeneous) : v_(normalize_projective(homogeneous)) {}

ProjectiveLine::ProjectiveLine(const CVec3& dual) : l_(normalize_projective(dual)) {}

bool ProjectiveLine::contains(const ProjectivePoint& p, double tol) const {
  return std::abs(bilinear(l_, p.coords())) <= tol;
}

bool ProjectiveLine::same_as(const ProjectiveLine& other, double tol) const {
  return (l_ - other.l_).cwiseAbs().maxCoeff() <= tol;
}

ProjectiveLine line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
  const CVec3 l = cross3(p.coords(), q.coords());
  if (l.cwiseAbs().maxCoeff() <= 1e-12) throw std::invalid_argument("line_through: points coincide");
  return ProjectiveLine(l);
}

ProjectivePoint intersection(const ProjectiveLine& a, const ProjectiveLine& b) {
  const CVec3 p = cross3(a.dual(), b.dual());
  if (p.cwiseAbs().maxCoeff() <= 1e-12) throw std::invalid_argument("intersection: lines coincide");
  return ProjectivePoint(p);
}

bool lines_concurrent(const ProjectiveLine& a, const ProjectiveLine& b, const ProjectiveLine& c,
                      double tol) {
  CMat3 m;
  m.row(0) = a.dual().transpose();
  m.row(1) = b.dual().transpose();
  m.row(2) = c.dual().transpose();
  return std::abs(m.determinant()) <= tol;
}

PseudoProjectiveMap::PseudoProjectiveMap(const CMat3& m) : m_(m) { normalize_in_place(m_); }

int PseudoProjectiveMap::rank(double rank_tol) const {
  const Eigen::JacobiSVD<CMat3> svd(m_);
  const auto& sv = svd.singularValues();
  int r = 0;
  for (int i = 0; i < 3; ++i) {
    if (sv[i] > rank_tol * sv[0]) ++r;
  }
  return r;
}

ProjectiveKernel PseudoProjectiveMap::kernel(double rank_tol) const {
  const Eigen::JacobiSVD<CMat3> svd(m_, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int r = 0;
  for (int i = 0; i < 3; ++i) {
    if (sv[i] > rank_tol * sv[0]) ++r;
  }
  ProjectiveKernel k;
  k.dimension = 3 - r;
  const auto& v = svd.matrixV();
  if (k.dimension == 2) {
    // ker S is the Hermitian complement of the top right singular vector v1,
    // i.e. {z : sum conj(v1_i) z_i = 0}.
    k.line = ProjectiveLine(CVec3(v.col(0).conjugate()));
  } else if (k.dimension == 1) {
    k.point = ProjectivePoint(CVec3(v.col(2)));
  }
  return k;
}

double PseudoProjectiveMap::distance(const PseudoProjectiveMap& other) const {
  return (m_ - other.m_).cwiseAbs().maxCoeff();
}

IntMat2 int_mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  IntMat2 m;
  m << a, b, c, d;
  return m;
}

IntMat2 int_inverse_sl2(const IntMat2& a) {
  if (det2(a) != 1) throw std::invalid_argument("int_inverse_sl2: det must be 1");
  return int_mat(a(1, 1), -a(0, 1), -a(1, 0), a(0, 0));
}

IntMat2 int_pow(const IntMat2& a, std::int64_t k) {
  const IntMat2 base = k < 0 ? int_inverse_sl2(a) : a;
  IntMat2 out = IntMat2::Identity();
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

ToralGroupSpec::ToralGroupSpec(const IntMat2& a) : a_(a) {
  require_hyperbolic(a, "ToralGroupSpec");
  const double tr = static_cast<double>(trace());
  const double root = std::sqrt(tr * tr - 4.0);
  lambda_ = 0.5 * (tr + (tr > 0.0 ? root : -root));
  p_.col(0) = eigenvector(a, lambda_);
  p_.col(1) = eigenvector(a, 1.0 / lambda_);
  p_inv_ = p_.inverse();
}

ToralElement toral_compose(const ToralGroupSpec& spec, const ToralElement& g, const ToralElement& h) {
  const IntVec2 t = int_pow(spec.A(), g.k) * IntVec2(h.n, h.m);
  return {g.k + h.k, g.n + t[0], g.m + t[1]};
}

ToralElement toral_inverse(const ToralGroupSpec& spec, const ToralElement& g) {
  const IntVec2 t = int_pow(spec.A(), -g.k) * IntVec2(g.n, g.m);
  return {-g.k, -t[0], -t[1]};
}

IntMat3 toral_integral_matrix(const ToralGroupSpec& spec, const ToralElement& g) {
  IntMat3 m = IntMat3::Identity();
  m.topLeftCorner<2, 2>() = int_pow(spec.A(), g.k);
  m(0, 2) = g.n;
  m(1, 2) = g.m;
  return m;
}

Eigen::Matrix3d toral_element(const ToralGroupSpec& spec, const ToralElement& g, ToralForm form) {
  if (form == ToralForm::Integral) return toral_integral_matrix(spec, g).cast<double>();
  const Eigen::Vector2d uv = spec.P_inv() * Eigen::Vector2d(static_cast<double>(g.n),
                                                            static_cast<double>(g.m));
  const double lk = std::pow(spec.lambda(), static_cast<double>(g.k));
  Eigen::Matrix3d m;
  m << lk, 0.0, uv[0],
       0.0, 1.0 / lk, uv[1],
       0.0, 0.0, 1.0;
  return m;
}

std::vector<WordBallEntry> word_ball(const ToralGroupSpec& spec, int n_max, ToralForm form) {
  if (n_max < 0) throw std::invalid_argument("word_ball: N must be >= 0");
  std::vector<WordBallEntry> out;
  for (std::int64_t k = -n_max; k <= n_max; ++k) {
    const std::int64_t rk = n_max - std::abs(k);
    for (std::int64_t n = -rk; n <= rk; ++n) {
      const std::int64_t rn = rk - std::abs(n);
      for (std::int64_t m = -rn; m <= rn; ++m) {
        const ToralElement e{k, n, m};
        out.push_back({e, toral_element(spec, e, form)});
      }
    }
  }
  return out;
}

LimitKernels pseudo_limit_kernels(const ToralGroupSpec& spec, int n_max, double cluster_eps,
                                  double rank_tol) {
  if (n_max < 0) throw std::invalid_argument("pseudo_limit_kernels: N must be >= 0");
  if (!(cluster_eps > 0.0)) throw std::invalid_argument("pseudo_limit_kernels: cluster_eps must be > 0");
  if (!(rank_tol > 0.0 && rank_tol < 1.0)) {
    throw std::invalid_argument("pseudo_limit_kernels: rank_tol must lie in (0, 1)");
  }

  LimitKernels out;
  struct Cluster {
    PseudoProjectiveMap rep;
    std::size_t size;
  };
  std::vector<Cluster> clusters;
  const auto add = [&](const std::optional<PseudoProjectiveMap>& limit) {
    if (!limit) {
      ++out.unconverged;
      return;
    }
    for (auto& c : clusters) {
      if (c.rep.distance(*limit) < cluster_eps) {
        ++c.size;
        return;
      }
    }
    clusters.push_back({*limit, 1});
  };

  for (const auto& entry : word_ball(spec, n_max, ToralForm::Conjugated)) {
    if (entry.element == ToralElement{}) continue;
    add(power_limit(to_complex(entry.matrix), cluster_eps));
    const ToralElement inv = toral_inverse(spec, entry.element);
    add(power_limit(to_complex(toral_element(spec, inv, ToralForm::Conjugated)), cluster_eps));
  }
  out.limit_maps = clusters.size();

  for (const auto& c : clusters) {
    const ProjectiveKernel k = c.rep.kernel(rank_tol);
    if (k.line) {
      auto it = std::find_if(out.lines.begin(), out.lines.end(),
                             [&](const KernelLine& l) { return l.line.same_as(*k.line, cluster_eps); });
      if (it == out.lines.end()) {
        out.lines.push_back({*k.line, c.size});
      } else {
        it->cluster_size += c.size;
      }
    } else if (k.point) {
      auto it = std::find_if(out.points.begin(), out.points.end(), [&](const KernelPoint& p) {
        return (p.point.coords() - k.point->coords()).cwiseAbs().maxCoeff() < cluster_eps;
      });
      if (it == out.points.end()) {
        out.points.push_back({*k.point, c.size});
      } else {
        it->cluster_size += c.size;
      }
    }
  }
  std::sort(out.lines.begin(), out.lines.end(), [](const KernelLine& a, const KernelLine& b) {
    return lex_less(a.line.dual(), b.line.dual());
  });
  std::sort(out.points.begin(), out.points.end(), [](const KernelPoint& a, const KernelPoint& b) {
    return lex_less(a.point.coords(), b.point.coords());
  });
  return out;
}

LimitLineKind classify_limit_line(const ProjectiveLine& line, double tol) {
  const CVec3& l = line.dual();
  const bool l1_zero = std::abs(l[0]) <= tol;
  const bool l2_zero = std::abs(l[1]) <= tol;
  if (l1_zero && l2_zero) return LimitLineKind::LineAtInfinity;
  if (l2_zero && std::abs((l[2] / l[0]).imag()) <= tol) return LimitLineKind::PencilZ1;
  if (l1_zero && std::abs((l[2] / l[1]).imag()) <= tol) return LimitLineKind::PencilZ2;
  return LimitLineKind::Other;
}

std::vector<ProjectiveLine> analytic_limit_generators() {
  return {ProjectiveLine(0.0, 0.0, 1.0), ProjectiveLine(1.0, 0.0, 0.0), ProjectiveLine(0.0, 1.0, 0.0)};
}

namespace {

class GeneralPositionSearch {
 public:
  GeneralPositionSearch(const std::vector<ProjectiveLine>& lines, double tol, std::size_t budget)
      : n_(lines.size()), budget_(budget), conflict_(n_ * n_, false), membership_(n_) {
    std::vector<bool> covered(n_ * n_, false);
    std::set<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (lines[i].same_as(lines[j], tol)) {
          conflict_[i * n_ + j] = conflict_[j * n_ + i] = true;
          continue;
        }
        if (covered[i * n_ + j]) continue;
        const CVec3 p = normalize_projective(cross3(lines[i].dual(), lines[j].dual()));
        std::vector<std::size_t> through;
        for (std::size_t k = 0; k < n_; ++k) {
          if (k == i || k == j || std::abs(bilinear(lines[k].dual(), p)) <= tol) through.push_back(k);
        }
        for (std::size_t a : through) {
          for (std::size_t b : through) covered[a * n_ + b] = true;
        }
        if (through.size() >= 3) classes.insert(std::move(through));
      }
    }
    classes_.assign(classes.begin(), classes.end());
    std::stable_sort(classes_.begin(), classes_.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      for (std::size_t i : classes_[c]) membership_[i].push_back(c);
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return membership_[a].size() < membership_[b].size();
    });
    count_.assign(classes_.size(), 0);
  }

  GeneralPositionResult run() {
    // Greedy incumbent.
    for (std::size_t i : order_) {
      if (can_add(i)) add(i);
    }
    best_ = chosen_;
    while (!chosen_.empty()) remove();
    dfs(0);
    GeneralPositionResult r;
    r.k = best_.size();
    r.witness = best_;
    std::sort(r.witness.begin(), r.witness.end());
    r.exact = !exhausted_;
    return r;
  }

 private:
  bool can_add(std::size_t i) const {
    for (std::size_t c : membership_[i]) {
      if (count_[c] >= 2) return false;
    }
    for (std::size_t j : chosen_) {
      if (conflict_[i * n_ + j]) return false;
    }
    return true;
  }

  void add(std::size_t i) {
    chosen_.push_back(i);
    for (std::size_t c : membership_[i]) ++count_[c];
  }

  void remove() {
    const std::size_t i = chosen_.back();
    chosen_.pop_back();
    for (std::size_t c : membership_[i]) --count_[c];
  }

  // Upper bound on lines addable from order_[pos..]: a class can take at most
  // its remaining capacity, every other line at most one.
  std::size_t upper_bound(std::size_t pos) const {
    std::vector<bool> used(n_, false);
    std::vector<std::size_t> candidates;
    for (std::size_t q = pos; q < n_; ++q) {
      if (can_add(order_[q])) candidates.push_back(order_[q]);
    }
    std::vector<bool> is_candidate(n_, false);
    for (std::size_t i : candidates) is_candidate[i] = true;
    std::size_t bound = 0;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      std::size_t available = 0;
      for (std::size_t i : classes_[c]) {
        if (is_candidate[i] && !used[i]) {
          used[i] = true;
          ++available;
        }
      }
      bound += std::min<std::size_t>(available, 2 - count_[c]);
    }
    for (std::size_t i : candidates) {
      if (!used[i]) ++bound;
    }
    return bound;
  }

  void dfs(std::size_t pos) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (pos == n_) return;
    if (chosen_.size() + upper_bound(pos) <= best_.size()) return;
    const std::size_t i = order_[pos];
    if (can_add(i)) {
      add(i);
      dfs(pos + 1);
      remove();
    }
    dfs(pos + 1);
  }

  std::size_t n_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<bool> conflict_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::vector<std::size_t>> membership_;
  std::vector<std::size_t> order_;
  std::vector<int> count_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

}  // namespace

GeneralPositionResult general_position_max(const std::vector<ProjectiveLine>& lines, double tol,
                                           std::size_t node_budget) {
  if (lines.empty()) return {};
  return GeneralPositionSearch(lines, tol, node_budget).run();
}

KulkarniMembership kulkarni_membership(const ToralGroupSpec&, const ProjectivePoint& p, double tol) {
  const CVec3& z = p.coords();
  KulkarniMembership out;
  if (std::abs(z[2]) <= tol) return out;
  const double im1 = (z[0] / z[2]).imag();
  const double im2 = (z[1] / z[2]).imag();
  if (std::abs(im1) <= tol || std::abs(im2) <= tol) return out;
  out.in_omega = true;
  out.sign_z1 = sign_of(im1);
  out.sign_z2 = sign_of(im2);
  return out;
}

void AffineBox::validate() const {
  if (!(x1_lo <= x1_hi && y1_lo <= y1_hi && x2_lo <= x2_hi && y2_lo <= y2_hi)) {
    throw std::invalid_argument("AffineBox: bounds reversed");
  }
  if (!(y1_lo > 0.0 && y2_lo > 0.0)) {
    throw std::invalid_argument("AffineBox: box touches the limit set (y <= 0)");
  }
}

bool toral_box_meets_translate(const ToralGroupSpec& spec, const ToralElement& g,
                               const AffineBox& box) {
  const Eigen::Matrix3d m = toral_element(spec, g, ToralForm::Conjugated);
  const auto overlap = [](double s, double shift, double lo, double hi) {
    const double a = s * lo + shift;
    const double b = s * hi + shift;
    return std::min(a, b) <= hi + kOverlapSlack && lo <= std::max(a, b) + kOverlapSlack;
  };
  return overlap(m(0, 0), m(0, 2), box.x1_lo, box.x1_hi) && overlap(m(0, 0), 0.0, box.y1_lo, box.y1_hi) &&
         overlap(m(1, 1), m(1, 2), box.x2_lo, box.x2_hi) && overlap(m(1, 1), 0.0, box.y2_lo, box.y2_hi);
}

DiscontinuityCount proper_discontinuity_count(const ToralGroupSpec& spec, const AffineBox& box,
                                              int n_max) {
  box.validate();
  DiscontinuityCount out;
  for (const auto& entry : word_ball(spec, n_max, ToralForm::Conjugated)) {
    if (toral_box_meets_translate(spec, entry.element, box)) out.intersecting.push_back(entry.element);
  }
  out.count = out.intersecting.size();
  return out;
}

SolElement sol_lattice_embed(const ToralGroupSpec& spec, const ToralElement& g) {
  if (spec.lambda() < 0.0) {
    throw std::domain_error("sol_lattice_embed: tr A < -2 does not embed in Sol");
  }
  const Eigen::Vector2d uv =
      spec.P_inv() * Eigen::Vector2d(static_cast<double>(g.n), static_cast<double>(g.m));
  return {static_cast<double>(g.k) * std::log(spec.lambda()), uv[0], uv[1]};
}

IsoResult lattice_iso_test(const IntMat2& a, const IntMat2& b, std::int64_t bound) {
  require_hyperbolic(a, "lattice_iso_test (A)");
  require_hyperbolic(b, "lattice_iso_test (B)");
  if (bound < 0) throw std::invalid_argument("lattice_iso_test: bound must be >= 0");

  IsoResult out;
  if (a(0, 0) + a(1, 1) != b(0, 0) + b(1, 1)) {
    out.status = IsoStatus::Refuted;
    return out;
  }
  const IntMat2 b_inv = int_inverse_sl2(b);
  const std::array<std::pair<IsoTarget, IntMat2>, 2> targets{{{IsoTarget::B, b},
                                                              {IsoTarget::BInverse, b_inv}}};
  for (const auto& [tag, t] : targets) {
    if (a == t) {
      out.status = IsoStatus::Found;
      out.target = tag;
      return out;
    }
  }
  for (const auto& [tag, t] : targets) {
    // U A = T U, first row of U = (p, q): T12 (r, s) = (p, q) A - T11 (p, q).
    const std::int64_t t12 = t(0, 1);
    for (std::int64_t radius = 1; radius <= bound; ++radius) {
      for (std::int64_t p = -radius; p <= radius; ++p) {
        for (std::int64_t q = -radius; q <= radius; ++q) {
          if (std::max(std::abs(p), std::abs(q)) != radius) continue;
          const std::int64_t r_num = p * a(0, 0) + q * a(1, 0) - t(0, 0) * p;
          const std::int64_t s_num = p * a(0, 1) + q * a(1, 1) - t(0, 0) * q;
          if (r_num % t12 != 0 || s_num % t12 != 0) continue;
          const std::int64_t r = r_num / t12;
          const std::int64_t s = s_num / t12;
          if (std::abs(r) > bound || std::abs(s) > bound) continue;
          const IntMat2 u = int_mat(p, q, r, s);
          const std::int64_t d = det2(u);
          if (d != 1 && d != -1) continue;
          if (u * a != t * u) continue;
          out.status = IsoStatus::Found;
          out.conjugator = u;
          out.target = tag;
          return out;
        }
      }
    }
  }
  out.status = IsoStatus::NotFound;
  return out;
}

DomainReduction fundamental_domain_reduce(const ToralGroupSpec& spec, const ProductPoint& z) {
  const double lambda = spec.lambda();
  if (lambda < 0.0) throw std::domain_error("fundamental_domain_reduce: requires tr A > 2");
  const double log_lambda = std::log(lambda);
  std::int64_t k = -static_cast<std::int64_t>(std::floor(std::log(z.z1.y()) / log_lambda));
  // Guard the rounding of the logarithm ratio at the interval ends.
  while (std::pow(lambda, static_cast<double>(k)) * z.z1.y() >= lambda) --k;
  while (std::pow(lambda, static_cast<double>(k)) * z.z1.y() < 1.0) ++k;

  const double lk = std::pow(lambda, static_cast<double>(k));
  const Eigen::Vector2d w = spec.P() * Eigen::Vector2d(lk * z.z1.x(), z.z2.x() / lk);
  const ToralElement element{k, -static_cast<std::int64_t>(std::floor(w[0])),
                             -static_cast<std::int64_t>(std::floor(w[1]))};
  return {element, sol_act(SolParams::standard(), sol_lattice_embed(spec, element), z)};
}

int toral_component_count(const ToralGroupSpec& spec) {
  const auto index = [](int s1, int s2) { return (s1 > 0 ? 0 : 2) + (s2 > 0 ? 0 : 1); };
  UnionFind uf(4);
  const ToralElement generators[] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const CVec3 z(Complex(0.0, s1), Complex(0.0, s2), 1.0);
      for (const auto& g : generators) {
        const CVec3 image = to_complex(toral_element(spec, g, ToralForm::Conjugated)) * z;
        const KulkarniMembership mem = kulkarni_membership(spec, ProjectivePoint(image));
        uf.unite(index(s1, s2), index(mem.sign_z1, mem.sign_z2));
      }
    }
  }
  int roots = 0;
  for (int i = 0; i < 4; ++i) {
    if (uf.find(i) == i) ++roots;
  }
  return roots;
}

}  // namespace solfold
