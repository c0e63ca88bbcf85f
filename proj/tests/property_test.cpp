#include <solfold/heisenberg.hpp>
#include <solfold/kleinian.hpp>
#include <solfold/sol.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>
#include <string>

namespace solfold {
namespace {

// Runs `property` on `cases` seeded draws; stops at the first failure and
// reports the case index so it can be replayed.
void for_all(std::uint64_t seed, int cases, const std::function<std::string(std::mt19937_64&)>& property) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const std::string failure = property(rng);
    ASSERT_TRUE(failure.empty()) << "seed " << seed << " case " << i << ": " << failure;
  }
}

double draw(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

ProductPoint draw_point(std::mt19937_64& rng) {
  return {{draw(rng, -3, 3), std::exp(draw(rng, -1.5, 1.5))}, {draw(rng, -3, 3), std::exp(draw(rng, -1.5, 1.5))}};
}

std::string unless(bool ok, const std::string& what) { return ok ? "" : what; }

TEST(Properties, FlowIsEquivariantWithLeafEmbeddings) {
  const SolParams p(2.0, 1.0, 0.5, -0.5, 2.0);
  for_all(101, 10000, [&](std::mt19937_64& rng) {
    const ProductPoint z = draw_point(rng);
    const SolElement g{draw(rng, -2, 2), draw(rng, -3, 3), draw(rng, -3, 3)};
    const double s = draw(rng, -2, 2);
    const double defect = flow_equivariance_defect(p, z, g, s);
    return unless(defect < 1e-12, "defect " + std::to_string(defect));
  });
}

TEST(Properties, SolActionPreservesRectifiedLeafParameter) {
  for_all(102, 2000, [](std::mt19937_64& rng) {
    const ProductPoint z = draw_point(rng);
    const SolElement g{draw(rng, -2, 2), draw(rng, -3, 3), draw(rng, -3, 3)};
    const double before = rectify_inverse(z).s;
    const double after = rectify_inverse(sol_act(SolParams::standard(), g, z)).s;
    return unless(std::abs(before - after) < 1e-12, "leaf changed");
  });
}

TEST(Properties, SolActionIsIsometric) {
  for_all(103, 2000, [](std::mt19937_64& rng) {
    const ProductPoint z = draw_point(rng);
    const ProductPoint w = draw_point(rng);
    const SolElement g{draw(rng, -2, 2), draw(rng, -3, 3), draw(rng, -3, 3)};
    const SolParams p = SolParams::standard();
    const double d0 = product_distance(z, w);
    const double d1 = product_distance(sol_act(p, g, z), sol_act(p, g, w));
    return unless(std::abs(d0 - d1) < 1e-10 * std::max(1.0, d0), "distance changed");
  });
}

TEST(Properties, ProductDistanceTriangleInequality) {
  for_all(104, 2000, [](std::mt19937_64& rng) {
    const ProductPoint a = draw_point(rng), b = draw_point(rng), c = draw_point(rng);
    return unless(product_distance(a, c) <= product_distance(a, b) + product_distance(b, c) + 1e-12,
                  "triangle inequality");
  });
}

TEST(Properties, HeisActionPreservesImaginaryPartOfW) {
  for_all(105, 2000, [](std::mt19937_64& rng) {
    const MixedPoint m{{draw(rng, -3, 3), draw(rng, -3, 3)}, {draw(rng, -3, 3), std::exp(draw(rng, -1, 1))}};
    const HeisElement g{draw(rng, -3, 3), draw(rng, -3, 3), draw(rng, -3, 3)};
    return unless(heis_act(g, m).w.y() == m.w.y(), "Im w changed");
  });
}

TEST(Properties, HeisReductionIsIdempotentAndOrbitInvariant) {
  const HeisSublattice sub{2, 2, 4};
  for_all(106, 2000, [&](std::mt19937_64& rng) {
    const HeisElement g{draw(rng, -10, 10), draw(rng, -10, 10), draw(rng, -10, 10)};
    const HeisReduction r = heis_reduce(sub, g);
    const HeisReduction again = heis_reduce(sub, r.rep);
    if (!(again.lattice == HeisLatticeElement{})) return std::string("not idempotent");
    const HeisLatticeElement l{2 * draw_int(rng, -3, 3), 2 * draw_int(rng, -3, 3), 4 * draw_int(rng, -3, 3)};
    const HeisReduction moved = heis_reduce(sub, heis_mul(to_real(l), g));
    const double gap = std::max({std::abs(moved.rep.a - r.rep.a), std::abs(moved.rep.b - r.rep.b),
                                 std::abs(moved.rep.c - r.rep.c)});
    return unless(gap < 1e-9, "representative moved by " + std::to_string(gap));
  });
}

TEST(Properties, ToralCompositionIsAssociative) {
  const ToralGroupSpec spec(int_mat(3, 2, 1, 1));
  for_all(107, 2000, [&](std::mt19937_64& rng) {
    const auto element = [&] { return ToralElement{draw_int(rng, -3, 3), draw_int(rng, -9, 9), draw_int(rng, -9, 9)}; };
    const ToralElement a = element(), b = element(), c = element();
    return unless(toral_compose(spec, toral_compose(spec, a, b), c) == toral_compose(spec, a, toral_compose(spec, b, c)),
                  "not associative");
  });
}

TEST(Properties, DomainReductionIsOrbitInvariant) {
  const ToralGroupSpec spec(int_mat(2, 1, 1, 1));
  for_all(108, 2000, [&](std::mt19937_64& rng) {
    const ProductPoint z = draw_point(rng);
    const ToralElement g{draw_int(rng, -2, 2), draw_int(rng, -5, 5), draw_int(rng, -5, 5)};
    const ProductPoint gz = sol_act(SolParams::standard(), sol_lattice_embed(spec, g), z);
    const Vec4 a = fundamental_domain_reduce(spec, z).representative.coords();
    const Vec4 b = fundamental_domain_reduce(spec, gz).representative.coords();
    const double gap = (a - b).cwiseAbs().maxCoeff();
    return unless(gap < 1e-9, "representatives differ by " + std::to_string(gap));
  });
}

}  // namespace
}  // namespace solfold
