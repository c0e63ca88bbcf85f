#pragma once

#include "solfold/heisenberg.hpp"
#include "solfold/kleinian.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace solfold {

struct ResidualCheck {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct QuotientReport {
  std::string group;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  int component_count = 0;
  std::string domain;
  std::vector<ResidualCheck> checks;
  // Heisenberg reports: commutator of the first two sublattice generators.
  std::optional<HeisLatticeElement> commutator;

  bool all_pass() const;
  const ResidualCheck& check(const std::string& name) const;  // throws std::out_of_range
};

// Samples z in H+ x H+ and lattice elements g and checks: leaf preservation
// (s-coordinate of rectify_inverse), orbit invariance and reassembly of
// fundamental_domain_reduce, the semidirect relation t v t^-1 = A v in Sol and
// in exact integers, and the component count. std::nullopt is the trivial group.
// Throws std::domain_error for tr A < -2 and std::invalid_argument for samples = 0.
QuotientReport sol_quotient_check(const std::optional<ToralGroupSpec>& spec, std::size_t samples,
                                  std::uint64_t seed);

// Samples (z, w) in C x H and elements of the sublattice and checks that Im w
// is invariant, that heis_rectify is equivariant, that reduction
// representatives agree along orbits, and records the commutator.
// std::nullopt is the trivial group.
QuotientReport heis_quotient_check(const std::optional<HeisSublattice>& sub, std::size_t samples,
                                   std::uint64_t seed);

struct StructuralNote {
  std::string topic;
  std::string claim;
  std::string reference;
  bool verified = false;
  std::string status;
};

// Report-only statements about the quotient that are not checked numerically.
std::vector<StructuralNote> structural_notes(const ToralGroupSpec& spec);

}  // namespace solfold
