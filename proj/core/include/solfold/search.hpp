#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace solfold {

enum class SearchStatus { Converged, BudgetExhausted };

// Axis-aligned search region sampled with `points_per_axis` points per axis
// (endpoints included) before local refinement.
struct SearchBox {
  std::vector<double> lower;
  std::vector<double> upper;
  int points_per_axis = 5;
};

struct SearchResult {
  std::vector<double> argmin;
  double value = 0.0;
  SearchStatus status = SearchStatus::Converged;
  std::size_t evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

// Deterministic bounded minimizer: full grid scan of the box, then compass
// (coordinate pattern) search from the best grid point, halving the step
// until it drops below final_step. Stops with BudgetExhausted once
// `budget` objective evaluations have been spent.
SearchResult grid_compass_minimize(const Objective& f, const SearchBox& box, double final_step,
                                   std::size_t budget);

}  // namespace solfold
