#include "solfold/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace solfold {

namespace {

class BudgetedObjective {
 public:
  BudgetedObjective(const Objective& f, std::size_t budget) : f_(f), budget_(budget) {}

  bool exhausted() const { return used_ >= budget_; }
  std::size_t used() const { return used_; }

  double operator()(std::span<const double> x) {
    ++used_;
    return f_(x);
  }

 private:
  const Objective& f_;
  std::size_t budget_;
  std::size_t used_ = 0;
};

}  // namespace

SearchResult grid_compass_minimize(const Objective& f, const SearchBox& box, double final_step,
                                   std::size_t budget) {
  const std::size_t dim = box.lower.size();
  if (dim == 0 || box.upper.size() != dim) throw std::invalid_argument("search box is malformed");
  if (box.points_per_axis < 2) throw std::invalid_argument("search box needs >= 2 points per axis");
  if (!(final_step > 0.0)) throw std::invalid_argument("final_step must be > 0");
  if (budget == 0) throw std::invalid_argument("search budget must be > 0");

  BudgetedObjective eval(f, budget);
  SearchResult result;
  result.value = INFINITY;
  std::vector<double> step(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(box.upper[i] >= box.lower[i])) throw std::invalid_argument("search box bounds reversed");
    step[i] = (box.upper[i] - box.lower[i]) / (box.points_per_axis - 1);
  }

  // Mixed-radix counter over the grid.
  std::vector<int> idx(dim, 0);
  std::vector<double> x(dim);
  for (;;) {
    if (eval.exhausted()) {
      result.status = SearchStatus::BudgetExhausted;
      result.evaluations = eval.used();
      return result;
    }
    for (std::size_t i = 0; i < dim; ++i) x[i] = box.lower[i] + idx[i] * step[i];
    const double v = eval(x);
    if (v < result.value) {
      result.value = v;
      result.argmin = x;
    }
    std::size_t axis = 0;
    while (axis < dim && ++idx[axis] == box.points_per_axis) idx[axis++] = 0;
    if (axis == dim) break;
  }

  for (auto& s : step) s *= 0.5;
  x = result.argmin;
  for (;;) {
    if (*std::max_element(step.begin(), step.end()) < final_step) {
      result.status = SearchStatus::Converged;
      break;
    }
    bool improved = false;
    for (std::size_t i = 0; i < dim; ++i) {
      for (double dir : {1.0, -1.0}) {
        if (eval.exhausted()) {
          result.status = SearchStatus::BudgetExhausted;
          result.evaluations = eval.used();
          return result;
        }
        std::vector<double> trial = x;
        trial[i] += dir * step[i];
        const double v = eval(trial);
        if (v < result.value) {
          result.value = v;
          x = trial;
          result.argmin = std::move(trial);
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      for (auto& s : step) s *= 0.5;
    }
  }
  result.evaluations = eval.used();
  return result;
}

}  // namespace solfold
