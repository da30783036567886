#pragma once

// Exact star discrepancy by enumeration of the critical grid, a mesh-based
// oracle written independently of it, and a seeded random-corner lower bound.
//
// The supremum defining D*_n is attained on the grid G_1 x ... x G_d where G_j
// holds the j-th coordinates of the points plus 1: overfull boxes can shrink
// onto coordinate values, underfull boxes can grow to the next value (or 1).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "point_set.hpp"
#include "rng.hpp"

namespace stardisc {

using Grid = std::vector<std::vector<double>>;

struct DiscrepancyResult {
  double value = 0.0;
  AnchoredBox witness;
  Side side = Side::overfull;
};

struct EnumerationOptions {
  double budget = default_grid_budget;  // maximum number of grid cells
  unsigned threads = 1;
};

/// Sorted, deduplicated coordinate values per dimension, each with 1 appended.
inline Grid critical_grid(const PointSet& ps) {
  Grid grid(ps.dim());
  for (std::size_t j = 0; j < ps.dim(); ++j) {
    auto& g = grid[j];
    g = ps.column(j);
    g.push_back(1.0);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }
  return grid;
}

inline double grid_cells(const Grid& grid) {
  double cells = 1.0;
  for (const auto& g : grid) cells *= static_cast<double>(g.size());
  return cells;
}

namespace detail {

// Odometer over the grid with dimension 0 outermost. Each level keeps only the
// points still inside the prefix box, tagged with whether they are strictly
// inside so far; the last level is a sorted sweep.
class ExactEnumerator {
public:
  ExactEnumerator(const PointSet& ps, const Grid& grid) : ps_(ps), grid_(grid) {}

  struct Best {
    double value = -1.0;
    std::vector<double> corner;
    Side side = Side::overfull;
  };

  /// Enumerates cells whose first coordinate index lies in [first_lo, first_hi).
  Best run(std::size_t first_lo, std::size_t first_hi) {
    best_ = Best{};
    corner_.assign(ps_.dim(), 0.0);
    std::vector<Entry> all(ps_.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = {k, true};
    descend(0, all, 1.0, first_lo, first_hi);
    return best_;
  }

private:
  struct Entry {
    std::size_t index;
    bool strict;
  };

  void descend(std::size_t level, const std::vector<Entry>& entries, double prefix_vol,
               std::size_t lo, std::size_t hi) {
    const std::size_t d = ps_.dim();
    const auto& values = grid_[level];
    if (level + 1 == d) {
      sweep_last(entries, prefix_vol, lo, hi);
      return;
    }
    std::vector<Entry> next;
    next.reserve(entries.size());
    for (std::size_t i = lo; i < hi; ++i) {
      const double g = values[i];
      next.clear();
      for (const Entry& e : entries) {
        const double x = ps_(e.index, level);
        if (x <= g) next.push_back({e.index, e.strict && x < g});
      }
      corner_[level] = g;
      descend(level + 1, next, prefix_vol * g, 0, grid_[level + 1].size());
    }
  }

  void sweep_last(const std::vector<Entry>& entries, double prefix_vol, std::size_t lo,
                  std::size_t hi) {
    const std::size_t last = ps_.dim() - 1;
    le_.clear();
    lt_.clear();
    for (const Entry& e : entries) {
      const double x = ps_(e.index, last);
      le_.push_back(x);
      if (e.strict) lt_.push_back(x);
    }
    std::sort(le_.begin(), le_.end());
    std::sort(lt_.begin(), lt_.end());
    const auto n = static_cast<double>(ps_.size());
    const auto& values = grid_[last];
    std::size_t le_pos = 0, lt_pos = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      const double g = values[i];
      while (le_pos < le_.size() && le_[le_pos] <= g) ++le_pos;
      while (lt_pos < lt_.size() && lt_[lt_pos] < g) ++lt_pos;
      const double vol = prefix_vol * g;
      const double over = static_cast<double>(le_pos) / n - vol;
      const double under = vol - static_cast<double>(lt_pos) / n;
      const double value = std::max(over, under);
      if (value > best_.value) {
        corner_[last] = g;
        best_.value = value;
        best_.corner = corner_;
        best_.side = over >= under ? Side::overfull : Side::underfull;
      }
    }
  }

  const PointSet& ps_;
  const Grid& grid_;
  Best best_;
  std::vector<double> corner_;
  std::vector<double> le_, lt_;
};

inline void check_budget(double cells, double budget) {
  if (cells > budget) throw budget_exceeded(cells, budget);
}

}  // namespace detail

/// Exact D*_n. Witness is the lexicographically smallest maximizing grid
/// corner, independent of the thread count.
inline DiscrepancyResult star_discrepancy_exact(const PointSet& ps,
                                                const EnumerationOptions& opts = {}) {
  if (ps.empty()) throw std::invalid_argument("star_discrepancy_exact: empty point set");
  const Grid grid = critical_grid(ps);
  detail::check_budget(grid_cells(grid), opts.budget);

  const std::size_t first = grid[0].size();
  const std::size_t shards =
      ps.dim() == 1 ? 1 : std::clamp<std::size_t>(opts.threads, 1, first);
  std::vector<detail::ExactEnumerator::Best> partial(shards);
  auto work = [&](std::size_t s) {
    detail::ExactEnumerator e(ps, grid);
    partial[s] = e.run(first * s / shards, first * (s + 1) / shards);
  };
  if (shards == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t s = 0; s < shards; ++s) pool.emplace_back(work, s);
  }

  // Shards cover increasing first coordinates, so strict '>' keeps the
  // lexicographically smallest corner.
  detail::ExactEnumerator::Best best = partial[0];
  for (std::size_t s = 1; s < shards; ++s)
    if (partial[s].value > best.value) best = partial[s];
  return {best.value, AnchoredBox(best.corner), best.side};
}

/// Max local discrepancy over the product of ({i/m} u G_j), evaluated corner
/// by corner with direct counting. Shares no enumeration code with
/// star_discrepancy_exact and must agree with it.
inline double star_discrepancy_oracle(const PointSet& ps, std::size_t mesh,
                                      double budget = default_grid_budget) {
  if (mesh == 0) throw std::invalid_argument("star_discrepancy_oracle: mesh must be >= 1");
  if (ps.empty()) throw std::invalid_argument("star_discrepancy_oracle: empty point set");
  const std::size_t d = ps.dim();
  std::vector<std::vector<double>> axes(d);
  double cells = 1.0;
  for (std::size_t j = 0; j < d; ++j) {
    std::set<double> values{1.0};
    for (std::size_t i = 0; i <= mesh; ++i)
      values.insert(static_cast<double>(i) / static_cast<double>(mesh));
    for (std::size_t k = 0; k < ps.size(); ++k) values.insert(ps(k, j));
    axes[j].assign(values.begin(), values.end());
    cells *= static_cast<double>(axes[j].size());
  }
  detail::check_budget(cells, budget);

  std::vector<std::size_t> idx(d, 0);
  std::vector<double> corner(d);
  double best = 0.0;
  for (;;) {
    for (std::size_t j = 0; j < d; ++j) corner[j] = axes[j][idx[j]];
    const AnchoredBox box(corner);
    best = std::max(best, local_disc(ps, box).value);
    std::size_t j = d;
    while (j > 0) {
      --j;
      if (++idx[j] < axes[j].size()) break;
      idx[j] = 0;
      if (j == 0) return best;
    }
  }
}

/// Best local discrepancy over `budget` random critical-grid corners. When the
/// budget covers the whole grid the grid is enumerated instead.
inline LocalDiscrepancy lower_bound_sample(const PointSet& ps, std::uint64_t budget,
                                           std::uint64_t seed) {
  if (budget == 0) throw std::invalid_argument("lower_bound_sample: budget must be >= 1");
  if (ps.empty()) throw std::invalid_argument("lower_bound_sample: empty point set");
  const Grid grid = critical_grid(ps);
  if (grid_cells(grid) <= static_cast<double>(budget)) {
    auto exact = star_discrepancy_exact(ps, {.budget = static_cast<double>(budget)});
    return {exact.value, exact.side, std::move(exact.witness)};
  }

  SplitMix64 rng(seed);
  std::vector<double> corner(ps.dim());
  LocalDiscrepancy best{-1.0, Side::overfull, {}};
  for (std::uint64_t s = 0; s < budget; ++s) {
    for (std::size_t j = 0; j < ps.dim(); ++j) corner[j] = grid[j][rng.below(grid[j].size())];
    AnchoredBox box(corner);
    auto ld = local_disc(ps, box);
    if (ld.value > best.value) best = std::move(ld);
  }
  return best;
}

}  // namespace stardisc
