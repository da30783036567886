#pragma once

// Combinatorial complexity of point sets with respect to anchored boxes:
// shatter counts, the largest number of points on the upper boundary of one
// box (property P(r)), and the counting bounds that go with them.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "discrepancy.hpp"
#include "errors.hpp"
#include "point_set.hpp"

namespace stardisc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<long long>;

namespace detail {

struct BitsetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& words) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

using Bits = std::vector<std::uint64_t>;

inline Bits to_bits(std::size_t n, const std::vector<std::size_t>& members) {
  Bits bits((n + 63) / 64, 0);
  for (std::size_t k : members) bits[k / 64] |= std::uint64_t{1} << (k % 64);
  return bits;
}

inline void sort_by_coordinate(const PointSet& ps, std::size_t j, std::vector<std::size_t>& idx) {
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return ps(a, j) < ps(b, j); });
}

// Depth-first over dimensions. At level j the surviving set {k : x_k <= b so
// far} only changes at the survivors' own j-coordinates (and at 0), so those
// are the only branches, and a survivor set already reached at this level is
// not expanded twice. `budget` caps the total size of the survivor sets
// expanded.
class SubsetCollector {
public:
  SubsetCollector(const PointSet& ps, double budget)
      : ps_(ps), budget_(budget), seen_(ps.dim() + 1) {}

  std::unordered_set<Bits, BitsetHash> run() {
    std::vector<std::size_t> all(ps_.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    visit(0, std::move(all));
    return std::move(seen_.back());
  }

private:
  void visit(std::size_t level, std::vector<std::size_t> inside) {
    if (!seen_[level].insert(to_bits(ps_.size(), inside)).second) return;
    work_ += static_cast<double>(inside.size() + 1);
    if (work_ > budget_) throw budget_exceeded(work_, budget_, "work units");
    if (level == ps_.dim()) return;
    sort_by_coordinate(ps_, level, inside);
    if (inside.empty() || ps_(inside.front(), level) > 0.0) visit(level + 1, {});
    std::size_t pos = 0;
    while (pos < inside.size()) {
      const double v = ps_(inside[pos], level);
      while (pos < inside.size() && ps_(inside[pos], level) == v) ++pos;
      visit(level + 1, {inside.begin(), inside.begin() + static_cast<std::ptrdiff_t>(pos)});
    }
  }

  const PointSet& ps_;
  double budget_;
  double work_ = 0;
  std::vector<std::unordered_set<Bits, BitsetHash>> seen_;
};

// Branch and bound for the largest boundary count. Corner entries only need
// to range over the survivors' coordinates; a branch whose survivors cannot
// beat the best count is cut. Branches are taken in increasing order, so the
// first maximizer found is the lexicographically smallest one. Stops early
// once `enough` points are found.
class BoundaryMaximizer {
public:
  BoundaryMaximizer(const PointSet& ps, double budget, std::size_t enough)
      : ps_(ps), budget_(budget), enough_(enough), seen_(ps.dim()) {}

  std::pair<std::vector<double>, std::size_t> run() {
    corner_.assign(ps_.dim(), 0.0);
    std::vector<std::size_t> all(ps_.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    descend(0, std::move(all), std::vector<char>(ps_.size(), 0));
    return {best_corner_, best_count_};
  }

private:
  bool done() const { return found_ && best_count_ >= enough_; }

  // Points not yet on a face can only reach one in a later dimension j, by
  // sharing the single value b_j; so each such dimension adds at most the
  // largest multiplicity of a value among them.
  std::size_t reachable(std::size_t level, const std::vector<std::size_t>& open) {
    std::size_t total = 0;
    std::vector<double> values(open.size());
    for (std::size_t j = level; j < ps_.dim() && total < open.size(); ++j) {
      for (std::size_t i = 0; i < open.size(); ++i) values[i] = ps_(open[i], j);
      std::sort(values.begin(), values.end());
      std::size_t most = 0;
      for (std::size_t i = 0, run = 0; i < values.size(); ++i) {
        run = (i > 0 && values[i] == values[i - 1]) ? run + 1 : 1;
        most = std::max(most, run);
      }
      total += most;
    }
    return std::min(total, open.size());
  }

  void descend(std::size_t level, std::vector<std::size_t> inside, const std::vector<char>& hit) {
    if (level == ps_.dim()) {
      std::size_t count = 0;
      for (std::size_t k : inside) count += hit[k] ? 1 : 0;
      if (!found_ || count > best_count_) {
        found_ = true;
        best_count_ = count;
        best_corner_ = corner_;
      }
      return;
    }
    if (found_ && inside.size() <= best_count_) return;
    std::vector<std::size_t> hits, open;
    for (std::size_t k : inside) (hit[k] ? hits : open).push_back(k);
    work_ += static_cast<double>(inside.size() * (ps_.dim() - level) + 1);
    if (work_ > budget_) throw budget_exceeded(work_, budget_, "work units");
    if (found_ && hits.size() + reachable(level, open) <= best_count_) return;
    Bits key = to_bits(ps_.size(), inside);
    const Bits hit_bits = to_bits(ps_.size(), hits);
    key.insert(key.end(), hit_bits.begin(), hit_bits.end());
    if (!seen_[level].insert(std::move(key)).second) return;

    sort_by_coordinate(ps_, level, inside);
    std::vector<char> next_hit = hit;
    std::size_t pos = 0;
    while (pos < inside.size() && !done()) {
      const double v = ps_(inside[pos], level);
      const std::size_t from = pos;
      while (pos < inside.size() && ps_(inside[pos], level) == v) ++pos;
      for (std::size_t i = from; i < pos; ++i) next_hit[inside[i]] = 1;
      corner_[level] = v;
      descend(level + 1, {inside.begin(), inside.begin() + static_cast<std::ptrdiff_t>(pos)},
              next_hit);
      for (std::size_t i = from; i < pos; ++i) next_hit[inside[i]] = hit[inside[i]];
    }
  }

  const PointSet& ps_;
  double budget_;
  std::size_t enough_;
  double work_ = 0;
  std::vector<std::unordered_set<Bits, BitsetHash>> seen_;
  std::vector<double> corner_;
  std::vector<double> best_corner_;
  std::size_t best_count_ = 0;
  bool found_ = false;
};

}  // namespace detail

/// Number of distinct subsets {k : x_k <= b} over closed anchored boxes.
/// `budget` caps the search work (survivor entries scanned).
inline BigInt shatter_count(const PointSet& ps, double budget = default_grid_budget,
                            bool* includes_empty = nullptr) {
  if (ps.empty()) {
    if (includes_empty) *includes_empty = true;
    return 1;
  }
  auto subsets = detail::SubsetCollector(ps, budget).run();
  if (includes_empty)
    *includes_empty = subsets.contains(std::vector<std::uint64_t>((ps.size() + 63) / 64, 0));
  return BigInt(subsets.size());
}

struct BoundaryMaximum {
  AnchoredBox box;
  std::size_t count = 0;
};

/// Largest boundary_count over corners drawn from the coordinate values
/// (shrinking any box onto its largest included coordinates loses no boundary
/// point). Ties go to the lexicographically smallest corner. `budget` caps the
/// search work (survivor entries scanned).
inline BoundaryMaximum max_boundary_box(const PointSet& ps, double budget = default_grid_budget) {
  if (ps.empty()) throw std::invalid_argument("max_boundary_box: empty point set");
  auto [corner, count] = detail::BoundaryMaximizer(ps, budget, ps.size() + 1).run();
  return {AnchoredBox(std::move(corner)), count};
}

/// True iff no anchored box has r or more points on its upper boundary.
inline bool has_property_P(const PointSet& ps, Rational r, double budget = default_grid_budget) {
  if (r <= 0) throw std::invalid_argument("has_property_P: r must be positive");
  if (ps.empty()) return true;
  // Counts are integers, so "some box has >= r" means "some box has >= ceil(r)".
  const auto need = static_cast<std::size_t>((r.numerator() + r.denominator() - 1) / r.denominator());
  return detail::BoundaryMaximizer(ps, budget, need).run().second < need;
}

/// sum_{i=0}^{min(d,n)} C(n, i).
inline BigInt sauer_shelah(std::size_t n, std::size_t d) {
  BigInt term = 1;
  BigInt sum = 1;
  for (std::size_t i = 0; i < std::min(d, n); ++i) {
    term = term * (n - i) / (i + 1);
    sum += term;
  }
  return sum;
}

/// Solution of N(n,d) = N(n-1,d) + N(n-1,d-1), N(1,d) = 2, N(n,1) = n+1.
inline BigInt n_recursion(std::size_t n, std::size_t d) {
  if (n == 0 || d == 0) throw std::invalid_argument("n_recursion: requires n, d >= 1");
  // row[s] holds N(m, s) for the current m.
  std::vector<BigInt> row(d + 1, 2);
  for (std::size_t m = 2; m <= n; ++m) {
    for (std::size_t s = d; s >= 2; --s) row[s] += row[s - 1];
    row[1] = m + 1;
  }
  return row[d];
}

/// Upper bound for the shatter count of m points in [0,1]^s with property
/// P(r): the recursion U(m,s) <= U(m-1,s) + U(m-1,s-2), valid while r < s,
/// capped by Sauer-Shelah at every step.
inline BigInt hat_n_bound(std::size_t m, std::size_t s, std::size_t r) {
  if (m == 0 || r == 0) throw std::invalid_argument("hat_n_bound: requires m >= 1, r >= 1");
  // sauer[t] = sum_{i<=t} C(mm, i) for the current mm, maintained with Pascal.
  std::vector<BigInt> binom(s + 1, 0);
  binom[0] = 1;
  std::vector<BigInt> prev(s + 1), cur(s + 1);
  for (std::size_t mm = 1; mm <= m; ++mm) {
    for (std::size_t i = std::min(mm, s); i >= 1; --i) binom[i] += binom[i - 1];
    BigInt sauer = 0;
    for (std::size_t t = 0; t <= s; ++t) {
      sauer += binom[t];
      if (r >= t) {
        cur[t] = sauer;
      } else if (t == 0 || mm == 1) {
        cur[t] = 2;
      } else {
        BigInt rec = prev[t] + (t >= 2 ? prev[t - 2] : BigInt(0));
        cur[t] = std::min(sauer, rec);
      }
    }
    std::swap(prev, cur);
  }
  return prev[s];
}

/// N(n,r) * sum_{0 <= i <= d/2} C(n,i).
inline BigInt claim_bound(std::size_t n, std::size_t d, std::size_t r) {
  if (n == 0 || d == 0 || r == 0)
    throw std::invalid_argument("claim_bound: requires n, d, r >= 1");
  return sauer_shelah(n, r) * sauer_shelah(n, d / 2);
}

namespace detail {
inline void require_n_ge_d(std::size_t n, std::size_t d, const char* what) {
  if (d == 0 || n < d)
    throw std::invalid_argument(std::string(what) + ": requires n >= d >= 1 (n=" +
                                std::to_string(n) + ", d=" + std::to_string(d) + ")");
}
}  // namespace detail

/// log of 2^d (en/d)^(3d/4).
inline double log_nbound(std::size_t n, std::size_t d) {
  detail::require_n_ge_d(n, d, "nbound");
  const double dd = static_cast<double>(d);
  return dd * std::numbers::ln2 +
         0.75 * dd * (1.0 + std::log(static_cast<double>(n) / dd));
}
inline double nbound(std::size_t n, std::size_t d) { return std::exp(log_nbound(n, d)); }

/// log of (en/d)^d.
inline double log_binom_sum_bound(std::size_t n, std::size_t d) {
  detail::require_n_ge_d(n, d, "binom_sum_bound");
  const double dd = static_cast<double>(d);
  return dd * (1.0 + std::log(static_cast<double>(n) / dd));
}
inline double binom_sum_bound(std::size_t n, std::size_t d) {
  return std::exp(log_binom_sum_bound(n, d));
}

/// d^(3/4) / (372 n^(3/4)).
inline double theorem2_bound(std::size_t n, std::size_t d) {
  detail::require_n_ge_d(n, d, "theorem2_bound");
  return std::pow(static_cast<double>(d) / static_cast<double>(n), 0.75) / 372.0;
}

/// d^(3/4) / (93 n^(3/4)); theorem2_bound is a quarter of this.
inline double theorem2_epsilon(std::size_t n, std::size_t d) {
  detail::require_n_ge_d(n, d, "theorem2_epsilon");
  return std::pow(static_cast<double>(d) / static_cast<double>(n), 0.75) / 93.0;
}

/// 2^d (en/d)^(3d/4) < (8 e eps)^(-d), compared in log space.
inline bool packing_condition(std::size_t n, std::size_t d, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("packing_condition: epsilon must be > 0");
  const double rhs = -static_cast<double>(d) * std::log(8.0 * std::numbers::e * epsilon);
  return log_nbound(n, d) < rhs;
}

inline double log_of(const BigInt& x) {
  if (x <= 0) return -INFINITY;
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 1000) return std::log(x.convert_to<double>());
  const unsigned shift = static_cast<unsigned>(bits) - 60;
  return std::log((x >> shift).convert_to<double>()) + shift * std::numbers::ln2;
}

struct BoundsTable {
  std::size_t n = 0, d = 0, r = 0;
  BigInt sauer, n_rec, hat_n, claim;
  double nbound_real = 0.0;
  double binom_bound_real = 0.0;
  double thm2_bound = 0.0;
  double epsilon = 0.0;
  bool packing_ok = false;
};

/// One row of every counting bound at (n, d, r). Requires n >= d >= 1, r >= 1.
inline BoundsTable bounds_table(std::size_t n, std::size_t d, std::size_t r) {
  detail::require_n_ge_d(n, d, "bounds_table");
  if (r == 0) throw std::invalid_argument("bounds_table: requires r >= 1");
  BoundsTable t;
  t.n = n;
  t.d = d;
  t.r = r;
  t.sauer = sauer_shelah(n, d);
  t.n_rec = n_recursion(n, d);
  t.hat_n = hat_n_bound(n, d, r);
  t.claim = claim_bound(n, d, r);
  t.nbound_real = nbound(n, d);
  t.binom_bound_real = binom_sum_bound(n, d);
  t.thm2_bound = theorem2_bound(n, d);
  t.epsilon = theorem2_epsilon(n, d);
  t.packing_ok = packing_condition(n, d, t.epsilon);
  return t;
}

struct ShatterReport {
  BigInt count;
  bool includes_empty = false;
  BigInt sauer_shelah_bound;
  std::size_t max_boundary = 0;
  AnchoredBox max_boundary_box;
};

inline ShatterReport shatter_report(const PointSet& ps, double budget = default_grid_budget) {
  ShatterReport rep;
  rep.count = shatter_count(ps, budget, &rep.includes_empty);
  rep.sauer_shelah_bound = sauer_shelah(ps.size(), ps.dim());
  auto mb = max_boundary_box(ps, budget);
  rep.max_boundary = mb.count;
  rep.max_boundary_box = std::move(mb.box);
  return rep;
}

}  // namespace stardisc
