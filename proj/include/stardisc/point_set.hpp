#pragma once

// Point sets in [0,1]^d, anchored boxes [0,b] and the counting primitives
// every other part of the library is built on.
//
// Boxes are closed. Coordinate comparisons are exact (no epsilon), so ties
// between a point coordinate and a box corner are significant.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stardisc {

class PointSet {
public:
  explicit PointSet(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("PointSet: dimension must be >= 1");
  }

  /// Takes row-major coordinates; coords.size() must be a multiple of dim.
  PointSet(std::size_t dim, std::vector<double> coords) : PointSet(dim) {
    if (coords.size() % dim != 0)
      throw std::invalid_argument("PointSet: coordinate count is not a multiple of dim");
    for (double c : coords) check_coord(c);
    coords_ = std::move(coords);
  }

  PointSet(std::size_t dim, std::initializer_list<std::initializer_list<double>> pts)
      : PointSet(dim) {
    for (const auto& p : pts) add(std::span<const double>(p.begin(), p.size()));
  }

  void add(std::span<const double> p) {
    if (p.size() != dim_)
      throw std::invalid_argument("PointSet: point has " + std::to_string(p.size()) +
                                  " coordinates, expected " + std::to_string(dim_));
    for (double c : p) check_coord(c);
    coords_.insert(coords_.end(), p.begin(), p.end());
  }
  void add(std::initializer_list<double> p) { add(std::span<const double>(p.begin(), p.size())); }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coords_.size() / dim_; }
  bool empty() const noexcept { return coords_.empty(); }

  std::span<const double> point(std::size_t k) const {
    return {coords_.data() + k * dim_, dim_};
  }
  double operator()(std::size_t k, std::size_t j) const { return coords_[k * dim_ + j]; }

  std::vector<double> column(std::size_t j) const {
    std::vector<double> col(size());
    for (std::size_t k = 0; k < col.size(); ++k) col[k] = (*this)(k, j);
    return col;
  }

  std::span<const double> raw() const noexcept { return coords_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

private:
  static void check_coord(double c) {
    if (!(c >= 0.0 && c <= 1.0))
      throw std::invalid_argument("PointSet: coordinate " + std::to_string(c) +
                                  " outside [0,1]");
  }

  std::size_t dim_;
  std::vector<double> coords_;
};

/// Closed anchored box [0,b_1] x ... x [0,b_d].
class AnchoredBox {
public:
  AnchoredBox() = default;
  explicit AnchoredBox(std::vector<double> upper) : upper_(std::move(upper)) {
    if (upper_.empty()) throw std::invalid_argument("AnchoredBox: dimension must be >= 1");
    for (double b : upper_)
      if (!(b >= 0.0 && b <= 1.0))
        throw std::invalid_argument("AnchoredBox: corner entry " + std::to_string(b) +
                                    " outside [0,1]");
  }
  AnchoredBox(std::initializer_list<double> upper)
      : AnchoredBox(std::vector<double>(upper)) {}

  static AnchoredBox unit(std::size_t dim) { return AnchoredBox(std::vector<double>(dim, 1.0)); }

  std::size_t dim() const noexcept { return upper_.size(); }
  const std::vector<double>& upper() const noexcept { return upper_; }
  double operator[](std::size_t j) const { return upper_[j]; }

  friend bool operator==(const AnchoredBox&, const AnchoredBox&) = default;
  friend auto operator<=>(const AnchoredBox& a, const AnchoredBox& b) {
    return std::lexicographical_compare_three_way(a.upper_.begin(), a.upper_.end(),
                                                  b.upper_.begin(), b.upper_.end());
  }

private:
  std::vector<double> upper_;
};

enum class Side { overfull, underfull };

inline const char* to_string(Side s) { return s == Side::overfull ? "overfull" : "underfull"; }

struct LocalDiscrepancy {
  double value = 0.0;
  Side side = Side::overfull;
  AnchoredBox box;
};

namespace detail {

inline void require_same_dim(const PointSet& ps, const AnchoredBox& box) {
  if (ps.dim() != box.dim())
    throw std::invalid_argument("dimension mismatch: point set has d=" +
                                std::to_string(ps.dim()) + ", box has d=" +
                                std::to_string(box.dim()));
}

}  // namespace detail

/// Product of the corner entries, left to right.
inline double volume(const AnchoredBox& box) {
  double v = 1.0;
  for (double b : box.upper()) v *= b;
  return v;
}

/// Points with x_j <= b_j in every coordinate.
inline std::size_t count_le(const PointSet& ps, const AnchoredBox& box) {
  detail::require_same_dim(ps, box);
  std::size_t count = 0;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    auto p = ps.point(k);
    bool inside = true;
    for (std::size_t j = 0; j < p.size() && inside; ++j) inside = p[j] <= box[j];
    count += inside;
  }
  return count;
}

/// Points with x_j < b_j in every coordinate.
inline std::size_t count_lt(const PointSet& ps, const AnchoredBox& box) {
  detail::require_same_dim(ps, box);
  std::size_t count = 0;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    auto p = ps.point(k);
    bool inside = true;
    for (std::size_t j = 0; j < p.size() && inside; ++j) inside = p[j] < box[j];
    count += inside;
  }
  return count;
}

/// Points inside the closed box that attain at least one face through the
/// upper corner (the "right upper" boundary).
inline std::size_t boundary_count(const PointSet& ps, const AnchoredBox& box) {
  detail::require_same_dim(ps, box);
  std::size_t count = 0;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    auto p = ps.point(k);
    bool inside = true;
    bool on_face = false;
    for (std::size_t j = 0; j < p.size() && inside; ++j) {
      inside = p[j] <= box[j];
      on_face = on_face || p[j] == box[j];
    }
    count += inside && on_face;
  }
  return count;
}

/// Local discrepancy from precomputed counts. Overfull wins ties.
inline LocalDiscrepancy local_disc_from_counts(std::size_t n, std::size_t le, std::size_t lt,
                                               double vol, AnchoredBox box) {
  const double over = static_cast<double>(le) / static_cast<double>(n) - vol;
  const double under = vol - static_cast<double>(lt) / static_cast<double>(n);
  if (over >= under) return {over, Side::overfull, std::move(box)};
  return {under, Side::underfull, std::move(box)};
}

/// max(count_le/n - vol, vol - count_lt/n). The second branch is the limit of
/// closed boxes approaching b from below, so the result never exceeds D*_n.
inline LocalDiscrepancy local_disc(const PointSet& ps, const AnchoredBox& box) {
  if (ps.empty()) throw std::invalid_argument("local_disc: empty point set");
  return local_disc_from_counts(ps.size(), count_le(ps, box), count_lt(ps, box), volume(box),
                                box);
}

}  // namespace stardisc
