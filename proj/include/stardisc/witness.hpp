#pragma once

// Constructive lower bounds D*_n >= d/(12n) for n >= 250d (and the easier
// D*_n >= d/(2n) for n >= 2ed^2). Every routine returns a concrete anchored
// box and its measured local discrepancy, so a certificate can be checked
// without trusting the construction.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "discrepancy.hpp"
#include "point_set.hpp"

namespace stardisc {

struct KappaPartition {
  double kappa = 0.0;
  std::vector<std::size_t> p0, p1, p2;
  /// For every point, the dimensions where it exceeds kappa.
  std::vector<std::vector<std::size_t>> large_coords;
  /// Dimensions that are the large coordinate of some point in p1 (sorted).
  std::vector<std::size_t> c_set;
};

/// Threshold (1 - 25d/n)^(1/d); requires n > 25d.
inline double kappa_threshold(std::size_t n, std::size_t d) {
  if (n <= 25 * d)
    throw std::invalid_argument("kappa partition needs n > 25d (n=" + std::to_string(n) +
                                ", d=" + std::to_string(d) + ")");
  const double base = static_cast<double>(n - 25 * d) / static_cast<double>(n);
  return std::pow(base, 1.0 / static_cast<double>(d));
}

inline KappaPartition partition_kappa(const PointSet& ps) {
  KappaPartition part;
  part.kappa = kappa_threshold(ps.size(), ps.dim());
  part.large_coords.resize(ps.size());
  std::vector<bool> in_c(ps.dim(), false);
  for (std::size_t k = 0; k < ps.size(); ++k) {
    auto& large = part.large_coords[k];
    for (std::size_t j = 0; j < ps.dim(); ++j)
      if (ps(k, j) > part.kappa) large.push_back(j);
    if (large.empty()) {
      part.p0.push_back(k);
    } else if (large.size() == 1) {
      part.p1.push_back(k);
      in_c[large.front()] = true;
    } else {
      part.p2.push_back(k);
    }
  }
  for (std::size_t j = 0; j < ps.dim(); ++j)
    if (in_c[j]) part.c_set.push_back(j);
  return part;
}

struct Case3Step {
  std::size_t dim = 0;                 // coordinate j_k, 0-based
  std::vector<std::size_t> removed;    // R_k
  std::size_t remaining_before = 0;    // |S_{k-1}|
  std::size_t size() const noexcept { return removed.size(); }  // m_k
};

struct Case3Trace {
  std::size_t m_big = 0;  // |P2|
  std::vector<Case3Step> steps;
  std::size_t k = 0;
  double q = 0.0;
  std::vector<std::size_t> c_k;  // sorted
};

enum class WitnessCase { trivial_1d, simple_disjoint, simple_boundary, case1, case2, case3 };

inline const char* to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::trivial_1d: return "trivial_1d";
    case WitnessCase::simple_disjoint: return "simple_disjoint";
    case WitnessCase::simple_boundary: return "simple_boundary";
    case WitnessCase::case1: return "case1";
    case WitnessCase::case2: return "case2";
    case WitnessCase::case3: return "case3";
  }
  return "?";
}

struct WitnessCertificate {
  WitnessCase case_label = WitnessCase::trivial_1d;
  std::vector<AnchoredBox> boxes;
  AnchoredBox best;
  double measured = 0.0;
  Side side = Side::overfull;
  double guaranteed = 0.0;
  bool guarantee_valid = false;
  std::optional<KappaPartition> partition;
  std::optional<Case3Trace> trace;

  bool holds() const { return measured >= guaranteed; }
};

namespace detail {

// Evaluates every candidate and keeps the first maximizer.
inline void finish_certificate(const PointSet& ps, WitnessCertificate& cert) {
  std::optional<LocalDiscrepancy> best;
  for (const auto& box : cert.boxes) {
    auto ld = local_disc(ps, box);
    if (!best || ld.value > best->value) best = std::move(ld);
  }
  cert.best = best->box;
  cert.measured = best->value;
  cert.side = best->side;
}

inline AnchoredBox kappa_box(std::size_t d, double kappa, const std::vector<std::size_t>& dims) {
  std::vector<double> b(d, 1.0);
  for (std::size_t j : dims) b[j] = kappa;
  return AnchoredBox(std::move(b));
}

inline WitnessCertificate trivial_witness(const PointSet& ps) {
  PointSet first(1, ps.column(0));
  const double a = star_discrepancy_exact(first).witness[0];
  std::vector<double> b(ps.dim(), 1.0);
  b[0] = a;
  WitnessCertificate cert;
  cert.case_label = WitnessCase::trivial_1d;
  cert.boxes.emplace_back(std::move(b));
  finish_certificate(ps, cert);
  return cert;
}

inline Case3Trace run_case3(const PointSet& ps, const KappaPartition& part) {
  const std::size_t d = ps.dim();
  Case3Trace trace;
  trace.m_big = part.p2.size();
  trace.k = (d + 6) / 7;
  trace.q = static_cast<double>(trace.k) / static_cast<double>(d);

  std::vector<std::size_t> remaining = part.p2;
  std::vector<bool> used(d, false);
  for (std::size_t step = 0; step < trace.k; ++step) {
    Case3Step s;
    s.remaining_before = remaining.size();
    std::size_t best_dim = d;
    std::size_t best_count = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (used[j]) continue;
      std::size_t c = 0;
      for (std::size_t k : remaining) c += ps(k, j) > part.kappa;
      if (best_dim == d || c > best_count) {
        best_dim = j;
        best_count = c;
      }
    }
    s.dim = best_dim;
    used[best_dim] = true;
    std::vector<std::size_t> kept;
    for (std::size_t k : remaining) {
      if (ps(k, best_dim) > part.kappa)
        s.removed.push_back(k);
      else
        kept.push_back(k);
    }
    remaining = std::move(kept);
    trace.steps.push_back(std::move(s));
  }
  for (std::size_t j = 0; j < d; ++j)
    if (used[j]) trace.c_k.push_back(j);
  return trace;
}

}  // namespace detail

/// Cheap-argument witness for n >= 2ed^2 with kappa' = 1 - 1/d. Either every
/// dimension j has a point that is large only in j (then those d points lie on
/// the upper boundary of one box), or some dimension has none and the slab
/// [0,1] x [0,kappa']^(d-1) holds exactly the points of [0,kappa']^d.
inline WitnessCertificate simple_witness(const PointSet& ps) {
  const std::size_t d = ps.dim();
  const std::size_t n = ps.size();
  if (d < 2) throw std::invalid_argument("simple_witness: requires d >= 2");
  if (n == 0) throw std::invalid_argument("simple_witness: empty point set");
  const double kappa = 1.0 - 1.0 / static_cast<double>(d);

  // qualifier[j]: point with x_j > kappa, all other coordinates <= kappa,
  // largest x_j first, then smallest index.
  std::vector<std::optional<std::size_t>> qualifier(d);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t large = d;
    std::size_t count = 0;
    for (std::size_t j = 0; j < d; ++j)
      if (ps(k, j) > kappa) {
        large = j;
        ++count;
      }
    if (count != 1) continue;
    auto& q = qualifier[large];
    if (!q || ps(k, large) > ps(*q, large)) q = k;
  }

  WitnessCertificate cert;
  const auto missing = std::find(qualifier.begin(), qualifier.end(), std::nullopt);
  if (missing == qualifier.end()) {
    std::vector<double> b(d);
    for (std::size_t j = 0; j < d; ++j) b[j] = ps(*qualifier[j], j);
    cert.case_label = WitnessCase::simple_boundary;
    cert.boxes.emplace_back(std::move(b));
    cert.guaranteed = static_cast<double>(d) / (2.0 * static_cast<double>(n));
  } else {
    const auto j = static_cast<std::size_t>(missing - qualifier.begin());
    std::vector<double> slab(d, kappa);
    slab[j] = 1.0;
    cert.case_label = WitnessCase::simple_disjoint;
    cert.boxes.emplace_back(std::move(slab));
    cert.boxes.emplace_back(std::vector<double>(d, kappa));
    cert.guaranteed = static_cast<double>(d) / static_cast<double>(n);
  }
  cert.guarantee_valid =
      static_cast<double>(n) >= 2.0 * std::numbers::e * static_cast<double>(d * d);
  detail::finish_certificate(ps, cert);
  return cert;
}

/// The three-way construction on the kappa partition, for any d with
/// n > 25d. Case 1 puts |C| >= d/6 points on one upper boundary; case 2 finds
/// an underfull box avoiding the faces in C; case 3 removes points with two or
/// more large coordinates over ceil(d/7) steps and compares [0,kappa]^d with
/// the box that is kappa only on the removed directions.
///
/// The d/(12n) guarantee is claimed when n >= 250d, except for case 3 with
/// d <= 6 where k/d falls outside [1/7, 1/4].
inline WitnessCertificate kappa_witness(const PointSet& ps) {
  const std::size_t d = ps.dim();
  const std::size_t n = ps.size();
  KappaPartition part = partition_kappa(ps);
  const double kappa = part.kappa;

  WitnessCertificate cert;
  cert.guaranteed = static_cast<double>(d) / (12.0 * static_cast<double>(n));
  if (6 * part.c_set.size() >= d) {
    // The p1 point with the largest j-th coordinate sits on the face x_j = b_j.
    std::vector<double> b(d, kappa);
    for (std::size_t k : part.p1) {
      const std::size_t j = part.large_coords[k].front();
      b[j] = std::max(b[j], ps(k, j));
    }
    cert.case_label = WitnessCase::case1;
    cert.boxes.emplace_back(std::move(b));
  } else if (24 * part.p1.size() >= 107 * d) {
    cert.case_label = WitnessCase::case2;
    cert.boxes.push_back(detail::kappa_box(d, kappa, part.c_set));
  } else {
    Case3Trace trace = detail::run_case3(ps, part);
    cert.case_label = WitnessCase::case3;
    cert.boxes.emplace_back(std::vector<double>(d, kappa));
    cert.boxes.push_back(detail::kappa_box(d, kappa, trace.c_k));
    cert.trace = std::move(trace);
  }
  cert.guarantee_valid = n >= 250 * d && (d >= 7 || cert.case_label != WitnessCase::case3);
  cert.partition = std::move(part);
  detail::finish_certificate(ps, cert);
  return cert;
}

/// Witness box for D*_n >= d/(12n). Always produces a certificate; the
/// guarantee is only claimed when n >= 250d.
inline WitnessCertificate theorem1_witness(const PointSet& ps) {
  const std::size_t d = ps.dim();
  const std::size_t n = ps.size();
  if (n == 0) throw std::invalid_argument("theorem1_witness: empty point set");

  // d <= 6: the one-dimensional bound 1/(2n) already suffices. Below n = 25d
  // the partition is undefined, so the same fallback is used without a claim.
  if (d <= 6 || n <= 25 * d) {
    auto cert = detail::trivial_witness(ps);
    cert.guaranteed = static_cast<double>(d) / (12.0 * static_cast<double>(n));
    cert.guarantee_valid = n >= 250 * d;
    return cert;
  }
  return kappa_witness(ps);
}

struct MinimumReport {
  double minimum = 0.0;
  double at_x = 0.0;  // Bernoulli check only
  double at_q = 0.0;
  double threshold = 0.0;
  bool verified = false;
};

/// g(x,q) = (1-x)^q - 1 + (21/20) q x over a uniform grid of
/// [0, 1/10] x [1/7, 1/4]; the inequality holds iff min g >= 0.
inline double bernoulli_gap(double x, double q) {
  return std::expm1(q * std::log1p(-x)) + 1.05 * q * x;
}

inline MinimumReport check_bernoulli_inequality(std::size_t grid_x, std::size_t grid_q) {
  if (grid_x < 2 || grid_q < 2)
    throw std::invalid_argument("check_bernoulli_inequality: grid sizes must be >= 2");
  MinimumReport r;
  r.minimum = INFINITY;
  for (std::size_t a = 0; a < grid_x; ++a) {
    const double x = 0.1 * static_cast<double>(a) / static_cast<double>(grid_x - 1);
    for (std::size_t b = 0; b < grid_q; ++b) {
      const double q = 1.0 / 7.0 + (0.25 - 1.0 / 7.0) * static_cast<double>(b) /
                                       static_cast<double>(grid_q - 1);
      const double g = bernoulli_gap(x, q);
      if (g < r.minimum) {
        r.minimum = g;
        r.at_x = x;
        r.at_q = q;
      }
    }
  }
  r.threshold = 0.0;
  r.verified = r.minimum >= 0.0;
  return r;
}

/// q(89 - 315q) / (6(1 + 4q)), the Case 3 constant in front of d/n.
inline double case3_constant(double q) { return q * (89.0 - 315.0 * q) / (6.0 * (1.0 + 4.0 * q)); }

inline MinimumReport check_case3_rational(std::size_t grid_q) {
  if (grid_q < 2) throw std::invalid_argument("check_case3_rational: grid must be >= 2");
  MinimumReport r;
  r.minimum = INFINITY;
  for (std::size_t b = 0; b < grid_q; ++b) {
    const double q = 1.0 / 7.0 + (0.25 - 1.0 / 7.0) * static_cast<double>(b) /
                                     static_cast<double>(grid_q - 1);
    const double v = case3_constant(q);
    if (v < r.minimum) {
      r.minimum = v;
      r.at_q = q;
    }
  }
  r.threshold = 1.0 / 12.0;
  r.verified = r.minimum >= r.threshold;
  return r;
}

/// n*(eps, d) >= d / (12 eps), valid for 0 < eps < 1/3000.
inline double inverse_discrepancy_lower_bound(double epsilon, std::size_t d) {
  if (!(epsilon > 0.0 && epsilon < 1.0 / 3000.0))
    throw std::invalid_argument("inverse_discrepancy_lower_bound: epsilon must lie in (0, 1/3000)");
  return static_cast<double>(d) / (12.0 * epsilon);
}

}  // namespace stardisc
