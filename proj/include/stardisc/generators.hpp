#pragma once

// Deterministic point-set families. Chain and staircase are the two extremal
// configurations with 9 points in the plane: the chain admits no anchored box
// with two points on its upper boundary, the staircase is shattered as far as
// Sauer-Shelah allows.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "point_set.hpp"
#include "rng.hpp"

namespace stardisc {

enum class GeneratorKind { chain, staircase, random_uniform, lattice, halton };

inline GeneratorKind parse_generator_kind(std::string_view s) {
  if (s == "chain") return GeneratorKind::chain;
  if (s == "staircase") return GeneratorKind::staircase;
  if (s == "random" || s == "random_uniform") return GeneratorKind::random_uniform;
  if (s == "lattice") return GeneratorKind::lattice;
  if (s == "halton") return GeneratorKind::halton;
  throw std::invalid_argument("unknown generator kind '" + std::string(s) + "'");
}

inline const char* to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::chain: return "chain";
    case GeneratorKind::staircase: return "staircase";
    case GeneratorKind::random_uniform: return "random";
    case GeneratorKind::lattice: return "lattice";
    case GeneratorKind::halton: return "halton";
  }
  return "?";
}

/// (k/(n+1), ..., k/(n+1)) for k = 1..n.
inline PointSet gen_chain(std::size_t n, std::size_t d) {
  if (n == 0) throw std::invalid_argument("gen_chain: n must be >= 1");
  PointSet ps(d);
  std::vector<double> p(d);
  for (std::size_t k = 1; k <= n; ++k) {
    p.assign(d, static_cast<double>(k) / static_cast<double>(n + 1));
    ps.add(p);
  }
  return ps;
}

/// (k/(n+1), (n+1-k)/(n+1)) for k = 1..n; a strict antichain.
inline PointSet gen_staircase(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gen_staircase: n must be >= 1");
  PointSet ps(2);
  const auto den = static_cast<double>(n + 1);
  for (std::size_t k = 1; k <= n; ++k)
    ps.add({static_cast<double>(k) / den, static_cast<double>(n + 1 - k) / den});
  return ps;
}

/// i.i.d. coordinates on the dyadic grid {i / 2^20 : 0 <= i < 2^20}, drawn
/// from the top 20 bits of successive SplitMix64 outputs.
inline PointSet gen_random(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("gen_random: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<double> coords(n * d);
  for (double& c : coords) c = std::ldexp(static_cast<double>(rng.next() >> 44), -20);
  return PointSet(d, std::move(coords));
}

/// Cell centres ((i_1 + 1/2)/m, ..., (i_d + 1/2)/m), last index fastest.
inline PointSet gen_lattice(std::size_t m, std::size_t d, double budget = default_grid_budget) {
  if (m == 0) throw std::invalid_argument("gen_lattice: m must be >= 1");
  if (d == 0) throw std::invalid_argument("gen_lattice: d must be >= 1");
  const double total = std::pow(static_cast<double>(m), static_cast<double>(d));
  if (total > budget) throw budget_exceeded(total, budget);
  PointSet ps(d);
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> p(d);
  for (;;) {
    for (std::size_t j = 0; j < d; ++j)
      p[j] = (static_cast<double>(idx[j]) + 0.5) / static_cast<double>(m);
    ps.add(p);
    std::size_t j = d;
    while (j > 0) {
      --j;
      if (++idx[j] < m) break;
      idx[j] = 0;
      if (j == 0) return ps;
    }
  }
}

inline constexpr std::array<std::uint32_t, 16> halton_primes = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

inline double radical_inverse(std::uint64_t k, std::uint32_t base) {
  double result = 0.0;
  double scale = 1.0 / base;
  while (k > 0) {
    result += static_cast<double>(k % base) * scale;
    k /= base;
    scale /= base;
  }
  return result;
}

/// Points k = 1..n of the Halton sequence in the first d prime bases.
inline PointSet gen_halton(std::size_t n, std::size_t d) {
  if (n == 0) throw std::invalid_argument("gen_halton: n must be >= 1");
  if (d == 0 || d > halton_primes.size())
    throw std::invalid_argument("gen_halton: d must be in [1, 16]");
  PointSet ps(d);
  std::vector<double> p(d);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = 0; j < d; ++j) p[j] = radical_inverse(k, halton_primes[j]);
    ps.add(p);
  }
  return ps;
}

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::chain;
  std::size_t n = 1;  // lattice: points per axis
  std::size_t d = 1;
  std::uint64_t seed = 0;
};

inline PointSet generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::chain: return gen_chain(spec.n, spec.d);
    case GeneratorKind::staircase:
      if (spec.d != 2) throw std::invalid_argument("staircase requires d = 2");
      return gen_staircase(spec.n);
    case GeneratorKind::random_uniform: return gen_random(spec.n, spec.d, spec.seed);
    case GeneratorKind::lattice: return gen_lattice(spec.n, spec.d);
    case GeneratorKind::halton: return gen_halton(spec.n, spec.d);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace stardisc
