#pragma once

// Batch checks that tie the modules together. Each suite returns a JSON
// document listing every instance with its verdict and margin.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "complexity.hpp"
#include "discrepancy.hpp"
#include "generators.hpp"
#include "report.hpp"
#include "witness.hpp"

namespace stardisc {

struct SuiteOptions {
  std::size_t seeds = 20;
  unsigned threads = 1;
};

class SuiteResult {
public:
  void record(std::string name, bool pass, Json detail = Json::object()) {
    detail["name"] = std::move(name);
    detail["pass"] = pass;
    (pass ? passed_ : failed_)++;
    instances_.push_back(std::move(detail));
  }

  bool all_pass() const { return failed_ == 0; }

  Json to_json() const {
    return {{"instances", instances_},
            {"passed", passed_},
            {"failed", failed_},
            {"all_pass", all_pass()}};
  }

private:
  Json instances_ = Json::array();
  std::size_t passed_ = 0;
  std::size_t failed_ = 0;
};

namespace detail {

inline void check_theorem1(SuiteResult& out, const std::string& name, const PointSet& ps,
                           bool with_exact, unsigned threads) {
  const auto cert = theorem1_witness(ps);
  const double floor = cert.guaranteed;
  Json detail = {{"n", ps.size()},
                 {"d", ps.dim()},
                 {"case", to_string(cert.case_label)},
                 {"measured", cert.measured},
                 {"guaranteed", floor},
                 {"guarantee_valid", cert.guarantee_valid},
                 {"margin", cert.measured - floor}};
  bool pass = cert.guarantee_valid && cert.measured >= floor;
  if (with_exact) {
    const auto exact = star_discrepancy_exact(ps, {.threads = threads});
    detail["exact"] = exact.value;
    detail["exact_margin"] = exact.value - floor;
    pass = pass && exact.value >= floor && exact.value >= cert.measured;
  }
  out.record(name, pass, std::move(detail));
}

}  // namespace detail

inline SuiteResult verify_theorem1(const SuiteOptions& opts) {
  SuiteResult out;
  for (std::uint64_t s = 1; s <= opts.seeds; ++s)
    detail::check_theorem1(out, "random d=2 n=500 seed=" + std::to_string(s),
                           gen_random(500, 2, s), true, opts.threads);
  detail::check_theorem1(out, "chain d=2 n=500", gen_chain(500, 2), true, opts.threads);
  detail::check_theorem1(out, "staircase n=500", gen_staircase(500), true, opts.threads);
  detail::check_theorem1(out, "lattice m=23 d=2", gen_lattice(23, 2), true, opts.threads);
  detail::check_theorem1(out, "halton d=2 n=500", gen_halton(500, 2), true, opts.threads);
  for (std::uint64_t s = 1; s <= opts.seeds; ++s)
    detail::check_theorem1(out, "random d=3 n=750 seed=" + std::to_string(s),
                           gen_random(750, 3, s), false, opts.threads);
  // d >= 7 exercises the kappa partition.
  detail::check_theorem1(out, "random d=8 n=2000 seed=1", gen_random(2000, 8, 1), false,
                         opts.threads);
  detail::check_theorem1(out, "chain d=8 n=2000", gen_chain(2000, 8), false, opts.threads);
  detail::check_theorem1(out, "halton d=10 n=2500", gen_halton(2500, 10), false, opts.threads);
  return out;
}

inline SuiteResult verify_theorem2(const SuiteOptions& opts) {
  SuiteResult out;
  for (std::size_t n : {4, 9, 16})
    for (std::size_t d : {2, 4, 8}) {
      const auto ps = gen_chain(n, d);
      const auto mb = max_boundary_box(ps);
      out.record("chain n=" + std::to_string(n) + " d=" + std::to_string(d) + " has P(2)",
                 has_property_P(ps, Rational(2)), {{"max_boundary", mb.count}});
      const auto count = shatter_count(ps);
      out.record("chain n=" + std::to_string(n) + " d=" + std::to_string(d) + " shatter = n+1",
                 count == n + 1, {{"count", to_json(count)}});
    }
  out.record("staircase n=9 lacks P(2)", !has_property_P(gen_staircase(9), Rational(2)),
             {{"max_boundary", max_boundary_box(gen_staircase(9)).count}});

  const auto chain = gen_chain(16, 8);
  const bool hypothesis = has_property_P(chain, Rational(8, 4));
  const double bound = theorem2_bound(16, 8);
  // Sampling is the expensive part; a few seeds are plenty at a >100x margin.
  const std::size_t rounds = std::clamp<std::size_t>(opts.seeds, 1, 3);
  for (std::uint64_t s = 1; s <= rounds; ++s) {
    const auto ld = lower_bound_sample(chain, 100000, s);
    out.record("chain n=16 d=8 sampled D* >= theorem2_bound, seed=" + std::to_string(s),
               hypothesis && ld.value >= bound,
               {{"sampled", ld.value},
                {"bound", bound},
                {"ratio", ld.value / bound},
                {"box", to_json(ld.box)}});
  }
  return out;
}

inline SuiteResult verify_figure1(const SuiteOptions&) {
  SuiteResult out;
  const auto chain = gen_chain(9, 2);
  const auto stair = gen_staircase(9);
  const auto c = shatter_count(chain);
  const auto s = shatter_count(stair);
  out.record("chain(9,2) shatter count = 10", c == 10, {{"count", to_json(c)}});
  out.record("staircase(9) shatter count = 46", s == 46, {{"count", to_json(s)}});
  out.record("staircase(9) attains Sauer-Shelah", s == sauer_shelah(9, 2),
             {{"sauer", to_json(sauer_shelah(9, 2))}});
  const auto mc = max_boundary_box(chain);
  const auto ms = max_boundary_box(stair);
  out.record("chain(9,2) max boundary = 1", mc.count == 1, {{"box", to_json(mc.box)}});
  out.record("staircase(9) max boundary = 2", ms.count == 2, {{"box", to_json(ms.box)}});
  return out;
}

inline SuiteResult verify_bounds(const SuiteOptions&) {
  SuiteResult out;
  bool rec_ok = true;
  for (std::size_t n = 1; n <= 30; ++n)
    for (std::size_t d = 1; d <= 10; ++d) rec_ok = rec_ok && n_recursion(n, d) == sauer_shelah(n, d);
  out.record("recursion = Sauer-Shelah for n<=30, d<=10", rec_ok);

  const auto bern = check_bernoulli_inequality(2001, 2001);
  out.record("reverse Bernoulli inequality on 2001x2001 grid", bern.verified, to_json(bern, true));
  const auto rat = check_case3_rational(100000);
  out.record("case 3 constant >= 1/12 on 1e5 points", rat.minimum >= 1.0 / 12.0 - 1e-12,
             to_json(rat, false));

  for (std::size_t d = 1; d <= 16; ++d)
    for (std::size_t mult : {1, 2, 10, 100}) {
      const std::size_t n = mult * d;
      const std::size_t r = (d + 3) / 4;
      const auto sauer = sauer_shelah(n, d);
      const auto hat = hat_n_bound(n, d, r);
      const auto claim = claim_bound(n, d, r);
      const double eps = theorem2_epsilon(n, d);
      const bool ok = log_of(sauer) <= log_binom_sum_bound(n, d) && hat <= claim &&
                      log_of(hat) <= log_nbound(n, d) && packing_condition(n, d, eps);
      out.record("bound chain n=" + std::to_string(n) + " d=" + std::to_string(d), ok,
                 {{"sauer", to_json(sauer)},
                  {"binom_sum_bound", binom_sum_bound(n, d)},
                  {"hat_n", to_json(hat)},
                  {"claim", to_json(claim)},
                  {"nbound", nbound(n, d)},
                  {"epsilon", eps}});
    }
  return out;
}

inline SuiteResult run_suite(std::string_view name, const SuiteOptions& opts) {
  if (name == "theorem1") return verify_theorem1(opts);
  if (name == "theorem2") return verify_theorem2(opts);
  if (name == "figure1") return verify_figure1(opts);
  if (name == "bounds") return verify_bounds(opts);
  throw std::invalid_argument("unknown suite '" + std::string(name) +
                              "' (expected theorem1, theorem2, figure1 or bounds)");
}

}  // namespace stardisc
