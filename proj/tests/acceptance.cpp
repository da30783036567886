// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and runtime limits are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stardisc/stardisc.hpp"

using namespace stardisc;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double time_limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0) out.require(secs < time_limit_s, "runtime limit");
  if (!out.pass) ++failures;
  std::printf("[%s] %d. %s (%.2fs) %s\n", out.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              out.note.str().c_str());
  std::fflush(stdout);
}

void check_theorem1(Outcome& out, const std::string& name, const PointSet& ps, bool exact,
                    double& min_margin) {
  const auto cert = theorem1_witness(ps);
  const double floor = static_cast<double>(ps.dim()) / (12.0 * ps.size());
  out.require(cert.guarantee_valid, name + " guarantee_valid");
  out.require(cert.measured >= floor, name + " measured >= d/(12n)");
  min_margin = std::min(min_margin, cert.measured - floor);
  if (exact) {
    const double d_star = star_discrepancy_exact(ps).value;
    out.require(d_star >= floor, name + " exact D* >= d/(12n)");
    out.require(d_star >= cert.measured, name + " exact D* >= measured");
  }
}

}  // namespace

int main() {
  std::cout << "stardisc acceptance suite\n";

  criterion(1, "Shatter counts: chain(9,2) = 10, staircase(9) = 46", 1.0,
            [](Outcome& out) {
              const auto c = shatter_count(gen_chain(9, 2));
              const auto s = shatter_count(gen_staircase(9));
              out.require(c == 10, "chain count " + c.str());
              out.require(s == 46, "staircase count " + s.str());
              out.note << "chain=" << c << " staircase=" << s;
            });

  criterion(2, "N(n,d) recursion equals Sauer-Shelah sum, n<=30, d<=10", 1.0, [](Outcome& out) {
    int cells = 0;
    for (std::size_t n = 1; n <= 30; ++n)
      for (std::size_t d = 1; d <= 10; ++d, ++cells)
        out.require(n_recursion(n, d) == sauer_shelah(n, d),
                    "n=" + std::to_string(n) + " d=" + std::to_string(d));
    out.note << cells << " pairs";
  });

  criterion(3, "Witnesses reach d/(12n): d=2 n=500 (exact D* too) and d=3 n=750", 0,
            [](Outcome& out) {
              double margin2 = INFINITY, margin3 = INFINITY;
              for (std::uint64_t s = 1; s <= 50; ++s)
                check_theorem1(out, "random2 seed " + std::to_string(s), gen_random(500, 2, s),
                               true, margin2);
              check_theorem1(out, "chain", gen_chain(500, 2), true, margin2);
              check_theorem1(out, "staircase", gen_staircase(500), true, margin2);
              check_theorem1(out, "lattice 23x23", gen_lattice(23, 2), true, margin2);
              check_theorem1(out, "halton", gen_halton(500, 2), true, margin2);
              for (std::uint64_t s = 1; s <= 20; ++s)
                check_theorem1(out, "random3 seed " + std::to_string(s), gen_random(750, 3, s),
                               false, margin3);
              out.note << "min margin d=2: " << margin2 << ", d=3: " << margin3;
            });

  criterion(4, "Exact D* equals mesh-64 oracle within 1e-12", 60.0, [](Outcome& out) {
    SplitMix64 rng(4);
    double worst = 0.0;
    auto compare = [&](const PointSet& ps, const std::string& name) {
      const double exact = star_discrepancy_exact(ps).value;
      const double oracle = star_discrepancy_oracle(ps, 64);
      worst = std::max(worst, std::abs(exact - oracle));
      out.require(std::abs(exact - oracle) <= 1e-12, name);
    };
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 1 + rng.below(12);
      const std::size_t d = 1 + rng.below(3);
      compare(gen_random(n, d, rng.next()), "random set " + std::to_string(t));
    }
    for (std::size_t d = 1; d <= 3; ++d) {
      compare(gen_chain(9, d), "chain d=" + std::to_string(d));
      compare(gen_halton(12, d), "halton d=" + std::to_string(d));
      compare(gen_lattice(2, d), "lattice d=" + std::to_string(d));
    }
    compare(gen_staircase(9), "staircase");
    out.note << "max |exact - oracle| = " << worst;
  });

  criterion(5, "Reverse Bernoulli (2001^2 grid) and case-3 constant (1e5 points)", 10.0,
            [](Outcome& out) {
              const auto bern = check_bernoulli_inequality(2001, 2001);
              const auto rat = check_case3_rational(100000);
              out.require(bern.minimum >= 0.0, "Bernoulli minimum");
              out.require(rat.minimum >= 1.0 / 12.0 - 1e-12, "case-3 minimum");
              out.note << "bernoulli min=" << bern.minimum << " case3 min=" << rat.minimum;
            });

  criterion(6, "Bound chain for d<=16, n in {d,2d,10d,100d}", 5.0, [](Outcome& out) {
    for (std::size_t d = 1; d <= 16; ++d)
      for (std::size_t mult : {1, 2, 10, 100}) {
        const std::size_t n = mult * d, r = (d + 3) / 4;
        const std::string at = " n=" + std::to_string(n) + " d=" + std::to_string(d);
        out.require(log_of(sauer_shelah(n, d)) <= log_binom_sum_bound(n, d), "binom sum" + at);
        const auto hat = hat_n_bound(n, d, r);
        out.require(hat <= claim_bound(n, d, r), "claim" + at);
        out.require(log_of(hat) <= log_nbound(n, d), "nbound" + at);
        out.require(packing_condition(n, d, theorem2_epsilon(n, d)), "packing" + at);
      }
    out.note << "64 (n,d) pairs";
  });

  criterion(7, "Property P structure and theorem2_bound on chain(16,8)", 60.0, [](Outcome& out) {
    for (std::size_t n : {4, 9, 16})
      for (std::size_t d : {2, 4, 8}) {
        const auto ps = gen_chain(n, d);
        const std::string at = " n=" + std::to_string(n) + " d=" + std::to_string(d);
        out.require(has_property_P(ps, Rational(2)), "chain P(2)" + at);
        out.require(shatter_count(ps) == n + 1, "chain shatter" + at);
      }
    out.require(!has_property_P(gen_staircase(9), Rational(2)), "staircase lacks P(2)");
    const auto chain = gen_chain(16, 8);
    out.require(has_property_P(chain, Rational(8, 4)), "chain(16,8) has P(d/4)");
    const auto ld = lower_bound_sample(chain, 100000, 1);
    const double bound = theorem2_bound(16, 8);
    out.require(ld.value >= bound, "sampled D* >= theorem2_bound");
    out.note << "sampled=" << ld.value << " bound=" << bound << " ratio=" << ld.value / bound;
  });

  criterion(8, "count_le - count_lt = boundary_count, local_disc >= boundary/(2n)", 0,
            [](Outcome& out) {
              SplitMix64 rng(8);
              for (int t = 0; t < 1000; ++t) {
                const std::size_t d = 1 + rng.below(5);
                const std::size_t n = 1 + rng.below(20);
                std::vector<double> c(n * d);
                for (double& x : c) x = static_cast<double>(rng.below(9)) / 8.0;
                const PointSet ps(d, std::move(c));
                std::vector<double> b(d);
                for (double& x : b) x = static_cast<double>(rng.below(9)) / 8.0;
                const AnchoredBox box(b);
                const auto le = count_le(ps, box), lt = count_lt(ps, box);
                const auto bd = boundary_count(ps, box);
                out.require(le - lt == bd, "counts, pair " + std::to_string(t));
                // Both sides scaled by 2n: 2n * value >= boundary.
                out.require(2.0 * n * local_disc(ps, box).value >= static_cast<double>(bd) - 1e-9,
                            "local_disc, pair " + std::to_string(t));
              }
              out.note << "1000 pairs";
            });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << '\n';
  return failures == 0 ? 0 : 1;
}
