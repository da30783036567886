#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "stardisc/discrepancy.hpp"
#include "stardisc/generators.hpp"
#include "stardisc/witness.hpp"
#include "test_support.hpp"

using namespace stardisc;

namespace {

// n points in [0, 1/2]^d from the coarse generator, then `extra` appended.
PointSet low_points(std::size_t n, std::size_t d, std::uint64_t seed,
                    std::initializer_list<std::initializer_list<double>> extra = {}) {
  SplitMix64 rng(seed);
  PointSet ps(d);
  std::vector<double> p(d);
  for (std::size_t k = 0; k < n; ++k) {
    for (double& x : p) x = 0.5 * test_support::coarse(rng, 64);
    ps.add(p);
  }
  for (const auto& e : extra) ps.add(e);
  return ps;
}

void expect_trace_invariants(const PointSet& ps, const WitnessCertificate& cert) {
  ASSERT_TRUE(cert.trace.has_value());
  ASSERT_TRUE(cert.partition.has_value());
  const auto& t = *cert.trace;
  const auto& part = *cert.partition;
  EXPECT_EQ(t.m_big, part.p2.size());
  EXPECT_EQ(t.k, (ps.dim() + 6) / 7);
  EXPECT_EQ(t.steps.size(), t.k);
  EXPECT_EQ(t.q, static_cast<double>(t.k) / ps.dim());

  const std::set<std::size_t> p2(part.p2.begin(), part.p2.end());
  std::set<std::size_t> dims, removed;
  std::size_t remaining = part.p2.size();
  for (const auto& s : t.steps) {
    EXPECT_TRUE(dims.insert(s.dim).second);
    EXPECT_EQ(s.remaining_before, remaining);
    // Pigeonhole from double counting: m_k * d >= 2 |S_{k-1}|.
    EXPECT_GE(s.size() * ps.dim(), 2 * s.remaining_before);
    for (std::size_t k : s.removed) {
      EXPECT_TRUE(p2.contains(k));
      EXPECT_TRUE(removed.insert(k).second);
      EXPECT_GT(ps(k, s.dim), part.kappa);
    }
    remaining -= s.size();
  }
  EXPECT_EQ(std::vector<std::size_t>(dims.begin(), dims.end()), t.c_k);
}

}  // namespace

TEST(PartitionKappa, Threshold) {
  PointSet ps(1);
  for (int k = 0; k < 250; ++k) ps.add({0.5});
  EXPECT_NEAR(partition_kappa(ps).kappa, 0.9, 1e-15);
  EXPECT_THROW(partition_kappa(gen_chain(50, 2)), std::invalid_argument);
  EXPECT_NO_THROW(partition_kappa(gen_chain(51, 2)));
}

TEST(PartitionKappa, Classification) {
  auto ps = low_points(498, 2, 3, {{0.99, 0.1}, {0.99, 0.99}});
  const auto part = partition_kappa(ps);
  EXPECT_NEAR(part.kappa, 0.9486832980505138, 1e-15);
  EXPECT_EQ(part.p1, std::vector<std::size_t>{498});
  EXPECT_EQ(part.p2, std::vector<std::size_t>{499});
  EXPECT_EQ(part.c_set, std::vector<std::size_t>{0});
  EXPECT_EQ(part.large_coords[498], std::vector<std::size_t>{0});
  EXPECT_EQ(part.p0.size(), 498u);
}

// Recomputing every point's class from raw coordinates reproduces the partition.
TEST(PartitionKappa, PartitionIsExhaustiveAndConsistent) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const std::size_t d = 1 + seed % 9;
    const auto ps = gen_random(30 * d + 7 * seed, d, seed);
    const auto part = partition_kappa(ps);
    std::vector<int> cls(ps.size(), -1);
    for (auto k : part.p0) cls[k] = 0;
    for (auto k : part.p1) {
      ASSERT_EQ(cls[k], -1);
      cls[k] = 1;
    }
    for (auto k : part.p2) {
      ASSERT_EQ(cls[k], -1);
      cls[k] = 2;
    }
    std::set<std::size_t> c;
    for (std::size_t k = 0; k < ps.size(); ++k) {
      std::size_t large = 0, last = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (ps(k, j) > part.kappa) {
          ++large;
          last = j;
        }
      ASSERT_EQ(cls[k], static_cast<int>(std::min<std::size_t>(large, 2)));
      if (large == 1) c.insert(last);
    }
    ASSERT_EQ(std::vector<std::size_t>(c.begin(), c.end()), part.c_set);
    ASSERT_EQ(part.p0.size() + part.p1.size() + part.p2.size(), ps.size());
  }
}

TEST(SimpleWitness, DisjointCase) {
  const auto ps = low_points(30, 2, 1);
  const auto cert = simple_witness(ps);
  EXPECT_EQ(cert.case_label, WitnessCase::simple_disjoint);
  EXPECT_TRUE(cert.guarantee_valid);
  EXPECT_EQ(cert.boxes.front(), AnchoredBox({1.0, 0.5}));
  EXPECT_GE(cert.measured, 0.5);
  EXPECT_DOUBLE_EQ(cert.guaranteed, 2.0 / 30.0);
  EXPECT_TRUE(cert.holds());
}

TEST(SimpleWitness, BoundaryCase) {
  const auto ps = low_points(28, 2, 2, {{0.9, 0.1}, {0.1, 0.9}});
  const auto cert = simple_witness(ps);
  EXPECT_EQ(cert.case_label, WitnessCase::simple_boundary);
  EXPECT_EQ(cert.best, AnchoredBox({0.9, 0.9}));
  EXPECT_EQ(boundary_count(ps, cert.best), 2u);
  EXPECT_GE(cert.measured, 1.0 / 30.0);
  EXPECT_DOUBLE_EQ(cert.guaranteed, 1.0 / 30.0);
}

TEST(SimpleWitness, Preconditions) {
  EXPECT_THROW(simple_witness(gen_chain(40, 1)), std::invalid_argument);
  const auto small = simple_witness(gen_chain(10, 2));  // 10 < 2e * 4
  EXPECT_FALSE(small.guarantee_valid);
  EXPECT_EQ(small.boxes.size(), 2u);
}

TEST(SimpleWitness, GuaranteeOnRandomSets) {
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto n = static_cast<std::size_t>(std::ceil(2.0 * std::numbers::e * d * d));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      for (const auto& ps : {gen_random(n, d, seed), gen_random(3 * n, d, seed)}) {
        const auto cert = simple_witness(ps);
        ASSERT_TRUE(cert.guarantee_valid);
        ASSERT_GE(cert.measured, d / (2.0 * ps.size()));
        if (cert.case_label == WitnessCase::simple_disjoint) {
          ASSERT_GE(cert.measured, static_cast<double>(d) / ps.size());
        }
        ASSERT_EQ(local_disc(ps, cert.best).value, cert.measured);
      }
    }
  }
}

TEST(WitnessDispatch, LowDimensionUsesFirstCoordinate) {
  const auto ps = gen_random(1500, 6, 4);
  const auto cert = theorem1_witness(ps);
  EXPECT_EQ(cert.case_label, WitnessCase::trivial_1d);
  EXPECT_TRUE(cert.guarantee_valid);
  EXPECT_GE(cert.measured, 1.0 / (2.0 * 1500));
  EXPECT_DOUBLE_EQ(cert.guaranteed, 6.0 / (12.0 * 1500));
  for (std::size_t j = 1; j < 6; ++j) EXPECT_EQ(cert.best[j], 1.0);
}

TEST(WitnessDispatch, OutsideTheoremRange) {
  const auto ps = gen_random(100, 2, 9);
  const auto cert = theorem1_witness(ps);
  EXPECT_FALSE(cert.guarantee_valid);
  EXPECT_LE(cert.measured, star_discrepancy_exact(ps).value);
  EXPECT_GT(cert.measured, 0.0);

  const auto tiny = theorem1_witness(gen_random(100, 8, 9));  // n <= 25d
  EXPECT_EQ(tiny.case_label, WitnessCase::trivial_1d);
  EXPECT_FALSE(tiny.guarantee_valid);
}

TEST(KappaWitness, ChainInThePlaneIsCase3) {
  PointSet chain(2);
  for (int k = 1; k <= 500; ++k) chain.add({k / 501.0, k / 501.0});
  const auto cert = kappa_witness(chain);
  EXPECT_EQ(cert.case_label, WitnessCase::case3);
  EXPECT_TRUE(cert.partition->p1.empty());
  EXPECT_GE(cert.measured, 1.0 / 3000.0);
  expect_trace_invariants(chain, cert);
}

TEST(KappaWitness, SingleFacePointIsCase1) {
  const auto ps = low_points(499, 2, 5, {{0.99, 0.1}});
  const auto cert = kappa_witness(ps);
  EXPECT_EQ(cert.case_label, WitnessCase::case1);
  EXPECT_TRUE(cert.guarantee_valid);
  EXPECT_GE(boundary_count(ps, cert.best), 1u);
  EXPECT_GE(cert.measured, 1.0 / 3000.0);
}

TEST(KappaWitness, LowCubeInDimensionThree) {
  const auto ps = low_points(750, 3, 6);
  const auto cert = kappa_witness(ps);
  EXPECT_EQ(cert.case_label, WitnessCase::case3);
  EXPECT_GE(cert.measured, 0.1 - 1e-12);
  EXPECT_EQ(cert.best, cert.boxes.front());
}

TEST(WitnessDispatch, AllThreeCasesInDimensionEight) {
  const std::size_t d = 8, n = 2000;
  const double floor = d / (12.0 * n);

  const auto random = gen_random(n, d, 1);
  auto cert = theorem1_witness(random);
  EXPECT_EQ(cert.case_label, WitnessCase::case1);
  EXPECT_GE(boundary_count(random, cert.best), (d + 5) / 6);
  EXPECT_GE(cert.measured, floor);

  // 36 points large only in dimension 0: |C| = 1 < 8/6 and 24*36 >= 107*8.
  const double kappa = kappa_threshold(n, d);
  PointSet face(d);
  SplitMix64 rng(3);
  std::vector<double> p(d);
  for (std::size_t k = 0; k < n; ++k) {
    for (double& x : p) x = 0.5 * test_support::coarse(rng, 64);
    if (k < 36) p[0] = kappa + (1.0 - kappa) * (k + 1) / 40.0;
    face.add(p);
  }
  cert = theorem1_witness(face);
  EXPECT_EQ(cert.case_label, WitnessCase::case2);
  EXPECT_EQ(cert.side, Side::underfull);
  EXPECT_GE(cert.measured, floor);

  const auto chain = gen_chain(n, d);
  cert = theorem1_witness(chain);
  EXPECT_EQ(cert.case_label, WitnessCase::case3);
  EXPECT_GE(cert.measured, floor);
  expect_trace_invariants(chain, cert);
}

TEST(WitnessDispatch, Case3TraceWithCornerPoints) {
  // Points with two large coordinates spread over many dimension pairs.
  const std::size_t d = 14, n = 3500;
  PointSet ps(d);
  SplitMix64 rng(17);
  std::vector<double> p(d);
  for (std::size_t k = 0; k < n; ++k) {
    for (double& x : p) x = 0.5 * test_support::coarse(rng, 64);
    if (k % 3 == 0) {
      p[rng.below(d)] = 1.0;
      p[rng.below(d)] = 1.0;
      p[rng.below(d)] = 1.0;
    }
    ps.add(p);
  }
  const auto cert = theorem1_witness(ps);
  EXPECT_GE(cert.measured, d / (12.0 * n));
  if (cert.case_label == WitnessCase::case3) expect_trace_invariants(ps, cert);
}

TEST(WitnessDispatch, GuaranteeHoldsAcrossFamilies) {
  for (std::size_t d : {7, 9, 12}) {
    const std::size_t n = 250 * d;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto cert = theorem1_witness(gen_random(n, d, seed));
      ASSERT_TRUE(cert.guarantee_valid);
      ASSERT_TRUE(cert.holds()) << "d=" << d << " seed=" << seed;
    }
    ASSERT_TRUE(theorem1_witness(gen_chain(n, d)).holds());
    ASSERT_TRUE(theorem1_witness(gen_halton(n, d)).holds());
  }
}

TEST(WitnessDispatch, DispatchIsDeterministic) {
  const auto ps = gen_random(2000, 8, 42);
  const auto a = theorem1_witness(ps);
  const auto b = theorem1_witness(ps);
  EXPECT_EQ(a.case_label, b.case_label);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.measured, b.measured);
}

TEST(BernoulliCheck, Values) {
  EXPECT_EQ(bernoulli_gap(0.0, 0.2), 0.0);
  EXPECT_NEAR(bernoulli_gap(0.1, 0.25), 0.0002537464252967449, 1e-15);
  const auto r = check_bernoulli_inequality(2001, 2001);
  EXPECT_TRUE(r.verified);
  EXPECT_GE(r.minimum, 0.0);
  EXPECT_THROW(check_bernoulli_inequality(1, 10), std::invalid_argument);
}

TEST(Case3RationalCheck, Values) {
  EXPECT_NEAR(case3_constant(1.0 / 7.0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(case3_constant(0.25), 10.25 / 48.0, 1e-15);
  const auto r = check_case3_rational(100000);
  EXPECT_TRUE(r.verified);
  EXPECT_NEAR(r.minimum, 10.25 / 48.0, 1e-12);
  EXPECT_THROW(check_case3_rational(1), std::invalid_argument);
}

TEST(InverseDiscrepancy, Values) {
  EXPECT_NEAR(inverse_discrepancy_lower_bound(1.0 / 6000.0, 2), 1000.0, 1e-9);
  EXPECT_NEAR(inverse_discrepancy_lower_bound(1.0 / 12000.0, 12), 12000.0, 1e-9);
  EXPECT_THROW(inverse_discrepancy_lower_bound(1.0 / 3000.0, 2), std::invalid_argument);
  EXPECT_THROW(inverse_discrepancy_lower_bound(0.0, 2), std::invalid_argument);
}
