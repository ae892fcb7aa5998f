#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "generators.hpp"
#include "infosel/benchgen.hpp"
#include "infosel/inference.hpp"
#include "oracle.hpp"

using namespace infosel;

namespace {

DiscreteNetwork copy_pair() {
  return DiscreteNetwork({{"X", 2}, {"Y", 2}}, {{0, {}, {0.5, 0.5}}, {1, {0}, {1, 0, 0, 1}}},
                         {1}, {0});
}

}  // namespace

TEST(Posterior, DeterministicCopyPinsParent) {
  Assignment e;
  e.set(1, 1);
  const auto p = posterior(copy_pair(), 0, e);
  EXPECT_DOUBLE_EQ(p[0], 0.0);
  EXPECT_DOUBLE_EQ(p[1], 1.0);
}

TEST(Posterior, RootPriorWithoutEvidence) {
  DiscreteNetwork net({{"X", 2}}, {{0, {}, {0.3, 0.7}}}, {}, {});
  const auto p = posterior(net, 0, {});
  EXPECT_NEAR(p[0], 0.3, 1e-15);
  EXPECT_NEAR(p[1], 0.7, 1e-15);
}

TEST(Posterior, XorGivenOneInputIsUniform) {
  Assignment e;
  e.set(0, 1);
  const auto p = posterior(make_xor(), 2, e);
  EXPECT_NEAR(p[0], 0.5, 1e-15);
  EXPECT_NEAR(p[1], 0.5, 1e-15);
}

TEST(Posterior, Errors) {
  Assignment e;
  e.set(0, 1);
  EXPECT_THROW(posterior(copy_pair(), 0, e), std::invalid_argument);
  Assignment bad;
  bad.set(0, 0);
  bad.set(1, 1);
  DiscreteNetwork net({{"X", 2}, {"Y", 2}, {"Z", 2}},
                      {{0, {}, {0.5, 0.5}}, {1, {0}, {1, 0, 0, 1}}, {2, {}, {0.5, 0.5}}}, {}, {});
  EXPECT_THROW(posterior(net, 2, bad), InconsistentEvidence);
}

TEST(Posterior, MatchesBruteForceOnRandomNetworks) {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto net = gen::random_network(6, 3, 3, rng, trial % 2 == 0);
    const auto joint = oracle::full_joint(net);
    const VarId q = static_cast<VarId>(rng.below(net.size()));
    // Evidence drawn from a forward sample so it has positive mass.
    const Assignment full = sample(net, rng);
    Assignment evidence;
    std::map<VarId, std::uint32_t> ev;
    for (VarId v = 0; v < net.size(); ++v)
      if (v != q && rng.below(3) == 0) {
        evidence.set(v, full.at(v));
        ev[v] = full.at(v);
      }
    const auto expected = oracle::posterior(net, joint, q, ev);
    ASSERT_FALSE(expected.empty());
    const auto got = posterior(net, q, evidence);
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expected[i], 1e-12);
  }
}

TEST(JointTableTest, IndependentUniformPair) {
  DiscreteNetwork net({{"X", 2}, {"Y", 2}}, {{0, {}, {0.5, 0.5}}, {1, {}, {0.5, 0.5}}}, {}, {});
  const VarId scope[] = {0, 1};
  const auto t = joint_table(net, scope);
  ASSERT_EQ(t.size(), 4u);
  for (double p : t.probabilities()) EXPECT_DOUBLE_EQ(p, 0.25);
}

TEST(JointTableTest, XorParitySupport) {
  const VarId scope[] = {0, 1, 2};
  const auto t = joint_table(make_xor(), scope);
  for (Value x = 0; x < 2; ++x)
    for (Value y = 0; y < 2; ++y)
      for (Value z = 0; z < 2; ++z) {
        const Value v[] = {x, y, z};
        EXPECT_DOUBLE_EQ(t.at(v), (x ^ y) == z ? 0.25 : 0.0);
      }
}

TEST(JointTableTest, EmptyScopeIsOneCell) {
  const auto t = joint_table(make_xor(), std::span<const VarId>{});
  ASSERT_EQ(t.size(), 1u);
  EXPECT_DOUBLE_EQ(t.probabilities()[0], 1.0);
}

TEST(JointTableTest, MatchesBruteForceMarginals) {
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto net = gen::random_network(6, 3, 3, rng, true);
    const auto joint = oracle::full_joint(net);
    std::vector<VarId> scope;
    for (VarId v = 0; v < net.size(); ++v)
      if (rng.below(2)) scope.push_back(v);
    // Scope order is the caller's order, not necessarily sorted.
    std::reverse(scope.begin(), scope.end());
    const auto t = joint_table(net, scope);
    const auto m = oracle::marginal(joint, scope);
    ASSERT_EQ(m.size(), t.size());
    for (const auto& [values, p] : m) EXPECT_NEAR(t.at(values), p, 1e-12);
  }
}

TEST(JointTableTest, TooLargeScopeThrows) {
  std::vector<Variable> vars;
  std::vector<Cpt> cpts;
  std::vector<VarId> scope;
  for (VarId i = 0; i < 23; ++i) {
    vars.push_back({"B" + std::to_string(i), 2});
    cpts.push_back({i, {}, {0.5, 0.5}});
    scope.push_back(i);
  }
  DiscreteNetwork net(std::move(vars), std::move(cpts), {}, {});
  EXPECT_THROW(joint_table(net, scope), TooLarge);
}

TEST(SparseJoint, MatchesNonzeroMarginal) {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto net = gen::random_network(6, 3, 3, rng, true);
    const auto joint = oracle::full_joint(net);
    VarSet scope;
    for (VarId v = 0; v < net.size(); ++v)
      if (rng.below(2)) scope.push_back(v);
    std::vector<double> expected;
    for (const auto& [values, p] : oracle::marginal(joint, scope))
      if (p > 0.0) expected.push_back(p);
    auto got = sparse_joint(net, scope);
    got.erase(std::remove_if(got.begin(), got.end(), [](double p) { return p <= 0.0; }), got.end());
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expected[i], 1e-12);
  }
}

TEST(SparseJoint, HandlesWideDeterministicCodes) {
  // Two codes over disjoint blocks of 7 coins: 2^14 equally likely pairs.
  MaxCoverInstance inst;
  inst.universe_size = 14;
  inst.subsets = {{1, 2, 3, 4, 5, 6, 7}, {8, 9, 10, 11, 12, 13, 14}};
  const auto problem = make_max_cover(inst);
  const auto p = sparse_joint(problem.network(), {14, 15});
  EXPECT_EQ(p.size(), 1u << 14);
}

TEST(Sampling, DeterministicNetworkAlwaysSameSample) {
  DiscreteNetwork net({{"X", 3}, {"Y", 2}}, {{0, {}, {0, 0, 1}}, {1, {0}, {1, 0, 1, 0, 0, 1}}}, {},
                      {});
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto s = sample(net, rng);
    EXPECT_EQ(s.at(0), 2u);
    EXPECT_EQ(s.at(1), 1u);
  }
}

TEST(Sampling, FairCoinFrequency) {
  DiscreteNetwork net({{"X", 2}}, {{0, {}, {0.5, 0.5}}}, {}, {});
  Rng rng(2);
  std::size_t ones = 0;
  const std::size_t n = 100000;
  for (std::size_t i = 0; i < n; ++i) ones += sample(net, rng).at(0);
  EXPECT_NEAR(static_cast<double>(ones) / n, 0.5, 0.01);
}

TEST(Sampling, FixedSeedReproduces) {
  Rng rng(77);
  const auto net = gen::random_network(6, 3, 2, rng);
  Rng a(5), b(5);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sample(net, a), sample(net, b));
}

TEST(Sampling, EmpiricalJointMatchesExact) {
  Rng rng(34);
  const auto net = gen::random_network(4, 2, 2, rng);
  const auto joint = oracle::full_joint(net);
  std::map<oracle::Values, double> counts;
  const std::size_t n = 200000;
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = sample(net, rng);
    oracle::Values x;
    for (VarId v = 0; v < net.size(); ++v) x.push_back(s.at(v));
    counts[x] += 1.0;
  }
  for (std::size_t i = 0; i < joint.states.size(); ++i) {
    const double p = joint.probs[i];
    const double sd = std::sqrt(p * (1 - p) / n);
    EXPECT_NEAR(counts[joint.states[i]] / n, p, 5 * sd + 1e-9);
  }
}

TEST(Restrict, Projection) {
  Assignment full;
  full.set(0, 1);
  full.set(1, 0);
  full.set(2, 1);
  EXPECT_TRUE(restrict_sample(full, std::span<const VarId>{}).empty());
  const VarId one[] = {1};
  const auto r = restrict_sample(full, one);
  EXPECT_EQ(r.size(), 1u);
  EXPECT_EQ(r.at(1), 0u);
  EXPECT_EQ(restrict_sample(r, one), r);
  const VarId missing[] = {4};
  EXPECT_THROW(restrict_sample(full, missing), std::out_of_range);
}

TEST(DrawIndex, CoversMass) {
  const double p[] = {0.2, 0.0, 0.8};
  EXPECT_EQ(draw_index(p, 0.0), 0u);
  EXPECT_EQ(draw_index(p, 0.19), 0u);
  EXPECT_EQ(draw_index(p, 0.2), 2u);
  EXPECT_EQ(draw_index(p, 0.999999), 2u);
}
