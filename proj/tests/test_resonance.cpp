#include <gtest/gtest.h>

#include <algorithm>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <random>
#include <set>

#include "gravwave/quasi_resonance.hpp"
#include "gravwave/radicals.hpp"
#include "gravwave/resonance.hpp"

using namespace gravwave;
using Dec = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<120>>;

namespace {

// Independent oracle: 120-digit decimal floating point, a different library
// and algorithm from the certified MPFR path.
Dec oracle_detuning(Wavevector k, Wavevector k1, Wavevector k2, Wavevector k3) {
  auto w = [](Wavevector l) {
    const Dec n2 = Dec(l.x) * l.x + Dec(l.y) * l.y;
    return sqrt(sqrt(n2));
  };
  return w(k) + w(k1) - w(k2) - w(k3);
}

bool oracle_exact(const Quartet& q) {
  return q.momentum_conserved() && abs(oracle_detuning(q.k, q.k1, q.k2, q.k3)) < Dec("1e-100");
}

using Key = std::array<std::int64_t, 8>;
Key key(const Quartet& q) {
  const Quartet c = canonical(q);
  return {c.k.x, c.k.y, c.k1.x, c.k1.y, c.k2.x, c.k2.y, c.k3.x, c.k3.y};
}

std::vector<Wavevector> d4_image(std::span<const Wavevector> set, int g) {
  std::vector<Wavevector> out;
  for (Wavevector l : set) {
    Wavevector m = l;
    if (g & 1) m = {m.y, m.x};
    if (g & 2) m.x = -m.x;
    if (g & 4) m.y = -m.y;
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Wavevector> sorted(std::vector<Wavevector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Radicals, FourthRootForm) {
  auto f = fourth_root_form(80);
  EXPECT_EQ(f.coefficient, 2);
  EXPECT_EQ(f.radicand, 5);
  f = fourth_root_form(BigInt(16) * 81 * 625 * 7);
  EXPECT_EQ(f.coefficient, 30);
  EXPECT_EQ(f.radicand, 7);
  f = fourth_root_form(BigInt(8) * 9);
  EXPECT_EQ(f.coefficient, 1);
  EXPECT_EQ(f.radicand, 72);
  f = fourth_root_form(0);
  EXPECT_EQ(f.coefficient, 0);
  EXPECT_TRUE(is_perfect_square(BigInt(1) << 80));
  EXPECT_FALSE(is_perfect_square((BigInt(1) << 80) + 1));
}

TEST(Radicals, SumZeroAndCertifiedInterval) {
  // 16^(1/4) + 1 - 81^(1/4) - 0 = 0
  EXPECT_TRUE(fourth_root_sum_is_zero({16, 1, 81, 0}, {1, 1, -1, -1}));
  EXPECT_FALSE(fourth_root_sum_is_zero({2, 1, 3, 0}, {1, 1, -1, -1}));
  const auto iv = refine_fourth_root_sum({2, 1, 3, 0}, {1, 1, -1, -1});
  EXPECT_TRUE(iv.excludes_zero());
  EXPECT_LE(iv.lower, iv.upper);
  const double value = std::pow(2.0, 0.25) + 1.0 - std::pow(3.0, 0.25);
  EXPECT_LE(iv.lower, value + 1e-15);
  EXPECT_GE(iv.upper, value - 1e-15);
  const auto zero = refine_fourth_root_sum({16, 1, 81, 0}, {1, 1, -1, -1});
  EXPECT_FALSE(zero.excludes_zero());
  EXPECT_GE(zero.precision_bits, 665);
}

TEST(ExactResonance, LargeGenericQuartet) {
  const Wavevector k{495, 90}, k1{64, 128}, k2{359, 118}, k3{200, 100};
  EXPECT_EQ(is_exact_resonance(k, k1, k2, k3), ResonanceVerdict::exact);
  const auto q = make_quartet(k, k1, k2, k3);
  EXPECT_TRUE(oracle_exact(q));
  EXPECT_TRUE(certified_zero_detuning(q));
  EXPECT_LT(certified_detuning_width(q), 1e-190);
  EXPECT_EQ(q.classification, ResonanceClass::exact);
  EXPECT_EQ(q.family, QuartetFamily::other);
}

TEST(ExactResonance, TrivialExchangeIsExact) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> u(-500, 500);
  for (int i = 0; i < 50; ++i) {
    const Wavevector a{u(rng), u(rng)}, b{u(rng), u(rng)};
    EXPECT_EQ(is_exact_resonance(a, b, a, b), ResonanceVerdict::exact);
    EXPECT_EQ(is_exact_resonance(a, b, b, a), ResonanceVerdict::exact);
    EXPECT_EQ(classify_family(make_quartet(a, b, a, b)), QuartetFamily::trivial);
  }
}

TEST(ExactResonance, SmallestTrident) {
  const auto q = make_quartet({49, 0}, {-9, 0}, {20, 15}, {20, -15});
  EXPECT_EQ(is_exact_resonance(q), ResonanceVerdict::exact);
  EXPECT_TRUE(oracle_exact(q));
  EXPECT_EQ(q.family, QuartetFamily::trident);
  EXPECT_FALSE(q.zero_coupling());
}

TEST(ExactResonance, RejectsNearMissesAndMomentumMismatch) {
  EXPECT_EQ(is_exact_resonance({1, 0}, {0, 1}, {1, 1}, {0, 0}), ResonanceVerdict::not_exact);
  EXPECT_EQ(is_exact_resonance({49, 0}, {-9, 0}, {20, 15}, {20, -14}), ResonanceVerdict::not_exact);
  // near miss in frequency, exact in momentum
  EXPECT_EQ(is_exact_resonance({49, 0}, {-9, 1}, {20, 16}, {20, -15}), ResonanceVerdict::not_exact);
}

TEST(ExactResonance, AgreesWithOracleOnRandomQuartets) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> u(-40, 40);
  int exact = 0;
  for (int i = 0; i < 2000; ++i) {
    const Wavevector k{u(rng), u(rng)}, k1{u(rng), u(rng)}, k2{u(rng), u(rng)};
    const Wavevector k3 = k + k1 - k2;
    const auto q = make_quartet(k, k1, k2, k3);
    const bool truth = oracle_exact(q);
    EXPECT_EQ(q.classification == ResonanceClass::exact, truth);
    exact += truth;
  }
  RecordProperty("exact_among_random", exact);
}

TEST(ExactResonance, AgreesWithOracleNearKnownSolutions) {
  // Momentum-preserving unit shifts of exact quartets are near misses.
  for (const auto& t : tridents(10, 10)) {
    EXPECT_TRUE(oracle_exact(t));
    for (Wavevector shift : {Wavevector{1, 0}, Wavevector{0, 1}, Wavevector{1, -1}}) {
      const auto q = make_quartet(t.k, t.k1, t.k2 + shift, t.k3 - shift);
      EXPECT_EQ(q.classification == ResonanceClass::exact, oracle_exact(q));
      EXPECT_EQ(q.classification, ResonanceClass::non_resonant);
    }
  }
}

TEST(ExactResonance, HomogeneousUnderSquaredScaling) {
  for (std::int64_t lambda : {2, 3, 5}) {
    const std::int64_t s = lambda * lambda;
    EXPECT_EQ(is_exact_resonance({49 * s, 0}, {-9 * s, 0}, {20 * s, 15 * s}, {20 * s, -15 * s}), ResonanceVerdict::exact);
    EXPECT_EQ(is_exact_resonance({495 * s, 90 * s}, {64 * s, 128 * s}, {359 * s, 118 * s}, {200 * s, 100 * s}),
              ResonanceVerdict::exact);
  }
}

TEST(Tridents, AllUpToTenAreExact) {
  const auto list = tridents(10, 10);
  EXPECT_EQ(list.size(), 45u);
  for (const auto& q : list) {
    EXPECT_EQ(q.classification, ResonanceClass::exact);
    EXPECT_TRUE(q.momentum_conserved());
    EXPECT_TRUE(oracle_exact(q));
    EXPECT_TRUE(certified_zero_detuning(q));
    EXPECT_EQ(q.family, QuartetFamily::trident);
    EXPECT_NE(q.k2.y, 0);
  }
  EXPECT_EQ(list.front().k, (Wavevector{49, 0}));
  EXPECT_EQ(list.front().k1, (Wavevector{-9, 0}));
  EXPECT_EQ(list.front().k2, (Wavevector{20, 15}));
  EXPECT_EQ(list.front().k3, (Wavevector{20, -15}));
}

TEST(Tridents, RescalingsStayWithinBound) {
  const auto list = tridents(2, 1, 200);
  ASSERT_EQ(list.size(), 4u);  // lambda = 1..4, extent 49
  for (const auto& q : list) {
    EXPECT_LE(q.k.x, 200);
    EXPECT_TRUE(oracle_exact(q));
  }
}

TEST(Collinear, CandidatesCarryPairingVerdicts) {
  const auto list = collinear_candidates(3, 3);
  ASSERT_EQ(list.size(), 9u);
  EXPECT_EQ(list.front().values, (std::array<std::int64_t, 4>{4, 4, -1, 17}));
  for (const auto& c : list) {
    const auto [a, b, cc, d] = c.values;
    const std::array<std::array<std::int64_t, 4>, 3> pairings{{{a, b, cc, d}, {a, cc, b, d}, {a, d, b, cc}}};
    std::optional<int> expected;
    for (int p = 0; p < 3; ++p) {
      const auto& v = pairings[p];
      const auto q = make_quartet({v[0], 0}, {v[1], 0}, {v[2], 0}, {v[3], 0});
      if (!expected && oracle_exact(q)) expected = p;
    }
    EXPECT_EQ(c.verified_pairing, expected) << c.m << "," << c.n;
    if (!c.verified_pairing) {
      EXPECT_EQ(c.quartet.classification, ResonanceClass::non_resonant);
    }
  }
}

TEST(Collinear, CollinearQuartetsHaveZeroCoupling) {
  const auto q = make_quartet({4, 0}, {1, 0}, {1, 0}, {4, 0});
  EXPECT_EQ(q.family, QuartetFamily::trivial);
  // 16 + 1 = 9 + ... collinear with magnitude exchange across the origin
  const auto c = make_quartet({9, 0}, {-1, 0}, {4, 0}, {4, 0});
  EXPECT_EQ(c.family, QuartetFamily::collinear);
  EXPECT_TRUE(c.zero_coupling());
  EXPECT_EQ(c.classification, ResonanceClass::exact);
}

TEST(BruteForce, SixtyFindsTridentAndOnlyExactQuartets) {
  const auto all = brute_force_exact(60);
  ASSERT_FALSE(all.empty());
  std::array<std::size_t, 5> family{};
  bool found = false;
  const auto trident = make_quartet({49, 0}, {-9, 0}, {20, 15}, {20, -15});
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& q = all[i];
    ASSERT_TRUE(q.momentum_conserved());
    ASSERT_EQ(q.classification, ResonanceClass::exact);
    ++family[static_cast<int>(q.family)];
    if (same_quartet(q, trident)) found = true;
    if (i % 5000 == 0) {
      EXPECT_TRUE(oracle_exact(q));
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(family[static_cast<int>(QuartetFamily::trivial)], 0u);
  EXPECT_GE(family[static_cast<int>(QuartetFamily::trident)], 8u);  // D4 orbit
  RecordProperty("quartets", static_cast<int>(all.size()));
  RecordProperty("symmetric", static_cast<int>(family[1]));
  RecordProperty("collinear", static_cast<int>(family[2]));
  RecordProperty("trident", static_cast<int>(family[3]));
  RecordProperty("other", static_cast<int>(family[4]));
}

TEST(BruteForce, AxisOnlyRecoversPairExchanges) {
  BruteForceOptions opts;
  opts.axis_only = true;
  opts.include_trivial = true;
  const auto axis = brute_force_exact(60, 1e-9, opts);
  std::set<Key> keys;
  for (const auto& q : axis) {
    EXPECT_EQ(q.k.y, 0);
    EXPECT_EQ(q.k1.y, 0);
    EXPECT_EQ(q.k2.y, 0);
    EXPECT_EQ(q.k3.y, 0);
    EXPECT_NE(q.family, QuartetFamily::other);
    keys.insert(key(q));
  }
  for (int a = -60; a <= 60; ++a) {
    for (int b = -60; b <= 60; ++b) {
      if (a == 0 || b == 0 || a == b || a + b < -60 || a + b > 60) continue;
      EXPECT_TRUE(keys.count(key(make_quartet({a, 0}, {b, 0}, {a, 0}, {b, 0})))) << a << " " << b;
    }
  }
}

TEST(BruteForce, ZeroTolerancePathAgreesWithExactTest) {
  BruteForceOptions raw;
  raw.confirm = false;
  const auto zero = brute_force_exact(30, 0.0, raw);
  const auto confirmed = brute_force_exact(30, 1e-9);
  std::set<Key> confirmed_keys;
  for (const auto& q : confirmed) confirmed_keys.insert(key(q));
  ASSERT_FALSE(zero.empty());
  for (const auto& q : zero) {
    EXPECT_EQ(is_exact_resonance(q), ResonanceVerdict::exact);
    EXPECT_TRUE(confirmed_keys.count(key(q)));
  }
  for (const auto& q : confirmed) EXPECT_TRUE(certified_zero_detuning(q));
}

TEST(QuasiGenerations, EmptyStaysEmpty) {
  const std::vector<Wavevector> none;
  const auto g = quasi_generations(none, 1e-3, 16);
  for (const auto& gen : g.generations) EXPECT_TRUE(gen.empty());
  EXPECT_EQ(g.verdict, SpreadVerdict::saturates);
}

TEST(QuasiGenerations, ZeroBroadeningSaturatesAfterExactResonances) {
  const auto ring = ring_modes(6.0, 9.0, 64);
  const auto g = quasi_generations(ring, 0.0, 64);
  EXPECT_EQ(g.verdict, SpreadVerdict::saturates);
  ASSERT_GE(g.generations.size(), 2u);
  EXPECT_EQ(g.generations.front(), sorted(ring));
  EXPECT_GT(g.generations[1].size(), ring.size());
  EXPECT_EQ(g.generations.back(), g.generations[1]);
  // every new mode lies on an exact quartet with three modes of the ring
  RecordProperty("ring", static_cast<int>(ring.size()));
  RecordProperty("saturated", static_cast<int>(g.generations.back().size()));
}

TEST(QuasiGenerations, ThreeInSetRuleAddsNothingAtZero) {
  const auto ring = ring_modes(6.0, 9.0, 64);
  GenerationOptions opts;
  opts.rule = GenerationRule::three_in_set;
  const auto g = quasi_generations(ring, 0.0, 64, opts);
  EXPECT_EQ(g.verdict, SpreadVerdict::saturates);
  EXPECT_EQ(g.generations.back(), sorted(ring));
}

TEST(QuasiGenerations, MonotoneInDelta) {
  const auto ring = ring_modes(3.0, 4.5, 24);
  for (auto rule : {GenerationRule::pair_source, GenerationRule::three_in_set}) {
    GenerationOptions opts;
    opts.rule = rule;
    opts.max_generations = 6;
    const auto small = quasi_generations(ring, 2e-4, 24, opts);
    const auto large = quasi_generations(ring, 1e-3, 24, opts);
    for (std::size_t i = 0; i < small.generations.size(); ++i) {
      const auto& a = small.generations[i];
      const auto& b = large.generations[std::min(i, large.generations.size() - 1)];
      EXPECT_TRUE(std::includes(b.begin(), b.end(), a.begin(), a.end())) << "generation " << i;
      if (i > 0) {
        const auto& prev = small.generations[i - 1];
        EXPECT_TRUE(std::includes(a.begin(), a.end(), prev.begin(), prev.end()));
      }
    }
  }
}

TEST(QuasiGenerations, InvariantUnderSquareSymmetry) {
  const auto ring = ring_modes(3.0, 4.5, 24);
  GenerationOptions opts;
  opts.max_generations = 4;
  const auto g = quasi_generations(ring, 5e-4, 24, opts);
  for (const auto& gen : g.generations) {
    for (int s = 0; s < 8; ++s) EXPECT_EQ(d4_image(gen, s), gen);
  }
}

TEST(QuasiGenerations, LargeBroadeningFillsGrid) {
  const auto ring = ring_modes(6.0, 9.0, 64);
  const auto g = quasi_generations(ring, 1.4e-4, 64);
  EXPECT_EQ(g.verdict, SpreadVerdict::fills_grid);
}

TEST(DeltaCrit, BadBracketIsReported) {
  const auto ring = ring_modes(6.0, 9.0, 64);
  DeltaCritOptions opts;
  opts.delta_low = 1e-4;
  opts.delta_high = 1e-3;
  EXPECT_THROW(find_delta_crit(ring, 64, opts), BracketError);
}
