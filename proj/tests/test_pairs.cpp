#include "moduli/pairs.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace moduli;

namespace {

using Key = std::pair<long long, long long>;

std::set<Key> keys(const PairSet& s) {
  std::set<Key> out;
  for (const auto& p : s.pairs()) out.insert({p.r.convert_to<long long>(), p.m.convert_to<long long>()});
  return out;
}

std::set<Key> dagger_keys(const PairSet& s) {
  std::set<Key> out;
  for (const auto& p : s.pairs())
    if (p.has(PairFlag::dagger)) out.insert({p.r.convert_to<long long>(), p.m.convert_to<long long>()});
  return out;
}

std::set<Key> to_keys(const std::set<oracle::PairKey>& s) {
  return {s.begin(), s.end()};
}

const SearchBox kWide{200, 200};

}  // namespace

TEST(PairSet, MergeOnInsertAndOrder) {
  PairSet s;
  s.insert({Integer(5), Integer(3), static_cast<std::uint8_t>(PairFlag::a3_2)});
  s.insert({Integer(2), Integer(9), 0});
  s.insert({Integer(5), Integer(3), static_cast<std::uint8_t>(PairFlag::dagger)});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.pairs()[0].r, 2);
  EXPECT_TRUE(s.find(5, 3)->has(PairFlag::dagger));
  EXPECT_TRUE(s.find(5, 3)->has(PairFlag::a3_2));
  s.clip({4, 10});
  EXPECT_EQ(keys(s), (std::set<Key>{{2, 9}}));
  EXPECT_EQ(format_pair({Integer(6), Integer(3), static_cast<std::uint8_t>(PairFlag::dagger)}), "(6,3)†");
  EXPECT_EQ(format_pair({Integer(6), Integer(3), static_cast<std::uint8_t>(PairFlag::dagger)}, false),
            "(6,3)");
}

TEST(EnumGtA31, Examples) {
  EXPECT_EQ(keys(enum_gt_a31(1, {4, 200})), (std::set<Key>{{2, 5}, {3, 7}, {4, 9}}));
  EXPECT_EQ(keys(enum_gt_a31(3, {5, 200})), (std::set<Key>{{2, 3}, {5, 7}}));
  EXPECT_TRUE(enum_gt_a31(2, {2, 200}).empty());
}

TEST(EnumGtA31, MatchesOracle) {
  for (long long k = 1; k <= 8; ++k) {
    const auto want = oracle::a31_scan(k + 1, k, 120, 120, 3);
    EXPECT_EQ(keys(enum_gt_a31(k, {120, 120})), to_keys(want)) << "K^2 = " << k;
  }
}

TEST(EnumGtA32, ClosedExamples) {
  const auto k3 = enum_gt_a32_closed(3, {8, 200});
  EXPECT_EQ(keys(k3), (std::set<Key>{{6, 4}, {7, 4}, {8, 5}}));
  EXPECT_EQ(dagger_keys(k3), (std::set<Key>{{6, 4}}));

  EXPECT_EQ(keys(enum_gt_a32_closed(1, {4, 200})), (std::set<Key>{{4, 7}}));

  const auto k4 = enum_gt_a32_closed(4, {10, 200});
  EXPECT_EQ(keys(k4), (std::set<Key>{{6, 3}, {8, 4}, {10, 5}, {9, 4}, {10, 4}}));
  EXPECT_EQ(dagger_keys(k4), (std::set<Key>{{6, 3}, {8, 4}, {10, 5}}));
}

TEST(EnumGtA32, ClosedMatchesOracle) {
  for (long long k = 1; k <= 12; ++k) {
    const auto w = oracle::a32_scan(k + 1, k, 60, 60, k == 1, false);
    // A2 needs m >= 3 on these surfaces.
    std::set<Key> pairs, dag;
    for (const auto& p : w.pairs) if (p.second >= 3) pairs.insert(p);
    for (const auto& p : w.dagger) if (p.second >= 3) dag.insert(p);
    const auto got = enum_gt_a32_closed(k, {60, 60});
    EXPECT_EQ(keys(got), pairs) << "K^2 = " << k;
    EXPECT_EQ(dagger_keys(got), dag) << "K^2 = " << k;
  }
}

TEST(EnumGtA32, HyperellipticDropsAtKsqOne) {
  const auto s = enum_gt_a32_closed(1, {40, 40});
  EXPECT_FALSE(s.contains(3, 6));
  EXPECT_FALSE(s.contains(4, 8));
  EXPECT_TRUE(dagger_keys(s).empty());
}

TEST(EnumGtA32, LiteralRows) {
  EXPECT_EQ(gt_a32_literal_row(4).text, "(6,3)†,(8,4)†,(10,5)†,(9,4),(10,4) | S_11");
  EXPECT_EQ(gt_a32_literal_row(1).standard_from, 5);
  EXPECT_TRUE(gt_a32_errata(4).empty());
  EXPECT_FALSE(gt_a32_errata(5).empty());
}

TEST(EnumGtA32, ErrataExplainLiteralDifferences) {
  const SearchBox box{80, 80};
  for (long long k = 5; k <= 12; ++k) {
    const SurfaceModel model = build_model(GeneralTypeCanonical{k, std::nullopt});
    const auto raw = enum_a32_raw(k + 1, k, box, hyperelliptic_rule(model, k + 1), 3);
    const auto rep = cross_check(enum_gt_a32_literal(k, box), raw);
    std::set<Key> diff, expected;
    for (const auto& d : rep.differences)
      diff.insert({d.pair.r.convert_to<long long>(), d.pair.m.convert_to<long long>()});
    for (const auto& e : gt_a32_errata(k)) {
      for (const auto* p : {e.printed ? &*e.printed : nullptr, e.corrected ? &*e.corrected : nullptr})
        if (p && box.contains(p->r, p->m))
          expected.insert({p->r.convert_to<long long>(), p->m.convert_to<long long>()});
    }
    EXPECT_EQ(diff, expected) << "K^2 = " << k;
  }
}

TEST(EnumA32Raw, K3Quartic) {
  const auto s = enum_a32_raw(3, 4, {12, 4}, HyperellipticRule::never);
  EXPECT_EQ(keys(s), (std::set<Key>{{4, 2}, {6, 3}, {7, 3}, {8, 3}, {10, 4}, {11, 4}, {12, 4}}));
  EXPECT_TRUE(dagger_keys(s).empty());
  EXPECT_TRUE(enum_a32_raw(3, 4, {0, 0}, HyperellipticRule::never).empty());
}

TEST(EnumA32Raw, MatchesOracle) {
  for (long long g = 2; g <= 9; ++g)
    for (long long dsq = 1; dsq <= 9; ++dsq)
      for (auto rule : {HyperellipticRule::never, HyperellipticRule::unknown, HyperellipticRule::always}) {
        const auto w = oracle::a32_scan(g, dsq, 50, 30, rule == HyperellipticRule::always,
                                        rule == HyperellipticRule::never);
        const auto got = enum_a32_raw(g, dsq, {50, 30}, rule, 1, Execution::parallel);
        EXPECT_EQ(keys(got), to_keys(w.pairs));
        EXPECT_EQ(dagger_keys(got), to_keys(w.dagger));
      }
}

TEST(EnumKod0, A31Examples) {
  EXPECT_EQ(keys(enum_kod0_a31(4, {5, 4})), (std::set<Key>{{5, 4}}));
  EXPECT_TRUE(enum_kod0_a31(8, {3, 2}).contains(3, 2));
  const auto six = enum_kod0_a31(6, kWide);
  EXPECT_TRUE(six.empty());
  EXPECT_FALSE(six.diagnostics().empty());
}

TEST(EnumKod0, A31MatchesOracle) {
  for (long long hsq = 4; hsq <= 40; hsq += 2) {
    const auto want = oracle::a31_scan(1 + hsq / 2, hsq, 150, 150, 2);
    EXPECT_EQ(keys(enum_kod0_a31(hsq, {150, 150})), to_keys(want)) << "H^2 = " << hsq;
  }
}

TEST(EnumKod0, A32Examples) {
  const auto h3 = enum_kod0_a32_closed(6, {9, 2}, true);
  EXPECT_EQ(keys(h3), (std::set<Key>{{6, 2}, {7, 2}}));

  const SearchBox m2{200, 2};
  const auto h5 = enum_kod0_a32_closed(10, m2, false);
  EXPECT_EQ(keys(h5), (std::set<Key>{{10, 2}, {11, 2}, {12, 2}, {13, 2}}));
  EXPECT_EQ(dagger_keys(h5), (std::set<Key>{{10, 2}}));
  EXPECT_TRUE(dagger_keys(enum_kod0_a32_closed(10, m2, true)).empty());
}

TEST(EnumKod0, A32MatchesOracle) {
  for (long long hsq = 4; hsq <= 30; hsq += 2)
    for (bool trivial : {true, false}) {
      // K_S nontrivial needs H^2 >= 10 for H very ample.
      if (!trivial && hsq < 10) continue;
      const auto w = oracle::a32_scan(1 + hsq / 2, hsq, 160, 12, false, trivial);
      std::set<Key> pairs, dag;
      for (const auto& p : w.pairs) if (p.second >= 2) pairs.insert(p);
      for (const auto& p : w.dagger) if (p.second >= 2) dag.insert(p);
      const auto got = enum_kod0_a32_closed(hsq, {160, 12}, trivial);
      EXPECT_EQ(keys(got), pairs) << "H^2 = " << hsq;
      EXPECT_EQ(dagger_keys(got), dag) << "H^2 = " << hsq;
    }
}

TEST(TInterval, Shape) {
  const auto t = t_interval(2, 4);
  EXPECT_EQ(t.lo, 10);
  EXPECT_EQ(t.hi, 12);
}

TEST(EnumDelPezzo, Examples) {
  EXPECT_EQ(keys(enum_delpezzo(1, 1)), (std::set<Key>{{2, 3}}));
  EXPECT_EQ(keys(enum_delpezzo(2, 1)), (std::set<Key>{{5, 6}}));
  EXPECT_EQ(keys(enum_delpezzo(1, 3)), (std::set<Key>{{2, 3}, {5, 7}, {8, 11}}));
}

TEST(EnumDelPezzo, MatchesOracle) {
  for (long long e = 1; e <= 9; ++e) {
    const auto want = oracle::a31_scan(1 + 3 * e, 3 * e, 200, 200, 2);
    EXPECT_EQ(keys(enum_delpezzo(e, kWide)), to_keys(want)) << "e = " << e;
  }
}

TEST(EnumElliptic, Examples) {
  EXPECT_TRUE(enum_elliptic_product(2, 1).contains(9, 8));
  EXPECT_TRUE(enum_elliptic_product(3, 1).contains(27, 22));
  for (long long g = 2; g <= 6; ++g) {
    for (const auto& p : enum_elliptic_product(g, 8).pairs()) {
      EXPECT_GE(p.m, 3);
      EXPECT_GE(p.r, 2);
    }
  }
}

TEST(EnumElliptic, MatchesOracle) {
  for (long long g = 2; g <= 6; ++g) {
    const auto want = oracle::a31_scan(6 * g - 5, 8 * (g - 1), 400, 400, 3);
    EXPECT_EQ(keys(enum_elliptic_product(g, SearchBox{400, 400})), to_keys(want)) << "g = " << g;
  }
}

TEST(EnumIsogenous, Examples) {
  EXPECT_TRUE(enum_isogenous(3, 2, 3).contains(9, 8));
  EXPECT_TRUE(enum_isogenous(2, 2, 16).empty());
}

TEST(EnumIsogenous, MatchesOracle) {
  for (long long g = 2; g <= 7; ++g)
    for (long long G = 2; G <= 2 * g - 2; ++G) {
      if ((2 * g - 2) % G != 0) continue;
      const auto want = oracle::a31_scan(2 * G + g, 4 * G, 300, 300, 2);
      EXPECT_EQ(keys(enum_isogenous(g, G, SearchBox{300, 300})), to_keys(want))
          << "g = " << g << ", |G| = " << G;
    }
}

TEST(EnumBicanonical, MatchesOracle) {
  for (long long k = 6; k <= 14; k += 2) {
    const auto want = oracle::a31_scan(1 + 3 * k, 2 * k, 300, 300, 4);
    EXPECT_EQ(keys(enum_gt_bicanonical_a31(k, SearchBox{300, 300})), to_keys(want)) << "K^2 = " << k;
  }
}

TEST(CrossCheck, GtKsqTwo) {
  const auto model = build_model(GeneralTypeCanonical{2, std::nullopt});
  const SearchBox box{7, 64};
  EXPECT_TRUE(cross_check(enumerate_closed(model, box), enumerate_raw(model, box)).agrees());
}

TEST(CrossCheck, IdenticalAndInjected) {
  const auto model = build_model(GeneralTypeCanonical{3, std::nullopt});
  const SearchBox box{40, 40};
  const PairSet closed = enumerate_closed(model, box);
  EXPECT_TRUE(cross_check(closed, closed).agrees());

  PairSet perturbed = closed;
  Pair fake{Integer(5), Integer(4), 0};
  fake.set(PairFlag::sporadic);
  fake.set(PairFlag::a3_2);
  perturbed.insert(fake);
  const auto rep = cross_check(perturbed, enumerate_raw(model, box));
  ASSERT_EQ(rep.differences.size(), 1u);
  EXPECT_EQ(rep.differences[0].pair.r, 5);
  EXPECT_EQ(rep.differences[0].pair.m, 4);
  EXPECT_EQ(rep.differences[0].side, PairDiff::Side::closed_only);
  EXPECT_NE(rep.differences[0].diagnosis.find("(5,4)"), std::string::npos);
}

TEST(CrossCheck, DaggerFlagDifference) {
  const auto model = build_model(GeneralTypeCanonical{4, std::nullopt});
  const SearchBox box{20, 20};
  PairSet closed = enumerate_closed(model, box);
  PairSet stripped;
  for (auto p : closed.pairs()) {
    if (p.r == 6 && p.m == 3) p.flags &= ~static_cast<std::uint8_t>(PairFlag::dagger);
    stripped.insert(p);
  }
  const auto rep = cross_check(stripped, enumerate_raw(model, box));
  ASSERT_EQ(rep.differences.size(), 1u);
  EXPECT_EQ(rep.differences[0].side, PairDiff::Side::flags_differ);
}

TEST(Dispatch, ClosedAgreesWithRawAcrossFamilies) {
  const SearchBox box{60, 60};
  std::vector<SurfaceFamily> fams = {GeneralTypeBicanonical{8, std::nullopt}, DelPezzo{3},
                                     EllipticProduct{2}, IsogenousProduct{4, 3},
                                     KodairaZero{12, 2, true, true}, KodairaZero{12, 1, false, false}};
  for (const auto& f : fams) {
    const auto model = build_model(f);
    EXPECT_TRUE(cross_check(enumerate_closed(model, box), enumerate_raw(model, box)).agrees())
        << family_tag(f);
  }
}

TEST(Errors, HugeRawBoxRefused) {
  EXPECT_THROW(enum_a32_raw(3, 4, {Integer(1000000), Integer(1000000)}, HyperellipticRule::never),
               ModuliError);
}

TEST(EnumBicanonical, OnlyOddParametersIntegral) {
  // m = (a(3K^2+1) - 3)/2 is a half-integer for every even a.
  for (long long k = 6; k <= 20; k += 2) {
    const auto s = enum_gt_bicanonical_a31(k, 16);
    EXPECT_EQ(s.size(), 8u) << "K^2 = " << k;
    for (const auto& p : s.pairs()) {
      const Integer twice_m_plus_3 = 2 * p.m + 3;
      ASSERT_EQ(twice_m_plus_3 % (3 * k + 1), 0);
      EXPECT_EQ((twice_m_plus_3 / (3 * k + 1)) % 2, 1) << format_pair(p);
    }
  }
}
