#include "moduli/admissibility.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace moduli;

namespace {

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
  return std::any_of(v.begin(), v.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

}  // namespace

TEST(CheckA3, Examples) {
  EXPECT_EQ(check_a3(5, 2, 2).branch, A3Branch::a3_1);
  const auto sporadic = check_a3(12, 4, 7);
  EXPECT_EQ(sporadic.branch, A3Branch::a3_2);
  EXPECT_FALSE(sporadic.needs_non_hyperelliptic);
  EXPECT_EQ(check_a3(5, 2, 3).branch, A3Branch::fails);
}

TEST(CheckA3, WindowEdges) {
  // g = 4, r = 6: window 11..12, 12 = 2r.
  EXPECT_EQ(check_a3(10, 4, 6).branch, A3Branch::fails);
  EXPECT_EQ(check_a3(11, 4, 6), (A3Result{A3Branch::a3_2, false}));
  EXPECT_EQ(check_a3(12, 4, 6), (A3Result{A3Branch::a3_2, true}));
  EXPECT_EQ(check_a3(13, 4, 6).branch, A3Branch::fails);
  EXPECT_EQ(check_a3(25, 4, 6).branch, A3Branch::a3_1);
  // r + 2g is the binding upper bound for large r.
  EXPECT_EQ(check_a3(28, 4, 20).branch, A3Branch::a3_2);
  EXPECT_EQ(check_a3(29, 4, 20).branch, A3Branch::fails);
}

TEST(HyperellipticRule, Cases) {
  const auto k3 = build_model(KodairaZero{4});
  EXPECT_EQ(hyperelliptic_rule(k3, curve_genus(k3)), HyperellipticRule::never);
  const auto gt1 = build_model(GeneralTypeCanonical{1, std::nullopt});
  EXPECT_EQ(hyperelliptic_rule(gt1, 2), HyperellipticRule::always);
  const auto gt4 = build_model(GeneralTypeCanonical{4, std::nullopt});
  EXPECT_EQ(hyperelliptic_rule(gt4, 5), HyperellipticRule::unknown);
  const auto enriques = build_model(KodairaZero{10, 1, false, false});
  EXPECT_EQ(hyperelliptic_rule(enriques, 6), HyperellipticRule::unknown);
  const auto abelian = build_model(KodairaZero{10, 0, false, true});
  EXPECT_EQ(hyperelliptic_rule(abelian, 6), HyperellipticRule::never);
}

TEST(Collection, RejectsSmallRank) {
  const auto model = build_model(KodairaZero{4});
  EXPECT_THROW(Collection(model, 4, 1), ModuliError);
  EXPECT_THROW(Collection(model, 0, 5), ModuliError);
}

TEST(CheckCollection, GeneralTypeA31) {
  const auto rep = check_collection(Collection(build_model(GeneralTypeCanonical{1, Integer(3)}), 5, 2));
  EXPECT_EQ(rep.outcome, Outcome::admissible);
  EXPECT_EQ(rep.a3.branch, A3Branch::a3_1);
  EXPECT_EQ(rep.d, 5);
  EXPECT_EQ(rep.genus, 2);
  EXPECT_EQ(rep.a1, Verdict::pass);
  EXPECT_EQ(rep.a2, Verdict::pass);
  EXPECT_EQ(rep.hyperelliptic, HyperellipticRequirement::none);
  EXPECT_TRUE(mentions(rep.notes, "L is big"));
}

TEST(CheckCollection, VeryAmplenessException) {
  const auto rep = check_collection(Collection(build_model(GeneralTypeCanonical{2, std::nullopt}), 4, 4));
  EXPECT_EQ(rep.outcome, Outcome::conditional);
  EXPECT_EQ(rep.a2, Verdict::conditional);
  EXPECT_EQ(rep.a3.branch, A3Branch::a3_2);
}

TEST(CheckCollection, K3A31) {
  const auto rep = check_collection(Collection(build_model(KodairaZero{4}), 4, 5));
  EXPECT_EQ(rep.outcome, Outcome::admissible);
  EXPECT_EQ(rep.a3.branch, A3Branch::a3_1);
  EXPECT_EQ(rep.d, 16);
}

TEST(CheckCollection, DaggerUnknownIsConditional) {
  // K^2 = 4, (6, 3): d = 12 = 2r.
  const auto rep = check_collection(Collection(build_model(GeneralTypeCanonical{4, std::nullopt}), 3, 6));
  EXPECT_EQ(rep.a3, (A3Result{A3Branch::a3_2, true}));
  EXPECT_EQ(rep.hyperelliptic, HyperellipticRequirement::conditional);
  EXPECT_EQ(rep.outcome, Outcome::conditional);
  EXPECT_TRUE(mentions(rep.assumed_hypotheses, "not hyperelliptic"));
}

TEST(CheckCollection, DaggerOnK3IsSatisfied) {
  // H^2 = 4, (4, 2): d = 8 = 2r, curves in |H| never hyperelliptic.
  const auto rep = check_collection(Collection(build_model(KodairaZero{4}), 2, 4));
  EXPECT_EQ(rep.hyperelliptic, HyperellipticRequirement::satisfied);
  EXPECT_EQ(rep.outcome, Outcome::admissible);
}

TEST(CheckCollection, GenusTwoDaggerIsImpossible) {
  // K^2 = 1, (3, 6): d = 6 = 2r with g = 2.
  const auto rep = check_collection(Collection(build_model(GeneralTypeCanonical{1, std::nullopt}), 6, 3));
  EXPECT_EQ(rep.hyperelliptic, HyperellipticRequirement::impossible);
  EXPECT_EQ(rep.outcome, Outcome::not_admissible);
}

TEST(CheckCollection, WindowMissAndLowMultiple) {
  const auto gt = build_model(GeneralTypeCanonical{1, std::nullopt});
  const auto miss = check_collection(Collection(gt, 5, 3));
  EXPECT_EQ(miss.a3.branch, A3Branch::fails);
  EXPECT_EQ(miss.outcome, Outcome::not_admissible);

  // K^2 = 3, (5, 2): m is below the threshold.
  const auto low = check_collection(Collection(build_model(GeneralTypeCanonical{3, std::nullopt}), 2, 5));
  EXPECT_EQ(low.a2, Verdict::fail);
  EXPECT_EQ(low.outcome, Outcome::not_admissible);
}

TEST(CheckCollection, BicanonicalThreshold) {
  const auto model = build_model(GeneralTypeBicanonical{6, std::nullopt});
  EXPECT_EQ(a2_threshold(model), 4);
  EXPECT_EQ(check_collection(Collection(model, 3, 2)).a2, Verdict::fail);
}

TEST(CheckCollection, Deterministic) {
  const auto model = build_model(GeneralTypeCanonical{4, std::nullopt});
  EXPECT_EQ(check_collection(Collection(model, 3, 6)), check_collection(Collection(model, 3, 6)));
}

TEST(ToString, Names) {
  EXPECT_STREQ(to_string(Outcome::not_admissible), "not-admissible");
  EXPECT_STREQ(to_string(A3Branch::a3_2), "A3(2)");
  EXPECT_STREQ(to_string(HyperellipticRule::never), "never-hyperelliptic");
  EXPECT_STREQ(to_string(Verdict::conditional), "conditional");
}
