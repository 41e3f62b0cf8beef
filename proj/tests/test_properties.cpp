// Randomized and exhaustive property checks. Seeds are fixed so failures
// reproduce; each failure message carries the offending input.

#include "moduli/admissibility.hpp"
#include "moduli/cli/report_json.hpp"
#include "moduli/moduli.hpp"
#include "moduli/pairs.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace moduli;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261016);
  return gen;
}

long long uniform(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

// Random symmetric form of rank 1 or 2 with small entries.
Form random_form() {
  if (uniform(0, 1) == 0) return Form::rank_one("H", uniform(-6, 12));
  Matrix<Integer> m(2, 2);
  const long long a = uniform(-4, 4), b = uniform(-4, 4), c = uniform(-4, 4);
  m << a, b, b, c;
  return Form({"A", "B"}, m);
}

Divisor random_class(const Form& f) {
  Divisor d(f.rank());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = uniform(-9, 9);
  return d;
}

}  // namespace

TEST(LatticeProperty, Bilinearity) {
  for (int t = 0; t < 500; ++t) {
    const Form f = random_form();
    const Divisor x = random_class(f), y = random_class(f), z = random_class(f);
    const long long a = uniform(-5, 5), b = uniform(-5, 5);
    const Divisor ax_by = Divisor(Integer(a) * x + Integer(b) * y);
    EXPECT_EQ(intersect(f, ax_by, z), a * intersect(f, x, z) + b * intersect(f, y, z));
    EXPECT_EQ(intersect(f, x, y), intersect(f, y, x));
  }
}

TEST(LatticeProperty, WhitneyRoundTrip) {
  for (int t = 0; t < 500; ++t) {
    const Form f = random_form();
    const Chern sub{uniform(1, 4), random_class(f), uniform(-20, 20)};
    const Chern q{uniform(2, 5), random_class(f), uniform(-20, 20)};
    const Chern total = whitney_product(f, sub, q);
    EXPECT_EQ(whitney_solve_sub(f, total, sub), q);
  }
}

TEST(LatticeProperty, WhitneyAssociative) {
  for (int t = 0; t < 500; ++t) {
    const Form f = random_form();
    const Chern a{uniform(1, 3), random_class(f), uniform(-9, 9)};
    const Chern b{uniform(1, 3), random_class(f), uniform(-9, 9)};
    const Chern c{uniform(1, 3), random_class(f), uniform(-9, 9)};
    EXPECT_EQ(whitney_product(f, whitney_product(f, a, b), c),
              whitney_product(f, a, whitney_product(f, b, c)));
  }
}

TEST(LatticeProperty, KernelBundleChern) {
  for (int t = 0; t < 300; ++t) {
    const Form f = random_form();
    const Divisor ell = random_class(f);
    const long long r = uniform(2, 10);
    EXPECT_EQ(kernel_bundle_dual(f, ell, Integer(r)), (Chern{r, ell, self_intersection(f, ell)}));
  }
}

TEST(SurfaceProperty, GenusFromLattice) {
  // Adjunction on the lattice agrees with 1 + (H^2 + K.H)/2 computed by hand.
  for (long long k = 1; k <= 20; ++k)
    EXPECT_EQ(curve_genus(build_model(GeneralTypeCanonical{k, std::nullopt})), 1 + (k + k) / 2);
  for (long long hsq = 4; hsq <= 40; hsq += 2)
    EXPECT_EQ(curve_genus(build_model(KodairaZero{hsq})), 1 + hsq / 2);
  for (long long e = 1; e <= 9; ++e)
    EXPECT_EQ(curve_genus(build_model(DelPezzo{e})), 1 + (9 * e - 3 * e) / 2);
}

TEST(AdmissibilityProperty, BranchesExclusiveAndBounds) {
  for (long long g = 2; g <= 25; ++g)
    for (long long r = 2; r <= 60; ++r)
      for (long long d = 1; d <= 3 * r + 2 * g + 5; ++d) {
        const A3Result a = check_a3(d, g, r);
        const bool one = d == r * g + 1;
        const bool two = d >= r + g + 1 && d <= std::min(2 * r, r + 2 * g);
        ASSERT_FALSE(one && two) << d << " " << g << " " << r;
        ASSERT_EQ(a.branch, one ? A3Branch::a3_1 : two ? A3Branch::a3_2 : A3Branch::fails);
        ASSERT_EQ(a.needs_non_hyperelliptic, two && d == 2 * r);
        if (a.branch == A3Branch::a3_2) EXPECT_GE(r, g + 1);
        if (a.branch != A3Branch::fails) EXPECT_GE(d, 2 * g + 1);
      }
}

TEST(AdmissibilityProperty, OutcomeMatchesWindowForK3) {
  const auto model = build_model(KodairaZero{8});
  const Integer g = curve_genus(model);
  for (long long r = 2; r <= 40; ++r)
    for (long long m = 1; m <= 10; ++m) {
      const auto rep = check_collection(Collection(model, m, r));
      const bool in_window = check_a3(restricted_degree(model, m), g, r).branch != A3Branch::fails;
      EXPECT_EQ(rep.outcome == Outcome::admissible, in_window && m >= 2) << r << "," << m;
      EXPECT_NE(rep.outcome, Outcome::conditional);
    }
}

TEST(PairsProperty, ParallelEqualsSequential) {
  for (int t = 0; t < 30; ++t) {
    const long long g = uniform(2, 20), dsq = uniform(1, 20);
    const SearchBox box{uniform(0, 300), uniform(0, 300)};
    for (auto rule : {HyperellipticRule::never, HyperellipticRule::unknown}) {
      const auto a = enum_a32_raw(g, dsq, box, rule, 1, Execution::sequential);
      const auto b = enum_a32_raw(g, dsq, box, rule, 1, Execution::parallel);
      ASSERT_EQ(a, b);
      for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a.pairs()[i].flags, b.pairs()[i].flags);
    }
    EXPECT_EQ(enum_a31_raw(g, dsq, box, 1, Execution::sequential),
              enum_a31_raw(g, dsq, box, 1, Execution::parallel));
  }
}

TEST(PairsProperty, ClosedPairsSatisfyIdentity) {
  std::vector<SurfaceFamily> families;
  for (int k = 1; k <= 8; ++k) families.push_back(GeneralTypeCanonical{k, std::nullopt});
  for (int k = 6; k <= 16; k += 2) families.push_back(GeneralTypeBicanonical{k, std::nullopt});
  for (int h = 4; h <= 24; h += 2) families.push_back(KodairaZero{h});
  for (int e = 1; e <= 9; ++e) families.push_back(DelPezzo{e});
  for (int g = 2; g <= 6; ++g) families.push_back(EllipticProduct{g});
  for (const auto& f : families) {
    const auto model = build_model(f);
    const long long g = curve_genus(model).convert_to<long long>();
    for (const auto& p : enumerate_closed(model, {150, 150}).pairs()) {
      const long long r = p.r.convert_to<long long>();
      const long long d = restricted_degree(model, p.m).convert_to<long long>();
      if (p.has(PairFlag::a3_1)) EXPECT_EQ(d, r * g + 1) << family_tag(f) << " " << format_pair(p);
      if (p.has(PairFlag::a3_2)) {
        EXPECT_GE(d, r + g + 1);
        EXPECT_LE(d, std::min(2 * r, r + 2 * g));
        EXPECT_EQ(p.has(PairFlag::dagger), d == 2 * r && !model.trivial_canonical);
      }
    }
  }
}

TEST(PairsProperty, TIntervalsTileWithGaps) {
  for (long long h = 2; h <= 30; ++h)
    for (long long m = 2; m <= 30; ++m) {
      const auto a = t_interval(h, m), b = t_interval(h, m + 1);
      EXPECT_EQ(a.hi - a.lo, h);
      EXPECT_EQ(b.lo - a.hi, h);
    }
}

TEST(ModuliProperty, ExpectedDimFactorization) {
  for (int t = 0; t < 10000; ++t) {
    const long long r = uniform(1, 200), lsq = uniform(-1000, 100000), chi = uniform(-10, 10);
    EXPECT_EQ(expected_moduli_dim(r, lsq, lsq, chi), (r + 1) * (lsq - (r - 1) * chi));
    EXPECT_EQ(discriminant(r, lsq, lsq), (r + 1) * lsq);
  }
}

TEST(ModuliProperty, CurveGrassmannianAtA31) {
  for (long long g = 2; g <= 50; ++g)
    for (long long r = 2; r <= 50; ++r)
      ASSERT_EQ(curve_grassmannian_dim(r, r * g + 1, g), (r * r - 1) * (g - 1));
}

TEST(ModuliProperty, DestabilizerExhaustive) {
  for (long long g = 2; g <= 30; ++g)
    for (long long r = 2; r <= 30; ++r)
      for (long long s = 1; s < r; ++s) ASSERT_EQ(destabilizer_degree_bound(g, r, s), s * g + 1);
}

TEST(ReportProperty, JsonRoundTripRandomCollections) {
  for (int t = 0; t < 200; ++t) {
    cli::CollectionDocument doc;
    doc.command = uniform(0, 1) ? "check" : "dims";
    const long long k = uniform(1, 6);
    doc.surface.family = "gt-canonical";
    doc.surface.params["ksq"] = k;
    if (uniform(0, 1)) doc.surface.params["chi"] = uniform(1, 5);
    if (uniform(0, 1)) doc.surface.label = "s" + std::to_string(t);
    doc.r = uniform(2, 40);
    doc.m = uniform(1, 40);
    const auto model = cli::to_model(doc.surface);
    doc.admissibility = check_collection(Collection(model, doc.m, doc.r));
    doc.dimensions = compute_dimensions(model, doc.m, doc.r);
    const auto j = cli::to_json(doc);
    EXPECT_EQ(cli::document_from_json(cli::Json::parse(j.dump())), doc);
  }
}
