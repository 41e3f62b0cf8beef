#pragma once

#include "moduli/integer.hpp"
#include "moduli/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace moduli {

enum class Verdict { pass, conditional, fail };

enum class A3Branch { a3_1, a3_2, fails };

struct A3Result {
  A3Branch branch = A3Branch::fails;
  /// Only meaningful for A3(2): d == 2r, where C must not be hyperelliptic.
  bool needs_non_hyperelliptic = false;

  friend bool operator==(const A3Result&, const A3Result&) = default;
};

enum class HyperellipticRule { never, always, unknown };

enum class HyperellipticRequirement { none, satisfied, conditional, impossible };

enum class Outcome { admissible, conditional, not_admissible };

/// (S, L = m * generator, H, r) with r >= 2.
class Collection {
 public:
  Collection(SurfaceModel model, Integer m, Integer r);

  const SurfaceModel& model() const { return model_; }
  const Integer& m() const { return m_; }
  const Integer& r() const { return r_; }

 private:
  SurfaceModel model_;
  Integer m_;
  Integer r_;
};

struct AdmissibilityReport {
  Verdict a1 = Verdict::fail;
  Verdict a2 = Verdict::fail;
  A3Result a3;
  Integer d;
  Integer genus;
  HyperellipticRequirement hyperelliptic = HyperellipticRequirement::none;
  std::vector<std::string> assumed_hypotheses;
  /// Reasons behind every non-pass verdict, plus reductions applied.
  std::vector<std::string> notes;
  Outcome outcome = Outcome::not_admissible;

  bool admissible() const { return outcome == Outcome::admissible; }

  friend bool operator==(const AdmissibilityReport&, const AdmissibilityReport&) = default;
};

A3Result check_a3(const Integer& d, const Integer& g, const Integer& r);

HyperellipticRule hyperelliptic_rule(const SurfaceModel& model, const Integer& g);

/// Smallest m for which the family's sufficient conditions give A2.
Integer a2_threshold(const SurfaceModel& model);

AdmissibilityReport check_collection(const Collection& c);

const char* to_string(Verdict v);
const char* to_string(A3Branch b);
const char* to_string(HyperellipticRule h);
const char* to_string(HyperellipticRequirement h);
const char* to_string(Outcome o);

}  // namespace moduli
