#include "moduli/admissibility.hpp"

#include "moduli/error.hpp"

#include <algorithm>
#include <sstream>
#include <variant>

namespace moduli {

Collection::Collection(SurfaceModel model, Integer m, Integer r)
    : model_(std::move(model)), m_(std::move(m)), r_(std::move(r)) {
  if (r_ < 2) throw ModuliError(Errc::out_of_range, "an admissible collection needs r >= 2");
  if (m_ < 1) throw ModuliError(Errc::out_of_range, "L = mH needs m >= 1");
}

A3Result check_a3(const Integer& d, const Integer& g, const Integer& r) {
  if (d == r * g + 1) return {A3Branch::a3_1, false};
  if (r + g + 1 <= d && d <= std::min(Integer(2 * r), Integer(r + 2 * g)))
    return {A3Branch::a3_2, d == 2 * r};
  return {A3Branch::fails, false};
}

HyperellipticRule hyperelliptic_rule(const SurfaceModel& model, const Integer& g) {
  if (g == 2) return HyperellipticRule::always;
  // K_C = H|_C embeds C by a subsystem of |K_C|.
  if (model.trivial_canonical) return HyperellipticRule::never;
  return HyperellipticRule::unknown;
}

Integer a2_threshold(const SurfaceModel& model) {
  if (std::holds_alternative<GeneralTypeBicanonical>(model.family)) return 4;
  return model.h0_threshold;
}

AdmissibilityReport check_collection(const Collection& c) {
  const SurfaceModel& model = c.model();
  AdmissibilityReport rep;
  rep.assumed_hypotheses = model.assumed_hypotheses;
  rep.genus = curve_genus(model);
  rep.d = restricted_degree(model, c.m());

  rep.a1 = rep.genus >= 2 ? Verdict::pass : Verdict::fail;
  if (rep.a1 == Verdict::fail) rep.notes.emplace_back("A1: curve in |H| has genus < 2");

  rep.a2 = Verdict::pass;
  rep.notes.emplace_back("A2: r >= dim phi_L(S) reduces to r >= 2 since L is big on a surface");
  const Integer threshold = a2_threshold(model);
  if (c.m() < threshold) {
    rep.a2 = Verdict::fail;
    std::ostringstream os;
    os << "A2: vanishing of H^1(L - H) for this family needs m >= " << threshold;
    rep.notes.push_back(os.str());
  } else if (const auto* gt = std::get_if<GeneralTypeCanonical>(&model.family);
             gt && gt->ksq <= 2 && c.m() < 5) {
    rep.a2 = Verdict::conditional;
    rep.notes.emplace_back(
        "A2: mK_S very ample only guaranteed for m >= 5 when K_S^2 <= 2 (Bombieri-Reider)");
  }

  rep.a3 = check_a3(rep.d, rep.genus, c.r());
  if (rep.a3.branch == A3Branch::fails) rep.notes.emplace_back("A3: degree window missed");

  if (rep.a3.branch == A3Branch::a3_2 && rep.a3.needs_non_hyperelliptic) {
    switch (hyperelliptic_rule(model, rep.genus)) {
      case HyperellipticRule::never:
        rep.hyperelliptic = HyperellipticRequirement::satisfied;
        break;
      case HyperellipticRule::always:
        rep.hyperelliptic = HyperellipticRequirement::impossible;
        rep.notes.emplace_back("A3(2): d = 2r but every genus-2 curve is hyperelliptic");
        break;
      case HyperellipticRule::unknown:
        rep.hyperelliptic = HyperellipticRequirement::conditional;
        rep.assumed_hypotheses.emplace_back("general curve in |H| is not hyperelliptic");
        break;
    }
  }

  const bool failed = rep.a1 == Verdict::fail || rep.a2 == Verdict::fail ||
                      rep.a3.branch == A3Branch::fails ||
                      rep.hyperelliptic == HyperellipticRequirement::impossible;
  const bool conditional = rep.a2 == Verdict::conditional ||
                           rep.hyperelliptic == HyperellipticRequirement::conditional;
  rep.outcome = failed        ? Outcome::not_admissible
                : conditional ? Outcome::conditional
                              : Outcome::admissible;
  return rep;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::conditional: return "conditional";
    case Verdict::fail: return "fail";
  }
  return "?";
}

const char* to_string(A3Branch b) {
  switch (b) {
    case A3Branch::a3_1: return "A3(1)";
    case A3Branch::a3_2: return "A3(2)";
    case A3Branch::fails: return "fails";
  }
  return "?";
}

const char* to_string(HyperellipticRule h) {
  switch (h) {
    case HyperellipticRule::never: return "never-hyperelliptic";
    case HyperellipticRule::always: return "always-hyperelliptic";
    case HyperellipticRule::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(HyperellipticRequirement h) {
  switch (h) {
    case HyperellipticRequirement::none: return "none";
    case HyperellipticRequirement::satisfied: return "required-and-satisfied";
    case HyperellipticRequirement::conditional: return "required-and-conditional";
    case HyperellipticRequirement::impossible: return "required-and-impossible";
  }
  return "?";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::admissible: return "admissible";
    case Outcome::conditional: return "conditional";
    case Outcome::not_admissible: return "not-admissible";
  }
  return "?";
}

}  // namespace moduli
