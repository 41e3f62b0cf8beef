#include "moduli/selfcheck.hpp"

#include "moduli/admissibility.hpp"
#include "moduli/error.hpp"
#include "moduli/moduli.hpp"
#include "moduli/pairs.hpp"

#include <functional>
#include <sstream>

namespace moduli {

namespace {

using Probe = std::function<std::string()>;  // empty string means pass

std::string describe(const CrossCheckReport& rep) {
  std::ostringstream os;
  for (const auto& d : rep.differences) os << d.diagnosis << "; ";
  return os.str();
}

std::string gt_tables() {
  const SearchBox box{40, 40};
  for (int k = 1; k <= 6; ++k) {
    const SurfaceModel model = build_model(GeneralTypeCanonical{k, std::nullopt});
    const auto rep = cross_check(enumerate_closed(model, box), enumerate_raw(model, box));
    if (!rep.agrees()) return "K^2 = " + std::to_string(k) + ": " + describe(rep);
  }
  return "";
}

std::string kod0_tables() {
  for (int hsq = 4; hsq <= 16; hsq += 2) {
    const SearchBox box{8 * hsq, 8};
    std::vector<KodairaZero> variants = {KodairaZero{hsq, 2, true, true}};
    if (hsq >= 10) {
      variants.push_back(KodairaZero{hsq, 0, false, true});
      variants.push_back(KodairaZero{hsq, 1, false, false});
    }
    for (const auto& f : variants) {
      const SurfaceModel model = build_model(f);
      const auto rep = cross_check(enumerate_closed(model, box), enumerate_raw(model, box));
      if (!rep.agrees()) return "H^2 = " + std::to_string(hsq) + ": " + describe(rep);
    }
  }
  return "";
}

std::string soundness() {
  const SearchBox box{200, 200};
  std::vector<SurfaceFamily> families;
  for (int k = 1; k <= 6; ++k) families.push_back(GeneralTypeCanonical{k, std::nullopt});
  for (int k = 6; k <= 12; k += 2) families.push_back(GeneralTypeBicanonical{k, std::nullopt});
  for (int hsq = 4; hsq <= 16; hsq += 2) families.push_back(KodairaZero{hsq, 2, true, true});
  for (int e = 1; e <= 9; ++e) families.push_back(DelPezzo{e});
  for (int g = 2; g <= 6; ++g) {
    families.push_back(EllipticProduct{g});
    for (int G = 2; G <= 2 * g - 2; ++G)
      if ((2 * g - 2) % G == 0) families.push_back(IsogenousProduct{g, G});
  }
  for (const auto& f : families) {
    const SurfaceModel model = build_model(f);
    const Integer g = curve_genus(model);
    const PairSet set = enumerate_closed(model, box);
    for (const auto& p : set.pairs()) {
      if (p.has(PairFlag::a3_1) == p.has(PairFlag::a3_2))
        return family_tag(f) + " " + format_pair(p) + ": not exactly one A3 branch";
      const A3Result a3 = check_a3(restricted_degree(model, p.m), g, p.r);
      const A3Branch want = p.has(PairFlag::a3_1) ? A3Branch::a3_1 : A3Branch::a3_2;
      if (a3.branch != want) return family_tag(f) + " " + format_pair(p) + ": window check failed";
    }
  }
  return "";
}

std::string t_disjoint() {
  for (int h = 2; h <= 20; ++h)
    for (int m = 2; m <= 20; ++m) {
      const Interval a = t_interval(h, m), b = t_interval(h, m + 1);
      if (b.lo - a.hi != h || a.hi - a.lo != h) return "h = " + std::to_string(h);
    }
  return "";
}

std::string determinism() {
  const SearchBox box{120, 60};
  for (int k = 1; k <= 4; ++k) {
    const Integer g = k + 1;
    const auto rule = k == 1 ? HyperellipticRule::always : HyperellipticRule::unknown;
    if (!(enum_a32_raw(g, k, box, rule, 1, Execution::sequential) ==
          enum_a32_raw(g, k, box, rule, 1, Execution::parallel)))
      return "K^2 = " + std::to_string(k);
  }
  return "";
}

std::string dimension_identities() {
  for (int r = 1; r <= 30; ++r)
    for (int lsq = -20; lsq <= 60; lsq += 3)
      for (int chi = -3; chi <= 5; ++chi) {
        const Integer ed = expected_moduli_dim(r, lsq, lsq, chi);
        if (ed != Integer(r + 1) * (lsq - (r - 1) * chi)) return "edim factorization";
        if (discriminant(r, lsq, lsq) != Integer(r + 1) * lsq) return "discriminant";
        // edim - 2 dimGr = (r+1)^2 (2 - chi) with h0 = chi + L^2/2.
        if (lsq % 2 == 0) {
          const Integer h0 = chi + lsq / 2;
          const Integer gr = Integer(r + 1) * (h0 - r - 1);
          if (ed - 2 * gr != Integer(r + 1) * (r + 1) * (2 - chi)) return "half-dimension";
        }
      }
  for (int g = 2; g <= 50; ++g)
    for (int r = 2; r <= 50; ++r)
      if (curve_grassmannian_dim(r, r * g + 1, g) != Integer(r * r - 1) * (g - 1))
        return "curve Grassmannian at g = " + std::to_string(g) + ", r = " + std::to_string(r);
  return "";
}

std::string k3_lagrangian() {
  const SearchBox box{40, 40};
  for (int hsq : {4, 8, 12, 16}) {
    const SurfaceModel model = build_model(KodairaZero{hsq, 2, true, true});
    const PairSet pairs = enumerate_closed(model, box);
    for (const auto& p : pairs.pairs()) {
      const auto [v, rep] = mukai_lagrangian(model, p.r, p.m);
      if (!rep.lagrangian || !*rep.lagrangian)
        return "H^2 = " + std::to_string(hsq) + " " + format_pair(p) + ": not half-dimensional";
      if (p.has(PairFlag::a3_1) && !v.primitive)
        return "H^2 = " + std::to_string(hsq) + " " + format_pair(p) + ": Mukai vector not primitive";
    }
  }
  return "";
}

std::string chern_identity() {
  const Form form = Form::rank_one("H", 4);
  for (int r = 2; r <= 10; ++r)
    for (int a = -5; a <= 5; ++a) {
      const Divisor ell = form.make_class({a});
      const Chern c = kernel_bundle_dual(form, ell, Integer(r));
      if (!(c == Chern{r, ell, self_intersection(form, ell)})) return "r = " + std::to_string(r);
    }
  return "";
}

std::string destabilizer() {
  for (int g = 2; g <= 30; ++g)
    for (int r = 2; r <= 30; ++r)
      for (int s = 1; s < r; ++s)
        if (destabilizer_degree_bound(g, r, s) != Integer(s * g + 1)) return "mismatch";
  return "";
}

}  // namespace

std::vector<CheckResult> run_selfcheck() {
  const std::vector<std::pair<const char*, Probe>> probes = {
      {"general-type A3(2) table vs window, K^2 1..6, box 40x40", gt_tables},
      {"K_S == 0 tables vs window, H^2 4..16, m <= 8", kod0_tables},
      {"closed-form pairs pass the window check", soundness},
      {"T intervals disjoint with gap h", t_disjoint},
      {"raw scan identical sequential vs parallel", determinism},
      {"dimension identities", dimension_identities},
      {"K3 half-dimension and primitivity", k3_lagrangian},
      {"kernel bundle Chern classes (r, l, l^2)", chern_identity},
      {"destabilizer bound equals s g + 1", destabilizer},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, probe] : probes) {
    CheckResult res{name, false, ""};
    try {
      res.detail = probe();
      res.passed = res.detail.empty();
      if (res.passed) res.detail = "ok";
    } catch (const std::exception& e) {
      res.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace moduli
