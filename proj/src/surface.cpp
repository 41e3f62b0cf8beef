#include "moduli/surface.hpp"

#include "moduli/error.hpp"

#include <sstream>

namespace moduli {

namespace {

[[noreturn]] void reject(const std::string& why) {
  throw ModuliError(Errc::invalid_family, why);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_chi(const std::optional<Integer>& chi) {
  if (chi && *chi < 1) reject("chi(O_S) >= 1 for a minimal surface of general type");
}

SurfaceModel general_type(const SurfaceFamily& family, const Integer& ksq,
                          const std::optional<Integer>& chi, const Integer& h_multiple) {
  Form form = Form::rank_one("K", ksq);
  SurfaceModel model{family,
                     form,
                     form.make_class({1}),
                     form.make_class({h_multiple}),
                     form.make_class({1}),
                     {"K_S ample (S is its own canonical model)"},
                     chi,
                     false,
                     false,
                     Integer(3)};
  return model;
}

SurfaceModel make(const GeneralTypeCanonical& f, const SurfaceFamily& family) {
  if (f.ksq < 1) reject("K_S^2 >= 1 for a surface of general type");
  check_chi(f.chi);
  auto model = general_type(family, f.ksq, f.chi, 1);
  model.assumed_hypotheses.emplace_back(kSmoothCanonicalCurve);
  return model;
}

SurfaceModel make(const GeneralTypeBicanonical& f, const SurfaceFamily& family) {
  if (f.ksq < 6 || f.ksq % 2 != 0)
    reject("bicanonical polarization needs K_S^2 >= 6 with K_S^2 even");
  check_chi(f.chi);
  auto model = general_type(family, f.ksq, f.chi, 2);
  model.assumed_hypotheses.emplace_back(
      "bicanonical map is a morphism (K_S^2 >= 5), so a general curve in |2K_S| is smooth "
      "irreducible");
  return model;
}

SurfaceModel make(const KodairaZero& f, const SurfaceFamily& family) {
  if (f.hsq < 4 || f.hsq % 2 != 0) reject("H^2 must be even and >= 4 when K_S is numerically trivial");
  if (f.k3) {
    if (f.chi != 2) reject("a K3 surface has chi(O_S) = 2");
    if (!f.trivial_canonical) reject("a K3 surface has trivial canonical bundle");
  } else {
    if (f.hsq < 10) reject("a very ample H on a non-K3 surface with K_S == 0 has H^2 >= 10");
    if (f.chi == 2 || f.chi < 0 || f.chi > 2)
      reject("chi(O_S) in {0, 1} when K_S == 0 and S is not K3");
    if (f.trivial_canonical && f.chi != 0)
      reject("trivial canonical bundle and not K3 means abelian, so chi(O_S) = 0");
  }
  Form form = Form::rank_one("H", f.hsq);
  SurfaceModel model{family,
                     form,
                     form.zero(),
                     form.make_class({1}),
                     form.make_class({1}),
                     {"H very ample", "K_S numerically trivial"},
                     f.chi,
                     f.trivial_canonical,
                     f.k3,
                     Integer(2)};
  return model;
}

SurfaceModel make(const DelPezzo& f, const SurfaceFamily& family) {
  if (f.degree < 1 || f.degree > 9) reject("del Pezzo degree e = K_S^2 must lie in [1, 9]");
  Form form = Form::rank_one("K", f.degree);
  SurfaceModel model{family,
                     form,
                     form.make_class({1}),
                     form.make_class({-3}),
                     form.make_class({-1}),
                     {"-3K_S very ample (general curve in |-3K_S| smooth irreducible)"},
                     Integer(1),
                     false,
                     false,
                     Integer(2)};
  return model;
}

SurfaceModel make(const EllipticProduct& f, const SurfaceFamily& family) {
  if (f.fiber_genus < 2) reject("g(F) >= 2 for the product E x F");
  Matrix<Integer> m(2, 2);
  m << 0, 1, 1, 0;
  Form form({"A", "B"}, m);
  const Integer kf = 2 * f.fiber_genus - 2;
  SurfaceModel model{family,
                     form,
                     form.make_class({0, kf}),
                     form.make_class({2, kf}),
                     form.make_class({2, kf}),
                     {"H = 2(p x F) + E x K_F globally generated and ample"},
                     Integer(0),
                     false,
                     false,
                     Integer(3)};
  return model;
}

SurfaceModel make(const IsogenousProduct& f, const SurfaceFamily& family) {
  if (f.fiber_genus < 2) reject("g(F) >= 2 for a surface isogenous to E x F");
  if (f.group_order < 2) reject("|G| >= 2 for a surface isogenous to E x F");
  const Integer kf = 2 * f.fiber_genus - 2;
  if (!divides(f.group_order, kf)) {
    std::ostringstream os;
    os << "|G| = " << f.group_order << " does not divide 2g - 2 = " << kf
       << ", so K_S = ((2g-2)/|G|) F2 is not integral";
    reject(os.str());
  }
  Matrix<Integer> m(2, 2);
  m << 0, f.group_order, f.group_order, 0;
  Form form({"F1", "F2"}, m);
  SurfaceModel model{family,
                     form,
                     form.make_class({0, kf / f.group_order}),
                     form.make_class({1, 2}),
                     form.make_class({1, 2}),
                     {"diagonal G-action on E x F is free, E/G = P^1, F/G elliptic"},
                     Integer(0),
                     false,
                     false,
                     1 + ceil_div(f.fiber_genus - 1, f.group_order)};
  return model;
}

}  // namespace

std::string family_tag(const SurfaceFamily& family) {
  return std::visit(overloaded{
                        [](const GeneralTypeCanonical&) { return "gt-canonical"; },
                        [](const GeneralTypeBicanonical&) { return "gt-bicanonical"; },
                        [](const KodairaZero&) { return "kod0"; },
                        [](const DelPezzo&) { return "delpezzo"; },
                        [](const EllipticProduct&) { return "elliptic-product"; },
                        [](const IsogenousProduct&) { return "isogenous"; },
                    },
                    family);
}

SurfaceModel build_model(const SurfaceFamily& family) {
  SurfaceModel model = std::visit([&](const auto& f) { return make(f, family); }, family);
  if (self_intersection(model.form, model.polarization) <= 0)
    reject("polarization must have positive self-intersection");
  return model;
}

Integer curve_genus(const SurfaceModel& model) {
  return adjunction_genus(model.form, model.polarization, model.canonical);
}

Divisor line_bundle(const SurfaceModel& model, const Integer& m) {
  if (m < 1) throw ModuliError(Errc::out_of_range, "L = mH needs m >= 1");
  return Divisor(m * model.line_generator);
}

Integer restricted_degree(const SurfaceModel& model, const Integer& m) {
  return intersect(model.form, line_bundle(model, m), model.polarization);
}

Integer h0_of_L(const SurfaceModel& model, const Integer& m) {
  if (m < model.h0_threshold) {
    std::ostringstream os;
    os << "h0 formula not justified: vanishing for this family needs m >= "
       << model.h0_threshold << ", got m = " << m;
    throw ModuliError(Errc::h0_not_justified, os.str());
  }
  if (!model.chi)
    throw ModuliError(Errc::chi_unknown, "h0 needs chi(O_S), which was not supplied");
  const Divisor L = line_bundle(model, m);
  const Integer twice = self_intersection(model.form, L) - intersect(model.form, L, model.canonical);
  return *model.chi + twice / 2;
}

Integer h0_restricted(const Integer& d, const Integer& g) {
  if (d < 2 * g + 1) {
    std::ostringstream os;
    os << "Riemann-Roch vanishing not justified: d = " << d << " < 2g + 1 = " << 2 * g + 1;
    throw ModuliError(Errc::vanishing_not_justified, os.str());
  }
  return d + 1 - g;
}

}  // namespace moduli
