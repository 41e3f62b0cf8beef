#pragma once

#include "moduli/integer.hpp"
#include "moduli/lattice.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace moduli {

using Form = IntersectionForm<Integer>;
using Divisor = DivisorClass<Integer>;
using Chern = ChernTotal<Integer>;

/// Minimal surface of general type with K_S ample, H = K_S, L = mK_S.
struct GeneralTypeCanonical {
  Integer ksq;
  std::optional<Integer> chi;
};

/// Same surfaces polarized by H = 2K_S, L = mK_S. Requires K_S^2 even and >= 6.
struct GeneralTypeBicanonical {
  Integer ksq;
  std::optional<Integer> chi;
};

/// K_S numerically trivial, H very ample, L = mH.
struct KodairaZero {
  Integer hsq;
  Integer chi = 2;
  bool k3 = true;
  bool trivial_canonical = true;
};

/// del Pezzo of degree e = K_S^2, H = -3K_S, L = -mK_S.
struct DelPezzo {
  Integer degree;
};

/// E x F with g(F) = g, H = 2(p x F) + E x K_F, L = mH.
struct EllipticProduct {
  Integer fiber_genus;
};

/// (E x F)/G isogenous to a product, H = F1 + 2F2, L = mH.
struct IsogenousProduct {
  Integer fiber_genus;
  Integer group_order;
};

using SurfaceFamily = std::variant<GeneralTypeCanonical, GeneralTypeBicanonical, KodairaZero,
                                   DelPezzo, EllipticProduct, IsogenousProduct>;

/// Stable short name used by the CLI and descriptor files.
std::string family_tag(const SurfaceFamily& family);

struct SurfaceModel {
  SurfaceFamily family;
  Form form;
  Divisor canonical;
  Divisor polarization;
  /// L = m * line_generator.
  Divisor line_generator;
  std::vector<std::string> assumed_hypotheses;
  /// chi(O_S); absent when the user did not supply it for a general-type family.
  std::optional<Integer> chi;
  bool trivial_canonical = false;
  bool k3 = false;
  /// Smallest m for which h^0(L) = chi(L) is justified by vanishing.
  Integer h0_threshold;
};

inline constexpr const char* kSmoothCanonicalCurve = "smooth irreducible canonical curve exists";

/// Throws ModuliError(invalid_family) naming the violated hypothesis.
SurfaceModel build_model(const SurfaceFamily& family);

/// Genus of a smooth curve C in |H|, by adjunction on the lattice.
Integer curve_genus(const SurfaceModel& model);

Divisor line_bundle(const SurfaceModel& model, const Integer& m);

/// d = L.C with C in |H|.
Integer restricted_degree(const SurfaceModel& model, const Integer& m);

/// h^0(L) = chi(O_S) + L.(L - K)/2, valid from model.h0_threshold on.
Integer h0_of_L(const SurfaceModel& model, const Integer& m);

/// h^0(L|_C) = d + 1 - g, valid when d >= 2g + 1.
Integer h0_restricted(const Integer& d, const Integer& g);

}  // namespace moduli
