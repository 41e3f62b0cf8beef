#pragma once

#include "moduli/admissibility.hpp"
#include "moduli/integer.hpp"
#include "moduli/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace moduli {

/// dim Gr(r+1, H^0(L)) = (r+1)(h0 - r - 1). Throws empty_grassmannian when h0 < r+1.
Integer grassmannian_dim(const Integer& r, const Integer& h0);

/// dim Gr(r+1, H^0(L|_C)) = (r+1)(d - g - r); equals (r^2-1)(g-1) at d = rg+1.
Integer curve_grassmannian_dim(const Integer& r, const Integer& d, const Integer& g);

/// 2 r c2 - (r-1) L^2 - (r^2-1) chi.
Integer expected_moduli_dim(const Integer& r, const Integer& lsq, const Integer& c2,
                            const Integer& chi);

/// Bogomolov discriminant 2 r c2 - (r-1) L^2.
Integer discriminant(const Integer& r, const Integer& lsq, const Integer& c2);

/// v = (r, mH, r - L^2/2) on a K3 with Pic generated by H.
struct MukaiVector {
  Integer r;
  Integer m;
  Integer s;
  /// gcd(r, m, s) == 1.
  bool primitive = false;
  /// gcd(r, m) == 1, the sufficient criterion.
  bool coprime_rm = false;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

MukaiVector mukai_vector(const Integer& r, const Integer& m, const Integer& hsq);

struct DimensionReport {
  Integer r;
  Integer m;
  Integer d;
  Integer genus;
  Integer lsq;
  /// c2(E_W) = L^2 from the kernel-bundle sequence.
  Integer c2;
  Integer discriminant;
  std::optional<Integer> dim_curve_grassmannian;
  std::optional<Integer> h0_L;
  std::optional<Integer> dim_grassmannian;
  std::optional<Integer> expected_dim_moduli;
  std::optional<MukaiVector> mukai;
  /// Only set for K3 models.
  std::optional<bool> lagrangian;
  std::vector<std::string> assumed_hypotheses;
  std::vector<std::string> warnings;

  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

/// Fills every field that the model's data supports. Missing chi leaves the
/// chi-dependent fields empty with a warning; it never substitutes a default.
DimensionReport compute_dimensions(const SurfaceModel& model, const Integer& m, const Integer& r);

/// K3 only; throws not_k3 otherwise.
std::pair<MukaiVector, DimensionReport> mukai_lagrangian(const SurfaceModel& model,
                                                         const Integer& r, const Integer& m);

/// ceil(s (rg+1) / r): least degree of a rank-s subsheaf of slope >= (rg+1)/r
/// on C. Requires g >= 2, 1 <= s <= r-1. Always equals s g + 1.
Integer destabilizer_degree_bound(const Integer& g, const Integer& r, const Integer& s);

}  // namespace moduli
