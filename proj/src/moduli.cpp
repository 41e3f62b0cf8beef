#include "moduli/moduli.hpp"

#include "moduli/error.hpp"

#include <sstream>
#include <stdexcept>

namespace moduli {

Integer grassmannian_dim(const Integer& r, const Integer& h0) {
  if (h0 < r + 1) {
    std::ostringstream os;
    os << "empty Grassmannian: h0 = " << h0 << " < r + 1 = " << r + 1;
    throw ModuliError(Errc::empty_grassmannian, os.str());
  }
  return (r + 1) * (h0 - r - 1);
}

Integer curve_grassmannian_dim(const Integer& r, const Integer& d, const Integer& g) {
  if (d - g - r < 0) {
    std::ostringstream os;
    os << "empty Grassmannian on C: d - g - r = " << d - g - r << " < 0";
    throw ModuliError(Errc::empty_grassmannian, os.str());
  }
  return (r + 1) * (d - g - r);
}

Integer expected_moduli_dim(const Integer& r, const Integer& lsq, const Integer& c2,
                            const Integer& chi) {
  return 2 * r * c2 - (r - 1) * lsq - (r * r - 1) * chi;
}

Integer discriminant(const Integer& r, const Integer& lsq, const Integer& c2) {
  return 2 * r * c2 - (r - 1) * lsq;
}

MukaiVector mukai_vector(const Integer& r, const Integer& m, const Integer& hsq) {
  const Integer lsq = m * m * hsq;
  if (lsq % 2 != 0) throw ModuliError(Errc::non_curve_class, "L^2 must be even on a K3");
  MukaiVector v;
  v.r = r;
  v.m = m;
  v.s = r - lsq / 2;
  v.primitive = gcd(gcd(r, m), v.s) == 1;
  v.coprime_rm = gcd(r, m) == 1;
  return v;
}

DimensionReport compute_dimensions(const SurfaceModel& model, const Integer& m, const Integer& r) {
  if (r < 1) throw ModuliError(Errc::invalid_rank, "r >= 1");
  DimensionReport rep;
  rep.r = r;
  rep.m = m;
  rep.assumed_hypotheses = model.assumed_hypotheses;
  rep.genus = curve_genus(model);
  rep.d = restricted_degree(model, m);
  const Divisor L = line_bundle(model, m);
  rep.lsq = self_intersection(model.form, L);

  const Chern e = kernel_bundle_dual(model.form, L, r);
  rep.c2 = e.c2;
  rep.discriminant = discriminant(r, rep.lsq, rep.c2);

  try {
    rep.dim_curve_grassmannian = curve_grassmannian_dim(r, rep.d, rep.genus);
  } catch (const ModuliError& err) {
    rep.warnings.emplace_back(err.what());
  }

  if (!model.chi) {
    rep.warnings.emplace_back("chi(O_S) not supplied: h0(L), dim Gr and expected dimension omitted");
  } else {
    rep.expected_dim_moduli = expected_moduli_dim(r, rep.lsq, rep.c2, *model.chi);
    try {
      rep.h0_L = h0_of_L(model, m);
      rep.dim_grassmannian = grassmannian_dim(r, *rep.h0_L);
    } catch (const ModuliError& err) {
      rep.warnings.emplace_back(err.what());
    }
  }

  if (model.k3) {
    rep.mukai = mukai_vector(r, m, self_intersection(model.form, model.polarization));
    rep.lagrangian = rep.dim_grassmannian && rep.expected_dim_moduli &&
                     2 * *rep.dim_grassmannian == *rep.expected_dim_moduli;
    rep.assumed_hypotheses.emplace_back("Pic(S) = Z H and H generic for v (smooth moduli)");
  }
  return rep;
}

std::pair<MukaiVector, DimensionReport> mukai_lagrangian(const SurfaceModel& model,
                                                         const Integer& r, const Integer& m) {
  if (!model.k3) throw ModuliError(Errc::not_k3, "Mukai vector and Lagrangian test need a K3");
  DimensionReport rep = compute_dimensions(model, m, r);
  return {*rep.mukai, rep};
}

Integer destabilizer_degree_bound(const Integer& g, const Integer& r, const Integer& s) {
  if (g < 2) throw ModuliError(Errc::out_of_range, "g >= 2");
  if (s < 1 || s > r - 1) {
    std::ostringstream os;
    os << "subsheaf rank s = " << s << " outside [1, r-1] with r = " << r;
    throw ModuliError(Errc::out_of_range, os.str());
  }
  const Integer bound = ceil_div(s * (r * g + 1), r);
  if (bound != s * g + 1) throw std::logic_error("destabilizer bound differs from s g + 1");
  // The kernel has degree -bound; being at most -(rg+1) would force s >= r.
  if (-bound <= -(r * g + 1)) throw std::logic_error("kernel degree comparison did not fail");
  return bound;
}

}  // namespace moduli
