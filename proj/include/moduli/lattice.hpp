#pragma once

// Intersection theory on the numerical divisor lattice of a surface, and the
// truncated Chern-class ring (rank, c1, c2) used for short exact sequences.
//
// Every type here is templated on an integer scalar. The library itself uses
// moduli::Integer; fixed-width types work as long as nothing overflows.

#include "moduli/error.hpp"
#include "moduli/integer.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace moduli {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Coefficient vector of a divisor class with respect to the basis of an
/// IntersectionForm.
template <class Scalar>
using DivisorClass = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
class IntersectionForm {
  static_assert(std::numeric_limits<Scalar>::is_integer,
                "divisor classes are integral");

 public:
  IntersectionForm(std::vector<std::string> basis_names, Matrix<Scalar> matrix)
      : names_(std::move(basis_names)), matrix_(std::move(matrix)) {
    if (matrix_.rows() < 1 || matrix_.rows() != matrix_.cols())
      throw ModuliError(Errc::dimension_mismatch,
                        "intersection matrix must be square with k >= 1");
    if (static_cast<Eigen::Index>(names_.size()) != matrix_.rows())
      throw ModuliError(Errc::dimension_mismatch,
                        "basis label count does not match the matrix size");
    if (matrix_ != matrix_.transpose())
      throw ModuliError(Errc::dimension_mismatch, "intersection matrix is not symmetric");
  }

  /// Rank-one lattice spanned by a single class with the given self-intersection.
  static IntersectionForm rank_one(std::string name, const Scalar& square) {
    Matrix<Scalar> m(1, 1);
    m(0, 0) = square;
    return IntersectionForm({std::move(name)}, std::move(m));
  }

  Eigen::Index rank() const { return matrix_.rows(); }
  const Matrix<Scalar>& matrix() const { return matrix_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  DivisorClass<Scalar> zero() const { return DivisorClass<Scalar>::Zero(rank()); }

  DivisorClass<Scalar> make_class(std::initializer_list<Scalar> coefficients) const {
    if (static_cast<Eigen::Index>(coefficients.size()) != rank())
      throw ModuliError(Errc::dimension_mismatch, "class length does not match the lattice rank");
    DivisorClass<Scalar> d(rank());
    Eigen::Index i = 0;
    for (const auto& c : coefficients) d(i++) = c;
    return d;
  }

  void check_member(const DivisorClass<Scalar>& d) const {
    if (d.size() != rank()) {
      std::ostringstream os;
      os << "class of length " << d.size() << " used with a rank-" << rank() << " lattice";
      throw ModuliError(Errc::dimension_mismatch, os.str());
    }
  }

  friend bool operator==(const IntersectionForm& a, const IntersectionForm& b) {
    return a.names_ == b.names_ && a.matrix_ == b.matrix_;
  }

 private:
  std::vector<std::string> names_;
  Matrix<Scalar> matrix_;
};

/// d1^T M d2.
template <class Scalar>
Scalar intersect(const IntersectionForm<Scalar>& form, const DivisorClass<Scalar>& d1,
                 const DivisorClass<Scalar>& d2) {
  form.check_member(d1);
  form.check_member(d2);
  return d1.dot(form.matrix() * d2);
}

template <class Scalar>
Scalar self_intersection(const IntersectionForm<Scalar>& form, const DivisorClass<Scalar>& d) {
  return intersect(form, d, d);
}

/// Arithmetic genus 1 + (C^2 + K.C)/2 of a curve in the class `c`.
template <class Scalar>
Scalar adjunction_genus(const IntersectionForm<Scalar>& form, const DivisorClass<Scalar>& c,
                        const DivisorClass<Scalar>& canonical) {
  const Scalar twice = intersect(form, c, c) + intersect(form, canonical, c);
  if (twice % 2 != 0)
    throw ModuliError(Errc::non_curve_class, "non-curve class: C^2 + K.C is odd");
  return 1 + twice / 2;
}

/// Total Chern class of a bundle on a surface, truncated after degree 2.
/// c2 is the multiple of the point class.
template <class Scalar>
struct ChernTotal {
  Scalar rank;
  DivisorClass<Scalar> c1;
  Scalar c2;

  friend bool operator==(const ChernTotal& a, const ChernTotal& b) {
    return a.rank == b.rank && a.c1 == b.c1 && a.c2 == b.c2;
  }
};

template <class Scalar>
ChernTotal<Scalar> trivial_bundle(const IntersectionForm<Scalar>& form, const Scalar& rank) {
  return {rank, form.zero(), Scalar(0)};
}

template <class Scalar>
ChernTotal<Scalar> line_bundle_chern(const IntersectionForm<Scalar>& form,
                                     const DivisorClass<Scalar>& c1) {
  form.check_member(c1);
  return {Scalar(1), c1, Scalar(0)};
}

/// c(A) c(B), i.e. the Chern data of an extension of B by A.
template <class Scalar>
ChernTotal<Scalar> whitney_product(const IntersectionForm<Scalar>& form,
                                   const ChernTotal<Scalar>& a, const ChernTotal<Scalar>& b) {
  return {a.rank + b.rank, a.c1 + b.c1, a.c2 + intersect(form, a.c1, b.c1) + b.c2};
}

/// Chern data of Q in 0 -> sub -> total -> Q -> 0, i.e. c(total)/c(sub) in the
/// truncated ring. Chern classes above the rank must vanish, so a rank-1
/// quotient with nonzero c2 means the sequence cannot exist.
template <class Scalar>
ChernTotal<Scalar> whitney_solve_sub(const IntersectionForm<Scalar>& form,
                                     const ChernTotal<Scalar>& total,
                                     const ChernTotal<Scalar>& sub) {
  form.check_member(total.c1);
  form.check_member(sub.c1);
  if (sub.rank < 1 || !(sub.rank < total.rank))
    throw ModuliError(Errc::invalid_rank,
                      "subbundle rank must satisfy 1 <= rank(sub) < rank(total)");

  // (1 + s1 + s2)(1 + q1 + q2) = 1 + t1 + t2  =>  q1 = t1 - s1, q2 = t2 - s2 - s1.q1
  ChernTotal<Scalar> q;
  q.rank = total.rank - sub.rank;
  q.c1 = total.c1 - sub.c1;
  q.c2 = total.c2 - sub.c2 - intersect(form, sub.c1, q.c1);
  if (q.rank == 1 && q.c2 != 0)
    throw ModuliError(Errc::inconsistent_sequence,
                      "inconsistent sequence: rank-1 quotient would need c2 != 0");
  return q;
}

template <class Scalar>
ChernTotal<Scalar> chern_dual(const ChernTotal<Scalar>& c) {
  return {c.rank, -c.c1, c.c2};
}

/// mu_H = (c1 . H) / rank on a surface.
template <class Scalar>
Rational slope(const IntersectionForm<Scalar>& form, const DivisorClass<Scalar>& c1,
               const Scalar& rank, const DivisorClass<Scalar>& polarization) {
  if (rank <= 0) throw ModuliError(Errc::invalid_rank, "slope of a rank-0 sheaf");
  return Rational(Integer(intersect(form, c1, polarization)), Integer(rank));
}

/// c(E_W) for 0 -> L^* -> O^{r+1} -> E_W -> 0.
template <class Scalar>
ChernTotal<Scalar> kernel_bundle_dual(const IntersectionForm<Scalar>& form,
                                      const DivisorClass<Scalar>& ell, const Scalar& r) {
  return whitney_solve_sub(form, trivial_bundle(form, Scalar(r + 1)),
                           chern_dual(line_bundle_chern(form, ell)));
}

template <class Scalar>
std::string format_class(const IntersectionForm<Scalar>& form, const DivisorClass<Scalar>& d) {
  form.check_member(d);
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (d(i) == 0) continue;
    Scalar c = d(i);
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      os << "-";
      c = -c;
    }
    if (c != 1) os << c;
    os << form.basis_names()[static_cast<std::size_t>(i)];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace moduli
