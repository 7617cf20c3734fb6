// PDIG - Primal-Dual Incremental Gradient solver
// Copyright 2026 PDIG Contributors
// Licensed under Apache 2.0

#ifndef PDIG_CONES_HPP
#define PDIG_CONES_HPP

#include <Eigen/Core>

namespace pdig {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class ConeKind { Zero, Free, Nonneg, SecondOrder };

// One block cone. Zero is {0}^dim, Free is R^dim, Nonneg the nonnegative
// orthant, SecondOrder the cone {(y, t) : ||y|| <= t} with t stored as the
// last coordinate (so dim >= 2).
class ConeSpec {
 public:
  ConeSpec(ConeKind kind, int dim);

  static ConeSpec zero(int dim) { return {ConeKind::Zero, dim}; }
  static ConeSpec free(int dim) { return {ConeKind::Free, dim}; }
  static ConeSpec nonneg(int dim) { return {ConeKind::Nonneg, dim}; }
  static ConeSpec second_order(int dim) { return {ConeKind::SecondOrder, dim}; }

  ConeKind kind() const { return kind_; }
  int dim() const { return dim_; }

  // Dual cone under <u,v> >= 0: Zero<->Free, Nonneg and SecondOrder
  // are self-dual.
  ConeSpec dual() const;

  // Euclidean projection onto the cone.
  Vector project(const Vector& u) const;

  // Euclidean projection onto {z in cone : ||z|| <= radius}. Computed as
  // cone projection followed by radial shrink; exact because the cone is
  // invariant under positive scaling and the ball is origin-centered.
  Vector project_ball_cap(double radius, const Vector& u) const;

  // dist_{-K}(u) = ||u - proj_{-K}(u)||, the infeasibility residual of u
  // against membership in -K.
  double dist_to_minus(const Vector& u) const;

  bool contains(const Vector& u, double tol = 1e-9) const;

  bool operator==(const ConeSpec& o) const {
    return kind_ == o.kind_ && dim_ == o.dim_;
  }

 private:
  ConeKind kind_;
  int dim_;
};

// In-place kernels used by the solver hot path; `out` may alias `u`.
void project_cone_into(ConeKind kind, Eigen::Ref<const Vector> u,
                       Eigen::Ref<Vector> out);
void project_ball_cap_cone_into(ConeKind kind, double radius,
                                Eigen::Ref<const Vector> u,
                                Eigen::Ref<Vector> out);

const char* cone_kind_name(ConeKind kind);

}  // namespace pdig

#endif
