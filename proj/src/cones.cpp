// PDIG - Primal-Dual Incremental Gradient solver
// Copyright 2026 PDIG Contributors
// Licensed under Apache 2.0

#include "pdig/cones.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdig/errors.hpp"

namespace pdig {

namespace {

void check_dim(const ConeSpec& c, const Vector& u, const char* op) {
  if (u.size() != c.dim()) {
    throw ContractViolation(std::string(op) + ": vector length " +
                            std::to_string(u.size()) + " does not match cone dim " +
                            std::to_string(c.dim()));
  }
}

}  // namespace

ConeSpec::ConeSpec(ConeKind kind, int dim) : kind_(kind), dim_(dim) {
  if (dim < 1) throw ContractViolation("ConeSpec: dim must be >= 1");
  if (kind == ConeKind::SecondOrder && dim < 2)
    throw ContractViolation("ConeSpec: SecondOrder needs dim >= 2");
}

ConeSpec ConeSpec::dual() const {
  switch (kind_) {
    case ConeKind::Zero:
      return ConeSpec(ConeKind::Free, dim_);
    case ConeKind::Free:
      return ConeSpec(ConeKind::Zero, dim_);
    case ConeKind::Nonneg:
    case ConeKind::SecondOrder:
      return *this;
  }
  throw ContractViolation("ConeSpec: unknown kind");
}

void project_cone_into(ConeKind kind, Eigen::Ref<const Vector> u,
                       Eigen::Ref<Vector> out) {
  switch (kind) {
    case ConeKind::Zero:
      out.setZero();
      return;
    case ConeKind::Free:
      out = u;
      return;
    case ConeKind::Nonneg:
      out = u.cwiseMax(0.0);
      return;
    case ConeKind::SecondOrder: {
      // (y, t) with t the last coordinate. Branches overlap at ||y|| = |t|
      // where they agree, so non-strict comparisons are safe.
      const Eigen::Index q = u.size() - 1;
      const double t = u[q];
      const double ynorm = u.head(q).norm();
      if (ynorm <= t) {
        out = u;
      } else if (ynorm <= -t) {
        out.setZero();
      } else {
        const double s = 0.5 * (ynorm + t);  // > 0 here, and ynorm > 0
        out.head(q) = (s / ynorm) * u.head(q);
        out[q] = s;
      }
      return;
    }
  }
  throw ContractViolation("project_cone: unknown kind");
}

void project_ball_cap_cone_into(ConeKind kind, double radius,
                                Eigen::Ref<const Vector> u,
                                Eigen::Ref<Vector> out) {
  if (!(radius > 0.0))
    throw ContractViolation("project_ball_cap: radius must be > 0");
  project_cone_into(kind, u, out);
  const double norm = out.norm();
  if (norm > radius) out *= radius / norm;
}

Vector ConeSpec::project(const Vector& u) const {
  check_dim(*this, u, "project_cone");
  Vector out(dim_);
  project_cone_into(kind_, u, out);
  return out;
}

Vector ConeSpec::project_ball_cap(double radius, const Vector& u) const {
  check_dim(*this, u, "project_ball_cap");
  Vector out(dim_);
  project_ball_cap_cone_into(kind_, radius, u, out);
  return out;
}

double ConeSpec::dist_to_minus(const Vector& u) const {
  check_dim(*this, u, "dist_to_minus");
  // proj_{-K}(u) = -proj_K(-u)
  Vector p = project(-u);
  p = -p;
  return (u - p).norm();
}

bool ConeSpec::contains(const Vector& u, double tol) const {
  check_dim(*this, u, "contains");
  return (u - project(u)).norm() <= tol;
}

const char* cone_kind_name(ConeKind kind) {
  switch (kind) {
    case ConeKind::Zero:
      return "zero";
    case ConeKind::Free:
      return "free";
    case ConeKind::Nonneg:
      return "nonneg";
    case ConeKind::SecondOrder:
      return "second_order";
  }
  return "unknown";
}

}  // namespace pdig
