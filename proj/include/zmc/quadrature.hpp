/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "zmc/vec.hpp"
#include "zmc/weierstrass.hpp"

namespace zmc {

// Contour integration of isotropic curves, surface sampling, real periods
// with an independent residue oracle, and finite-difference curvature checks.

struct LineSegment {
  cplx a, b;
};

struct ArcSegment {
  cplx center;
  double radius = 0;
  double angle0 = 0, angle1 = 0; // radians; angle1 > angle0 means CCW
};

struct Path {
  std::vector<std::variant<LineSegment, ArcSegment>> segments;

  static Path line(cplx a, cplx b);
  static Path circle(cplx center, double radius); // one full CCW turn

  cplx start() const;
  cplx end() const;
  bool closed(double tol = 1e-12) const;
};

/// Minimum clearance of the path from each puncture; throws
/// PathThroughPuncture below `clearance` (default 1e-3).
void check_clearance(const Path& p, const std::vector<cplx>& punctures,
                     double clearance = 1e-3);

struct GridSpec {
  double umin = -1.2, umax = 1.2;
  int nu = 49;
  double vmin = -1.2, vmax = 1.2;
  int nv = 49;

  double du() const { return nu > 1 ? (umax - umin) / (nu - 1) : 0.0; }
  double dv() const { return nv > 1 ? (vmax - vmin) / (nv - 1) : 0.0; }
};

enum class Provenance { Integrated, ClosedForm };

struct SurfacePatch {
  std::vector<double> us, vs;
  std::vector<Vec3R> points; // row-major: index = j * nu + i  (i over u)
  Signature sig = Signature::Euclidean;
  cplx z0{};
  Vec3R X0{};
  Provenance provenance = Provenance::Integrated;

  int nu() const { return static_cast<int>(us.size()); }
  int nv() const { return static_cast<int>(vs.size()); }
  const Vec3R& at(int i, int j) const { return points[static_cast<size_t>(j) * us.size() + i]; }
  Vec3R& at(int i, int j) { return points[static_cast<size_t>(j) * us.size() + i]; }
};

/// Complex line integral of the curve along the path (before taking Re).
/// Adaptive composite Gauss-Legendre (order 16, bisection depth 20,
/// per-segment tolerance 1e-12). Deterministic for a fixed path.
Vec3C integrate(const IsotropicCurve& c, const Path& p);

/// Scalar version for single expressions.
cplx integrate_expr(const Expr& e, const ParamMap& params, const Path& p,
                    const std::vector<cplx>& punctures = {});

/// Canonical puncture-avoiding path from `from` to `to`: straight where
/// possible, otherwise deflected by a CCW arc of radius 1e-2 around the
/// offending puncture.
Path canonical_path(cplx from, cplx to, const std::vector<cplx>& punctures);

/// X(node) = X0 + Re integral from z0 along canonical paths. After filling the
/// grid, five deterministic nodes are re-derived through an independent
/// canonical path and must agree to 1e-9.
SurfacePatch sample_patch(const IsotropicCurve& c, cplx z0, const Vec3R& X0,
                          const GridSpec& grid);

/// Patch from a closed-form parametrization.
SurfacePatch closed_form_patch(const std::function<Vec3R(double, double)>& X, Signature sig,
                               const GridSpec& grid);

/// Re of the componentwise loop integral; the loop must be closed.
Vec3R real_period(const IsotropicCurve& c, const Path& loop);

/// Residue by trapezoidal quadrature on two circles (radii 0.5 and 0.25 by
/// default, shrunk to clear other punctures) with agreement <= 1e-9; throws
/// NotIsolatedPole on disagreement (branch points and the like).
cplx residue_oracle(const Expr& e, cplx pole, const ParamMap& params = {},
                    const std::vector<cplx>& other_punctures = {});

/// Max |H| over interior nodes via second-order central differences with
/// signature-aware fundamental forms. For Lorentzian patches every tested
/// node must be spacelike; throws DegenerateFirstForm otherwise.
double mean_curvature_fd(const SurfacePatch& patch);

/// K = -(4 |g'| / (|f| (1+|g|^2)^2))^2 at a point (Euclidean data).
double gauss_curvature(const WeierstrassData& w, cplx z);

/// Integral of K dA over the disk |z| < R for Euclidean data, by adaptive
/// polar quadrature of the pulled-back spherical density -4|g'|^2/(1+|g|^2)^2.
double total_curvature(const WeierstrassData& w, double R);

} // namespace zmc
