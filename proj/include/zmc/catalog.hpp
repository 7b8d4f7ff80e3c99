/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zmc/bjorling.hpp"
#include "zmc/quadrature.hpp"
#include "zmc/weierstrass.hpp"

namespace zmc {

// Named surfaces: the Euclidean catenoid / helicoid / Enneper surface, the
// three rotational maximal surfaces of L^3 (elliptic, hyperbolic, parabolic
// catenoid), the rotated-catenoid family C_t, the Bonnet maximal and minimal
// families, and the Goursat-deformed families arising from hyperbolic and
// parabolic rotations of the L^3 catenoids.

/// Closed-form parametrization attached to a surface chart.
struct ClosedFormChart {
  std::function<Vec3R(double, double)> X;
  /// Curve of this chart; empty when it coincides with the primary curve.
  std::optional<IsotropicCurve> curve;
  cplx z0{0, 0};
  Vec3R X0{};
  GridSpec grid;
  /// Pinned spacelike/immersed subdomain for curvature checks (step h).
  struct {
    double umin = -0.8, umax = 0.8, vmin = -0.8, vmax = 0.8;
    double h = 0.01;
  } curvature;
};

/// Chart with punctures on which loop integrals detect real periods.
struct PeriodChart {
  IsotropicCurve curve;
  cplx loop_center{0, 0};
  double loop_radius = 1.0;
};

struct Surface {
  std::string name;
  std::string description;
  std::string axis; // rotation axis tag when applicable
  ParamMap params;

  WeierstrassData data;  // primary chart
  IsotropicCurve curve;  // consistent with `data`
  cplx z0{0, 0};
  Vec3R X0{};
  GridSpec default_grid;

  std::optional<ClosedFormChart> closed;
  std::optional<PeriodChart> period;
  std::optional<BjorlingData> bjorling;

  Signature sig() const { return data.sig; }
};

struct CatalogInfo {
  std::string name;
  std::string description;
  ParamMap defaults;
  Signature sig;
  std::string axis;
  bool has_closed_form;
  bool has_period_chart;
};

/// The paper-derived entries (13) plus the convenience `plane`.
std::vector<CatalogInfo> catalog_infos();
std::vector<std::string> catalog_names();

/// Throws UnknownName / ParameterOutOfRange.
Surface build_surface(const std::string& name, const ParamMap& overrides = {});

/// Duality applied to a whole surface description (charts that do not carry
/// over are dropped; the base point maps to the origin).
Surface dual_surface(const Surface& s);

/// Sample the primary chart on its default grid (or an override).
SurfacePatch sample(const Surface& s);
SurfacePatch sample(const Surface& s, const GridSpec& grid);

/// Patch of the closed-form chart (throws InvalidParameter when absent).
SurfacePatch closed_patch(const Surface& s);
SurfacePatch closed_patch(const Surface& s, const GridSpec& grid);

/// Normalized Bonnet-family Weierstrass data
/// g = (cos(t/2) e^z - sin(t/2)) / (sin(t/2) e^z + cos(t/2)),
/// f = (sin(t/2) e^z + cos(t/2))^2 e^{-z}; related to the primary
/// bonnet_maximal chart by z -> -i z followed by (x,y,z) -> (-y,x,-z).
WeierstrassData bonnet_maximal_normalized_data(double t);

} // namespace zmc
