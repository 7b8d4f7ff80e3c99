/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>

#include "zmc/expr.hpp"
#include "zmc/weierstrass.hpp"

namespace zmc {

// Bjorling problem: recover the zero-mean-curvature surface containing an
// analytic core curve alpha with prescribed analytic unit normal field V.
// For the Lorentzian ambient the surface is spacelike and V timelike.

struct BjorlingData {
  std::array<Expr, 3> alpha; // holomorphic extension of the core curve
  std::array<Expr, 3> V;     // extended normal field
  Signature sig = Signature::Euclidean;
  cplx z0{0, 0};
  ParamMap params;
};

/// Check <V,V>_eps = eps and <V, alpha'>_eps = 0 at sample real points
/// (tolerance 1e-9); throws IsotropyBroken on failure.
void validate_bjorling(const BjorlingData& d);

/// The solution's isotropic curve alpha' - i eps V x alpha'. Validates the
/// input invariants first. The surface X = Re alpha(z0) + Re integral contains
/// the core curve as the parameter line v = 0.
IsotropicCurve bjorling_isotropic(const BjorlingData& d);

/// Re alpha(z0): the base point the integrated surface interpolates.
Vec3R bjorling_base_point(const BjorlingData& d);

} // namespace zmc
