/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>

#include "zmc/quadrature.hpp"
#include "zmc/vec.hpp"
#include "zmc/weierstrass.hpp"

namespace zmc {

// One-parameter isometry groups of E^3 and L^3, translations and dilations.
//
//   EllipticRotation   R_theta : rotation about (0,0,1), isometry of both metrics
//   HyperbolicRotation H_theta : Lorentz boost fixing (1,0,0)
//   ParabolicRotation  P_theta : Lorentz motion fixing the lightlike (1,0,1)
//   RotationAboutY     G_t     : Euclidean rotation about (0,1,0)
//   Dilation           h_lambda: lambda * Id, lambda > 0 (not an isometry)

enum class IsometryKind {
  EllipticRotation,
  HyperbolicRotation,
  ParabolicRotation,
  RotationAboutY,
  Translation,
  Dilation
};

struct AmbientIsometry {
  Mat3R linear;
  Vec3R translation{0, 0, 0};
  IsometryKind kind = IsometryKind::Translation;
  double param = 0;
};

/// Closed-form matrices; throws InvalidParameter for Dilation with lambda <= 0.
AmbientIsometry make_isometry(IsometryKind kind, double param);
AmbientIsometry make_translation(const Vec3R& v);

/// (A,a) then (B,b) as A*B, A*b + a.
AmbientIsometry compose(const AmbientIsometry& first, const AmbientIsometry& second);

/// Whether the linear part acts by isometries of the given ambient metric
/// (dilations are allowed everywhere, they scale the metric).
bool compatible(IsometryKind kind, Signature sig);

/// Pointwise A x + b; throws SignatureMismatch for incompatible kinds.
SurfacePatch act_on_patch(const AmbientIsometry& iso, const SurfacePatch& patch);

/// Linear part acting componentwise on the curve; translations drop out of
/// derivatives. Throws SignatureMismatch / IsotropyBroken.
IsotropicCurve act_on_curve(const AmbientIsometry& iso, const IsotropicCurve& c);

/// max |A^T J A - J| with J the ambient Gram matrix.
double form_preservation_defect(const Mat3R& a, Signature sig);

const char* isometry_kind_name(IsometryKind k);
IsometryKind isometry_kind_from_name(const std::string& name);

} // namespace zmc
