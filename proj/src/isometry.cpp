/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "zmc/isometry.hpp"

#include <cmath>

#include "zmc/error.hpp"

namespace zmc {

AmbientIsometry make_isometry(IsometryKind kind, double p) {
  AmbientIsometry iso;
  iso.kind = kind;
  iso.param = p;
  Mat3R& m = iso.linear;
  switch (kind) {
    case IsometryKind::EllipticRotation:
      m.m = {std::cos(p), -std::sin(p), 0, std::sin(p), std::cos(p), 0, 0, 0, 1};
      break;
    case IsometryKind::HyperbolicRotation:
      m.m = {1, 0, 0, 0, std::cosh(p), std::sinh(p), 0, std::sinh(p), std::cosh(p)};
      break;
    case IsometryKind::ParabolicRotation:
      m.m = {1 - p * p / 2, p, p * p / 2, -p, 1, p, -p * p / 2, p, 1 + p * p / 2};
      break;
    case IsometryKind::RotationAboutY:
      m.m = {std::cos(p), 0, std::sin(p), 0, 1, 0, -std::sin(p), 0, std::cos(p)};
      break;
    case IsometryKind::Dilation:
      if (p <= 0) fail(Errc::InvalidParameter, "dilation ratio must be positive");
      m.m = {p, 0, 0, 0, p, 0, 0, 0, p};
      break;
    case IsometryKind::Translation:
      fail(Errc::InvalidParameter, "use make_translation for translations");
  }
  return iso;
}

AmbientIsometry make_translation(const Vec3R& v) {
  AmbientIsometry iso;
  iso.kind = IsometryKind::Translation;
  iso.translation = v;
  return iso;
}

AmbientIsometry compose(const AmbientIsometry& first, const AmbientIsometry& second) {
  AmbientIsometry out;
  out.kind = first.kind; // composite keeps the left factor's tag
  out.param = first.param;
  out.linear = first.linear.mul(second.linear);
  out.translation = first.linear.apply(second.translation) + first.translation;
  return out;
}

bool compatible(IsometryKind kind, Signature sig) {
  switch (kind) {
    case IsometryKind::EllipticRotation:
    case IsometryKind::Translation:
    case IsometryKind::Dilation:
      return true; // rotations about (0,0,1) preserve both metrics
    case IsometryKind::HyperbolicRotation:
    case IsometryKind::ParabolicRotation:
      return sig == Signature::Lorentzian;
    case IsometryKind::RotationAboutY:
      return sig == Signature::Euclidean;
  }
  return false;
}

double form_preservation_defect(const Mat3R& a, Signature sig) {
  double J[3] = {1, 1, eps(sig)};
  double worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += a(k, i) * J[k] * a(k, j);
      double target = (i == j) ? J[i] : 0.0;
      worst = std::max(worst, std::abs(s - target));
    }
  return worst;
}

SurfacePatch act_on_patch(const AmbientIsometry& iso, const SurfacePatch& patch) {
  if (!compatible(iso.kind, patch.sig))
    fail(Errc::SignatureMismatch, std::string(isometry_kind_name(iso.kind)) +
                                      " does not act on " + signature_name(patch.sig) +
                                      " patches");
  SurfacePatch out = patch;
  for (auto& p : out.points) p = iso.linear.apply(p) + iso.translation;
  out.X0 = iso.linear.apply(patch.X0) + iso.translation;
  return out;
}

IsotropicCurve act_on_curve(const AmbientIsometry& iso, const IsotropicCurve& c) {
  if (!compatible(iso.kind, c.sig))
    fail(Errc::SignatureMismatch, std::string(isometry_kind_name(iso.kind)) +
                                      " does not act on " + signature_name(c.sig) + " curves");
  if (iso.kind != IsometryKind::Dilation) {
    double defect = form_preservation_defect(iso.linear, c.sig);
    if (defect > 1e-12)
      fail(Errc::SignatureMismatch, "linear part does not preserve the ambient form");
  }
  // Translations drop out of derivatives.
  return apply_linear(Mat3C::from_real(iso.linear), c);
}

const char* isometry_kind_name(IsometryKind k) {
  switch (k) {
    case IsometryKind::EllipticRotation: return "elliptic-rotation";
    case IsometryKind::HyperbolicRotation: return "hyperbolic-rotation";
    case IsometryKind::ParabolicRotation: return "parabolic-rotation";
    case IsometryKind::RotationAboutY: return "rotation-about-y";
    case IsometryKind::Translation: return "translation";
    case IsometryKind::Dilation: return "dilation";
  }
  return "unknown";
}

IsometryKind isometry_kind_from_name(const std::string& name) {
  if (name == "elliptic-rotation" || name == "R") return IsometryKind::EllipticRotation;
  if (name == "hyperbolic-rotation" || name == "H") return IsometryKind::HyperbolicRotation;
  if (name == "parabolic-rotation" || name == "P") return IsometryKind::ParabolicRotation;
  if (name == "rotation-about-y" || name == "G") return IsometryKind::RotationAboutY;
  if (name == "translation") return IsometryKind::Translation;
  if (name == "dilation") return IsometryKind::Dilation;
  fail(Errc::UnknownName, "unknown isometry kind '" + name + "'");
}

} // namespace zmc
