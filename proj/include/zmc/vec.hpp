/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace zmc {

using cplx = std::complex<double>;

/// Ambient metric tag: dx^2 + dy^2 + eps*dz^2.
enum class Signature : int { Euclidean = 1, Lorentzian = -1 };

inline double eps(Signature s) { return static_cast<double>(static_cast<int>(s)); }
inline Signature flip(Signature s) {
  return s == Signature::Euclidean ? Signature::Lorentzian : Signature::Euclidean;
}
inline const char* signature_name(Signature s) {
  return s == Signature::Euclidean ? "euclidean" : "lorentzian";
}

struct Vec3R {
  double x = 0, y = 0, z = 0;

  Vec3R operator+(const Vec3R& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3R operator-(const Vec3R& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3R operator*(double s) const { return {x * s, y * s, z * s}; }
};

struct Vec3C {
  cplx x{}, y{}, z{};

  Vec3C operator+(const Vec3C& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3C operator-(const Vec3C& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3C operator*(cplx s) const { return {x * s, y * s, z * s}; }

  Vec3R real() const { return {x.real(), y.real(), z.real()}; }
};

/// Bilinear (not Hermitian) pairing u1 v1 + u2 v2 + eps u3 v3.
inline cplx inner(const Vec3C& u, const Vec3C& v, Signature s) {
  return u.x * v.x + u.y * v.y + eps(s) * u.z * v.z;
}

inline double inner(const Vec3R& u, const Vec3R& v, Signature s) {
  return u.x * v.x + u.y * v.y + eps(s) * u.z * v.z;
}

/// The unique w with <w, e_k>_eps = det(u, v, e_k); for eps=-1 the third
/// component picks up a sign relative to standard Euclidean cross.
inline Vec3C cross(const Vec3C& u, const Vec3C& v, Signature s) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, eps(s) * (u.x * v.y - u.y * v.x)};
}

inline Vec3R cross(const Vec3R& u, const Vec3R& v, Signature s) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, eps(s) * (u.x * v.y - u.y * v.x)};
}

inline double norm_inf(const Vec3R& v) {
  return std::max(std::abs(v.x), std::max(std::abs(v.y), std::abs(v.z)));
}

inline double norm2(const Vec3R& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

/// Hermitian squared magnitude with signature weight: |u1|^2 + |u2|^2 + eps |u3|^2.
inline double sig_norm2(const Vec3C& u, Signature s) {
  return std::norm(u.x) + std::norm(u.y) + eps(s) * std::norm(u.z);
}

struct Mat3R {
  // Row-major.
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  double operator()(int r, int c) const { return m[3 * r + c]; }
  double& operator()(int r, int c) { return m[3 * r + c]; }

  Vec3R apply(const Vec3R& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }
  Mat3R mul(const Mat3R& o) const {
    Mat3R r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }
};

struct Mat3C {
  std::array<cplx, 9> m{cplx(1), cplx(0), cplx(0), cplx(0), cplx(1),
                        cplx(0), cplx(0), cplx(0), cplx(1)};

  cplx operator()(int r, int c) const { return m[3 * r + c]; }
  cplx& operator()(int r, int c) { return m[3 * r + c]; }

  Vec3C apply(const Vec3C& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }
  static Mat3C diag(cplx a, cplx b, cplx c) {
    Mat3C r;
    r.m = {a, cplx(0), cplx(0), cplx(0), b, cplx(0), cplx(0), cplx(0), c};
    return r;
  }
  static Mat3C from_real(const Mat3R& a) {
    Mat3C r;
    for (int i = 0; i < 9; ++i) r.m[i] = a.m[i];
    return r;
  }
};

} // namespace zmc
