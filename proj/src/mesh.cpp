/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "zmc/mesh.hpp"

#include <cstdio>
#include <sstream>

namespace zmc {

namespace {
std::string fmt(double v) {
  char buf[64];
  snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
} // namespace

void write_obj(const SurfacePatch& patch, std::ostream& os, const std::string& name) {
  int nu = patch.nu(), nv = patch.nv();
  os << "# zmc surface mesh\n";
  os << "o " << (name.empty() ? "surface" : name) << "\n";
  os << "# grid " << nu << " x " << nv << ", signature " << signature_name(patch.sig) << "\n";
  for (int j = 0; j < nv; ++j) {
    for (int i = 0; i < nu; ++i) {
      const Vec3R& p = patch.at(i, j);
      os << "# uv " << fmt(patch.us[i]) << " " << fmt(patch.vs[j]) << "\n";
      os << "v " << fmt(p.x) << " " << fmt(p.y) << " " << fmt(p.z) << "\n";
    }
  }
  // Two triangles per cell, counterclockwise in (u,v).
  for (int j = 0; j + 1 < nv; ++j) {
    for (int i = 0; i + 1 < nu; ++i) {
      int a = j * nu + i + 1; // OBJ indices are 1-based
      int b = j * nu + i + 2;
      int c = (j + 1) * nu + i + 2;
      int d = (j + 1) * nu + i + 1;
      os << "f " << a << " " << b << " " << c << "\n";
      os << "f " << a << " " << c << " " << d << "\n";
    }
  }
}

std::string obj_string(const SurfacePatch& patch, const std::string& name) {
  std::ostringstream os;
  write_obj(patch, os, name);
  return os.str();
}

} // namespace zmc
