/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <ostream>
#include <string>

#include "zmc/quadrature.hpp"

namespace zmc {

/// Wavefront OBJ export: vertices with their (u,v) grid coordinates as
/// comments, two triangles per grid cell with consistent winding, 1-based
/// indices, floats at 17 significant digits (byte-stable output).
void write_obj(const SurfacePatch& patch, std::ostream& os, const std::string& name);

std::string obj_string(const SurfacePatch& patch, const std::string& name);

} // namespace zmc
