/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>

#include "zmc/bjorling.hpp"
#include "zmc/catalog.hpp"

namespace zmc {

// JSON exchange formats.
//
// Surface descriptor:
//   { "name": "...", "g": "<expr>", "f": "<expr>", "epsilon": 1|-1,
//     "punctures": [[re,im],...], "params": {"a":1.0},
//     "z0": [re,im], "X0": [x,y,z] }
//
// Bjorling descriptor:
//   { "alpha": ["<expr>","<expr>","<expr>"], "V": [...], "epsilon": -1,
//     "z0": [re,im], "params": {...} }

std::string surface_to_json(const Surface& s);
Surface surface_from_json(const std::string& text);

BjorlingData bjorling_from_json(const std::string& text);

/// {"name":..., "defaults":..., ...} array for the whole catalog.
std::string catalog_to_json();

} // namespace zmc
