/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "zmc/descriptor.hpp"

#include <json.hpp>

#include "zmc/error.hpp"

namespace zmc {

namespace {

using json = nlohmann::ordered_json;

json cplx_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) fail(Errc::ParseError, "complex values are [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace

std::string surface_to_json(const Surface& s) {
  json j;
  j["name"] = s.name;
  j["g"] = s.data.g.str();
  j["f"] = s.data.f.str();
  j["epsilon"] = static_cast<int>(s.sig());
  json punct = json::array();
  for (cplx p : s.data.punctures) punct.push_back(cplx_to_json(p));
  j["punctures"] = punct;
  j["params"] = json::object();
  for (const auto& [k, v] : s.params) j["params"][k] = v;
  j["z0"] = cplx_to_json(s.z0);
  j["X0"] = json::array({s.X0.x, s.X0.y, s.X0.z});
  j["grid"] = {{"umin", s.default_grid.umin}, {"umax", s.default_grid.umax},
               {"nu", s.default_grid.nu},     {"vmin", s.default_grid.vmin},
               {"vmax", s.default_grid.vmax}, {"nv", s.default_grid.nv}};
  if (!s.description.empty()) j["description"] = s.description;
  if (!s.axis.empty()) j["axis"] = s.axis;
  return j.dump(2) + "\n";
}

Surface surface_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("g") || !j.contains("f"))
    fail(Errc::ParseError, "descriptor needs 'g' and 'f' expression strings");
  Surface s;
  s.name = j.value("name", std::string("descriptor"));
  s.description = j.value("description", std::string());
  WeierstrassData w;
  w.g = parse_expr(j["g"].get<std::string>());
  w.f = parse_expr(j["f"].get<std::string>());
  int e = j.value("epsilon", 1);
  if (e != 1 && e != -1) fail(Errc::ParseError, "epsilon must be 1 or -1");
  w.sig = e == 1 ? Signature::Euclidean : Signature::Lorentzian;
  if (j.contains("punctures"))
    for (const auto& p : j["punctures"]) w.punctures.push_back(cplx_from_json(p));
  if (j.contains("params"))
    for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
      w.params[it.key()] = it.value().get<double>();
  s.params = w.params;
  s.data = w;
  s.curve = isotropic_from_weierstrass(w);
  if (j.contains("z0")) s.z0 = cplx_from_json(j["z0"]);
  if (j.contains("X0")) {
    const auto& x = j["X0"];
    if (!x.is_array() || x.size() != 3) fail(Errc::ParseError, "X0 is [x, y, z]");
    s.X0 = {x[0].get<double>(), x[1].get<double>(), x[2].get<double>()};
  }
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    s.default_grid = {g.value("umin", -1.2), g.value("umax", 1.2), g.value("nu", 49),
                      g.value("vmin", -1.2), g.value("vmax", 1.2), g.value("nv", 49)};
  }
  validate(s.data);
  return s;
}

BjorlingData bjorling_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("alpha") || !j.contains("V"))
    fail(Errc::ParseError, "Bjorling descriptor needs 'alpha' and 'V' arrays");
  auto read3 = [&](const json& arr, std::array<Expr, 3>& out) {
    if (!arr.is_array() || arr.size() != 3)
      fail(Errc::ParseError, "'alpha' and 'V' must be arrays of three expressions");
    for (int k = 0; k < 3; ++k) out[k] = parse_expr(arr[k].get<std::string>());
  };
  BjorlingData d;
  read3(j["alpha"], d.alpha);
  read3(j["V"], d.V);
  int e = j.value("epsilon", -1);
  if (e != 1 && e != -1) fail(Errc::ParseError, "epsilon must be 1 or -1");
  d.sig = e == 1 ? Signature::Euclidean : Signature::Lorentzian;
  if (j.contains("z0")) d.z0 = cplx_from_json(j["z0"]);
  if (j.contains("params"))
    for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
      d.params[it.key()] = it.value().get<double>();
  return d;
}

std::string catalog_to_json() {
  json arr = json::array();
  for (const auto& info : catalog_infos()) {
    json j;
    j["name"] = info.name;
    j["description"] = info.description;
    j["epsilon"] = static_cast<int>(info.sig);
    if (!info.axis.empty()) j["axis"] = info.axis;
    j["defaults"] = json::object();
    for (const auto& [k, v] : info.defaults) j["defaults"][k] = v;
    j["closed_form"] = info.has_closed_form;
    j["period_chart"] = info.has_period_chart;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

} // namespace zmc
