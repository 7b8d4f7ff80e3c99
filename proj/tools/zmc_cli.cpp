/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Command-line front end for the zmc shared library. Talks to the library
// exclusively through the C API in zmc.h.
//
// Subcommands: catalog, surface, dual, bjorling, transform, periods, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zmc.h"

namespace {

struct StringOut {
  char* s = nullptr;
  ~StringOut() { zmc_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

struct SurfaceHandle {
  zmc_surface* s = nullptr;
  ~SurfaceHandle() { zmc_surface_free(s); }
};

struct PatchHandle {
  zmc_patch* p = nullptr;
  ~PatchHandle() { zmc_patch_free(p); }
};

[[noreturn]] void die(zmc_status st, const std::string& context) {
  std::cerr << "error (" << zmc_status_name(st) << "): " << context << ": "
            << zmc_last_error() << "\n";
  std::exit(2);
}

void check(zmc_status st, const std::string& context) {
  if (st != ZMC_OK) die(st, context);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(2);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(2);
  }
  out << content;
}

struct ParamArgs {
  std::vector<std::string> names;
  std::vector<double> values;
  std::vector<const char*> name_ptrs;

  void parse(const std::vector<std::string>& kvs) {
    for (const auto& kv : kvs) {
      auto pos = kv.find('=');
      if (pos == std::string::npos) {
        std::cerr << "error: --param expects k=v, got '" << kv << "'\n";
        std::exit(2);
      }
      names.push_back(kv.substr(0, pos));
      try {
        values.push_back(std::stod(kv.substr(pos + 1)));
      } catch (...) {
        std::cerr << "error: bad numeric value in '" << kv << "'\n";
        std::exit(2);
      }
    }
    for (const auto& n : names) name_ptrs.push_back(n.c_str());
  }
};

struct GridArgs {
  double umin = 0, umax = 0, vmin = 0, vmax = 0;
  int nu = 0, nv = 0;
  CLI::Option *o_umin = nullptr, *o_umax = nullptr, *o_vmin = nullptr, *o_vmax = nullptr,
              *o_nu = nullptr, *o_nv = nullptr;

  std::string spec; // combined form "umin:umax:nu,vmin:vmax:nv"
  CLI::Option* o_spec = nullptr;

  void add_flags(CLI::App* cmd) {
    o_umin = cmd->add_option("--umin", umin, "grid u minimum");
    o_umax = cmd->add_option("--umax", umax, "grid u maximum");
    o_vmin = cmd->add_option("--vmin", vmin, "grid v minimum");
    o_vmax = cmd->add_option("--vmax", vmax, "grid v maximum");
    o_nu = cmd->add_option("--nu", nu, "u node count");
    o_nv = cmd->add_option("--nv", nv, "v node count");
    o_spec = cmd->add_option("--grid", spec, "grid spec umin:umax:nu,vmin:vmax:nv");
  }

  zmc_grid resolve(const zmc_surface* s) const {
    zmc_grid g;
    check(zmc_surface_default_grid(s, &g), "default grid");
    if (o_spec->count()) {
      double a[6];
      if (std::sscanf(spec.c_str(), "%lf:%lf:%lf,%lf:%lf:%lf", &a[0], &a[1], &a[2], &a[3],
                      &a[4], &a[5]) != 6) {
        std::cerr << "error: --grid expects umin:umax:nu,vmin:vmax:nv\n";
        std::exit(2);
      }
      g = {a[0], a[1], static_cast<int>(a[2]), a[3], a[4], static_cast<int>(a[5])};
    }
    if (o_umin->count()) g.umin = umin;
    if (o_umax->count()) g.umax = umax;
    if (o_vmin->count()) g.vmin = vmin;
    if (o_vmax->count()) g.vmax = vmax;
    if (o_nu->count()) g.nu = nu;
    if (o_nv->count()) g.nv = nv;
    return g;
  }
};

SurfaceHandle load_surface(const std::string& name, const std::string& descriptor_path,
                           const ParamArgs& params) {
  SurfaceHandle h;
  if (!descriptor_path.empty()) {
    check(zmc_surface_from_json(read_file(descriptor_path).c_str(), &h.s), "descriptor");
  } else if (!name.empty()) {
    check(zmc_surface_build(name.c_str(), params.name_ptrs.data(), params.values.data(),
                            params.values.size(), &h.s),
          "build " + name);
  } else {
    std::cerr << "error: provide --name or --descriptor\n";
    std::exit(2);
  }
  return h;
}

void export_surface(const zmc_surface* s, const GridArgs& grid, const std::string& out_path,
                    const std::string& obj_name) {
  zmc_grid g = grid.resolve(s);
  PatchHandle patch;
  check(zmc_surface_sample(s, &g, &patch.p), "sample");
  StringOut obj;
  check(zmc_patch_obj(patch.p, obj_name.c_str(), &obj.s), "obj export");
  if (out_path.empty() || out_path == "-") {
    std::cout << obj.str();
  } else {
    write_file(out_path, obj.str());
    StringOut meta;
    check(zmc_surface_to_json(s, &meta.s), "descriptor export");
    write_file(out_path + ".json", meta.str());
    std::cout << "wrote " << out_path << " and " << out_path << ".json\n";
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"zmc: minimal/maximal surface duality toolkit"};
  app.require_subcommand(1);

  // --- catalog ---------------------------------------------------------
  auto* cmd_catalog = app.add_subcommand("catalog", "list the surface catalog");
  bool catalog_json = false;
  cmd_catalog->add_flag("--json", catalog_json, "emit raw JSON");

  // --- surface ---------------------------------------------------------
  auto* cmd_surface = app.add_subcommand("surface", "sample a surface and export OBJ");
  std::string name, descriptor, out_path;
  std::vector<std::string> param_kvs;
  cmd_surface->add_option("--name", name, "catalog entry name");
  cmd_surface->add_option("--descriptor", descriptor, "surface descriptor JSON file");
  cmd_surface->add_option("--param", param_kvs, "parameter k=v (repeatable)");
  cmd_surface->add_option("--out", out_path, "output OBJ path ('-' for stdout)");
  GridArgs surface_grid;
  surface_grid.add_flags(cmd_surface);

  // --- dual ------------------------------------------------------------
  auto* cmd_dual = app.add_subcommand("dual", "compute the dual surface");
  std::string d_name, d_descriptor, d_out;
  std::vector<std::string> d_params;
  bool d_no_mesh = false;
  cmd_dual->add_option("--name", d_name, "catalog entry name");
  cmd_dual->add_option("--descriptor", d_descriptor, "surface descriptor JSON file");
  cmd_dual->add_option("--param", d_params, "parameter k=v (repeatable)");
  cmd_dual->add_option("--out", d_out, "output basename (writes .json and .obj)");
  cmd_dual->add_flag("--no-mesh", d_no_mesh, "skip the dual mesh export");
  GridArgs dual_grid;
  dual_grid.add_flags(cmd_dual);

  // --- bjorling ---------------------------------------------------------
  auto* cmd_bjorling = app.add_subcommand("bjorling", "solve a Bjorling problem");
  std::string b_descriptor, b_out;
  cmd_bjorling->add_option("--descriptor", b_descriptor, "Bjorling descriptor JSON file")
      ->required();
  cmd_bjorling->add_option("--out", b_out, "output OBJ path ('-' for stdout)");
  GridArgs bjorling_grid;
  bjorling_grid.add_flags(cmd_bjorling);

  // --- transform ---------------------------------------------------------
  auto* cmd_transform = app.add_subcommand("transform", "apply a transformation");
  std::string t_name, t_descriptor, t_out, t_isometry, t_goursat, t_reparam;
  std::vector<std::string> t_params;
  double t_value = 0, t_associate = 0;
  bool t_dual = false, t_mesh = false;
  cmd_transform->add_option("--name", t_name, "catalog entry name");
  cmd_transform->add_option("--descriptor", t_descriptor, "surface descriptor JSON file");
  cmd_transform->add_option("--param", t_params, "parameter k=v (repeatable)");
  cmd_transform->add_option("--isometry", t_isometry,
                            "kind: elliptic-rotation|hyperbolic-rotation|parabolic-rotation|"
                            "rotation-about-y|dilation");
  cmd_transform->add_option("--value", t_value, "isometry parameter");
  auto* assoc_opt =
      cmd_transform->add_option("--associate", t_associate, "associate-family angle theta");
  cmd_transform->add_option("--goursat", t_goursat,
                            "Moebius coefficients are,aim,bre,bim,cre,cim,dre,dim");
  cmd_transform->add_option("--reparametrize", t_reparam, "change of variable h(z)");
  cmd_transform->add_flag("--dual", t_dual, "apply duality after the transformation");
  cmd_transform->add_flag("--mesh", t_mesh, "also export the mesh");
  cmd_transform->add_option("--out", t_out, "output basename");
  GridArgs transform_grid;
  transform_grid.add_flags(cmd_transform);

  // --- periods -----------------------------------------------------------
  auto* cmd_periods = app.add_subcommand("periods", "print the real-period vector");
  std::string p_name, p_descriptor, p_loop;
  std::vector<std::string> p_params;
  cmd_periods->add_option("--name", p_name, "catalog entry name");
  cmd_periods->add_option("--descriptor", p_descriptor, "surface descriptor JSON file");
  cmd_periods->add_option("--param", p_params, "parameter k=v (repeatable)");
  cmd_periods->add_option("--loop", p_loop, "loop spec cx,cy,r (default 0,0,1)");

  // --- verify -------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
  std::string v_suite = "all", v_out;
  std::vector<std::string> v_tols;
  cmd_verify->add_option("--suite", v_suite, "suite name (default: all)");
  cmd_verify->add_option("--out", v_out, "write certificate JSON to this path");
  cmd_verify->add_option("--tol", v_tols,
                         "tolerance override id-prefix=value (repeatable)");
  bool v_list = false;
  cmd_verify->add_flag("--list", v_list, "list available suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cmd_catalog->parsed()) {
    StringOut s;
    check(zmc_catalog_json(&s.s), "catalog");
    if (catalog_json) {
      std::cout << s.str();
    } else {
      auto entries = nlohmann::json::parse(s.str());
      for (const auto& e : entries) {
        std::string params;
        for (auto it = e["defaults"].begin(); it != e["defaults"].end(); ++it) {
          if (!params.empty()) params += ", ";
          params += it.key() + "=" + std::to_string(it.value().get<double>());
          params.erase(params.find_last_not_of('0') + 1);
          if (!params.empty() && params.back() == '.') params.pop_back();
        }
        printf("%-22s %-4s %-24s %s\n", e["name"].get<std::string>().c_str(),
               e["epsilon"].get<int>() == 1 ? "E3" : "L3",
               params.empty() ? "-" : params.c_str(),
               e["description"].get<std::string>().c_str());
      }
    }
    return 0;
  }

  if (cmd_surface->parsed()) {
    ParamArgs params;
    params.parse(param_kvs);
    SurfaceHandle s = load_surface(name, descriptor, params);
    export_surface(s.s, surface_grid, out_path, name.empty() ? "surface" : name);
    return 0;
  }

  if (cmd_dual->parsed()) {
    ParamArgs params;
    params.parse(d_params);
    SurfaceHandle s = load_surface(d_name, d_descriptor, params);
    SurfaceHandle dual;
    check(zmc_surface_dual(s.s, &dual.s), "dual");
    StringOut js;
    check(zmc_surface_to_json(dual.s, &js.s), "descriptor");
    if (d_out.empty()) {
      std::cout << js.str();
    } else {
      write_file(d_out + ".json", js.str());
      std::cout << "wrote " << d_out << ".json\n";
      if (!d_no_mesh) export_surface(dual.s, dual_grid, d_out + ".obj", "dual");
    }
    return 0;
  }

  if (cmd_bjorling->parsed()) {
    SurfaceHandle s;
    check(zmc_surface_bjorling(read_file(b_descriptor).c_str(), &s.s), "bjorling");
    export_surface(s.s, bjorling_grid, b_out, "bjorling");
    return 0;
  }

  if (cmd_transform->parsed()) {
    ParamArgs params;
    params.parse(t_params);
    SurfaceHandle s = load_surface(t_name, t_descriptor, params);
    zmc_surface* current = s.s;
    SurfaceHandle stage2, stage3;
    if (!t_isometry.empty()) {
      check(zmc_surface_isometry(current, t_isometry.c_str(), t_value, &stage2.s),
            "isometry");
      current = stage2.s;
    } else if (assoc_opt->count() > 0) {
      check(zmc_surface_associate(current, t_associate, &stage2.s), "associate");
      current = stage2.s;
    } else if (!t_goursat.empty()) {
      double c[8] = {0};
      std::stringstream ss(t_goursat);
      std::string tok;
      int k = 0;
      while (std::getline(ss, tok, ',') && k < 8) c[k++] = std::stod(tok);
      if (k != 8) {
        std::cerr << "error: --goursat needs eight comma-separated numbers\n";
        return 2;
      }
      check(zmc_surface_goursat(current, c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7],
                                &stage2.s),
            "goursat");
      current = stage2.s;
    } else if (!t_reparam.empty()) {
      check(zmc_surface_reparametrize(current, t_reparam.c_str(), &stage2.s), "reparametrize");
      current = stage2.s;
    }
    if (t_dual) {
      check(zmc_surface_dual(current, &stage3.s), "dual");
      current = stage3.s;
    }
    StringOut js;
    check(zmc_surface_to_json(current, &js.s), "descriptor");
    if (t_out.empty()) {
      std::cout << js.str();
    } else {
      write_file(t_out + ".json", js.str());
      std::cout << "wrote " << t_out << ".json\n";
      if (t_mesh) export_surface(current, transform_grid, t_out + ".obj", "transformed");
    }
    return 0;
  }

  if (cmd_periods->parsed()) {
    ParamArgs params;
    params.parse(p_params);
    SurfaceHandle s = load_surface(p_name, p_descriptor, params);
    double cx = 0, cy = 0, r = 1;
    if (!p_loop.empty()) {
      std::stringstream ss(p_loop);
      std::string tok;
      double vals[3];
      int k = 0;
      while (std::getline(ss, tok, ',') && k < 3) vals[k++] = std::stod(tok);
      if (k != 3) {
        std::cerr << "error: --loop expects cx,cy,r\n";
        return 2;
      }
      cx = vals[0];
      cy = vals[1];
      r = vals[2];
    }
    double period[3];
    check(zmc_surface_periods(s.s, cx, cy, r, period), "periods");
    printf("(%.17g, %.17g, %.17g)\n", period[0], period[1], period[2]);
    return 0;
  }

  if (cmd_verify->parsed()) {
    if (v_list) {
      StringOut s;
      check(zmc_verify_suites(&s.s), "suites");
      std::cout << s.str();
      return 0;
    }
    std::vector<std::string> prefixes;
    std::vector<double> tols;
    for (const auto& kv : v_tols) {
      auto pos = kv.find('=');
      if (pos == std::string::npos) {
        std::cerr << "error: --tol expects id-prefix=value, got '" << kv << "'\n";
        return 2;
      }
      prefixes.push_back(kv.substr(0, pos));
      try {
        tols.push_back(std::stod(kv.substr(pos + 1)));
      } catch (...) {
        std::cerr << "error: bad tolerance in '" << kv << "'\n";
        return 2;
      }
    }
    std::vector<const char*> prefix_ptrs;
    for (const auto& p : prefixes) prefix_ptrs.push_back(p.c_str());
    StringOut report;
    int ok = 0;
    check(zmc_verify_with_tolerances(v_suite.c_str(), prefix_ptrs.data(), tols.data(),
                                     tols.size(), &report.s, &ok),
          "verify " + v_suite);
    if (v_out.empty()) {
      std::cout << report.str();
    } else {
      write_file(v_out, report.str());
      std::cout << "wrote " << v_out << (ok ? " (all pass)" : " (failures present)") << "\n";
    }
    return ok ? 0 : 1;
  }

  return 2;
}
