/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
//
//  1  isotropy of every catalog entry (residual <= 1e-10, 200 samples)
//  2  Bjorling solutions reproduce the three rotational closed forms (1e-8)
//  3  rotation equivariance of the catenoid patches (1e-9)
//  4  duality is an involution on patches (1e-8)
//  5  duals of the L^3 catenoids: catenoid / catenoid / Enneper certificate
//  6  the dual family C_t^flat matches its closed form and its rational chart
//     has the stated second-component periods (interior > 1e-3, endpoints <= 1e-8)
//  7  Bonnet minimal periods (0, -2 pi lambda, 0) and residue-oracle agreement
//  8  Goursat certificates at the pinned (t, mu) pairs (1e-9)
//  9  Enneper certificate for the deformed parabolic-catenoid duals
// 10  closed-form patches: max |H| <= 1e-5 at h = 0.01 with O(h^2) decay
// 11  byte-identical certificate JSON across repeated CLI verify runs

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "zmc/verify.hpp"

using namespace zmc;

namespace {

struct CriterionResult {
  int number;
  std::string title;
  bool pass;
  std::string detail;
};

CriterionResult from_certs(int number, const std::string& title,
                           const std::vector<Certificate>& certs) {
  int npass = 0;
  double worst = 0;
  std::string failures;
  for (const auto& c : certs) {
    npass += c.pass ? 1 : 0;
    worst = std::max(worst, c.max_residual);
    if (!c.pass) {
      char buf[128];
      std::snprintf(buf, sizeof buf, " %s (residual %.6g, tolerance %.3g)", c.id.c_str(),
                    c.max_residual, c.tolerance);
      failures += buf;
    }
  }
  std::ostringstream detail;
  detail << npass << "/" << certs.size() << " checks";
  if (!failures.empty()) detail << "; failing:" << failures;
  return {number, title, npass == static_cast<int>(certs.size()), detail.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CriterionResult determinism_criterion() {
  const std::string a = "zmc_acceptance_report_a.json";
  const std::string b = "zmc_acceptance_report_b.json";
  std::string base = std::string(ZMC_CLI_PATH) + " verify --suite all --out ";
  int ra = std::system((base + a + " > /dev/null 2>&1").c_str());
  int rb = std::system((base + b + " > /dev/null 2>&1").c_str());
  (void)ra;
  (void)rb; // a known-red certificate makes the exit code 1; bytes still count
  std::string ca = slurp(a), cb = slurp(b);
  std::remove(a.c_str());
  std::remove(b.c_str());
  bool pass = !ca.empty() && ca == cb;
  std::ostringstream detail;
  detail << ca.size() << " bytes per report, " << (pass ? "identical" : "DIFFER");
  return {11, "determinism of cmd_verify(all)", pass, detail.str()};
}

} // namespace

int main() {
  std::vector<CriterionResult> results;
  results.push_back(from_certs(1, "catalog isotropy", check_isotropy()));
  results.push_back(from_certs(2, "Bjorling reproduction", check_bjorling_reproduction()));
  results.push_back(from_certs(3, "rotation equivariance", check_equivariance()));
  results.push_back(from_certs(4, "duality involution", check_involution()));
  results.push_back(from_certs(5, "duals of the L3 catenoids", check_prop_t1()));
  results.push_back(from_certs(6, "Bonnet family of dual catenoids", check_bonnet_family()));

  {
    // Criterion 7 is the Bonnet-minimal subset of the period suite.
    std::vector<Certificate> certs;
    for (const auto& c : check_periods())
      if (c.id.rfind("bonnet_minimal_period_", 0) == 0 ||
          c.id == "period_residue_agreement_bonnet_minimal")
        certs.push_back(c);
    results.push_back(from_certs(7, "Bonnet minimal periods", certs));
  }

  results.push_back(from_certs(8, "Goursat certificates", check_goursat()));
  results.push_back(from_certs(9, "Enneper certificates for the X_t family", check_thm53()));
  results.push_back(from_certs(10, "mean curvature of closed forms", check_curvature()));
  results.push_back(determinism_criterion());

  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::printf("[%s] criterion %2d: %s (%s)\n", r.pass ? "PASS" : "FAIL", r.number,
                r.title.c_str(), r.detail.c_str());
  }
  std::printf("%s: %zu/%zu criteria\n", all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              static_cast<size_t>(std::count_if(results.begin(), results.end(),
                                                [](const auto& r) { return r.pass; })),
              results.size());
  return all ? 0 : 1;
}
