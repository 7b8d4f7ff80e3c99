/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include "zmc/catalog.hpp"
#include "zmc/error.hpp"
#include "zmc/verify.hpp"

using namespace zmc;

TEST_CASE("patch comparison up to translation") {
  Surface ell = build_surface("elliptic_catenoid");
  GridSpec g{-0.8, 0.8, 9, -0.8, 0.8, 9};
  SurfacePatch a = closed_patch(ell, g);
  SUBCASE("translated copies agree") {
    SurfacePatch b = a;
    for (auto& p : b.points) p = p + Vec3R{5, 5, 5};
    Certificate c = patches_equal_up_to_translation(a, b, 1e-8, "shift");
    CHECK(c.pass);
    CHECK(c.max_residual < 1e-12);
  }
  SUBCASE("different surfaces do not") {
    Surface hyp = build_surface("hyperbolic_catenoid");
    SurfacePatch b = closed_patch(hyp, g);
    Certificate c = patches_equal_up_to_translation(a, b, 1e-8, "mismatch");
    CHECK_FALSE(c.pass);
    CHECK(c.max_residual > 0.1);
  }
  SUBCASE("grid mismatch is an error") {
    SurfacePatch b = closed_patch(ell, GridSpec{-0.8, 0.8, 11, -0.8, 0.8, 9});
    CHECK_THROWS_AS(patches_equal_up_to_translation(a, b, 1e-8, "bad"), Error);
  }
}

TEST_CASE("goursat parameter validation") {
  CHECK_THROWS_AS(check_goursat_thm51(1.0, 0.5), Error); // mu must be negative
  CHECK_THROWS_AS(check_goursat_thm52(1.0, 0.0), Error); // lambda <= 0
}

TEST_CASE("certificates are reproducible") {
  auto first = check_goursat();
  auto second = check_goursat();
  REQUIRE(first.size() == second.size());
  for (size_t k = 0; k < first.size(); ++k) {
    CHECK(first[k].id == second[k].id);
    CHECK(first[k].max_residual == second[k].max_residual);
    CHECK(first[k].pass == second[k].pass);
  }
  CHECK(report_json("goursat", first) == report_json("goursat", second));
}

TEST_CASE("suite dispatch") {
  CHECK_THROWS_AS(run_suite("bogus"), Error);
  auto names = suite_names();
  CHECK(names.back() == "all");
  auto certs = run_suite("isotropy");
  CHECK(certs.size() == 14);
  CHECK(all_pass(certs));
  std::string json = report_json("isotropy", certs);
  CHECK(json.find("\"all_pass\": true") != std::string::npos);
}
