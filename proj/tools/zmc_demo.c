/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

/* Minimal C consumer of libzmc: build a catalog surface, take its dual,
 * sample a small patch and print the real-period vector. Doubles as a check
 * that zmc.h compiles as plain C. */

#include <stdio.h>
#include <stdlib.h>

#include "zmc.h"

static void require(zmc_status st, const char* what) {
  if (st != ZMC_OK) {
    fprintf(stderr, "%s failed (%s): %s\n", what, zmc_status_name(st), zmc_last_error());
    exit(1);
  }
}

int main(void) {
  const char* pname = "lambda";
  double pval = 1.0;
  zmc_surface* bonnet = NULL;
  require(zmc_surface_build("bonnet_minimal", &pname, &pval, 1, &bonnet), "build");

  double period[3];
  require(zmc_surface_periods(bonnet, 0.0, 0.0, 1.0, period), "periods");
  printf("bonnet_minimal(lambda=1) period: (%.12g, %.12g, %.12g)\n", period[0], period[1],
         period[2]);

  zmc_surface* dual = NULL;
  require(zmc_surface_dual(bonnet, &dual), "dual");

  zmc_grid grid = {-0.5, 0.5, 5, -0.5, 0.5, 5};
  zmc_patch* patch = NULL;
  require(zmc_surface_sample(dual, &grid, &patch), "sample");
  double xyz[3];
  require(zmc_patch_point(patch, 2, 2, xyz), "point");
  printf("dual surface at the grid centre: (%.6g, %.6g, %.6g)\n", xyz[0], xyz[1], xyz[2]);

  zmc_patch_free(patch);
  zmc_surface_free(dual);
  zmc_surface_free(bonnet);
  printf("zmc %s ok\n", zmc_version());
  return 0;
}
