// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_WVOX_HPP
#define WVOX_WVOX_HPP

#include "wvox/denoise/denoiser.hpp"
#include "wvox/denoise/metrics.hpp"
#include "wvox/error.hpp"
#include "wvox/harness/config.hpp"
#include "wvox/harness/dataset.hpp"
#include "wvox/harness/experiment.hpp"
#include "wvox/harness/report_io.hpp"
#include "wvox/harness/sampling.hpp"
#include "wvox/harness/synth.hpp"
#include "wvox/io/grid_json.hpp"
#include "wvox/io/pcd_io.hpp"
#include "wvox/io/pose_io.hpp"
#include "wvox/io/wvpc_io.hpp"
#include "wvox/point_cloud.hpp"
#include "wvox/rng.hpp"
#include "wvox/voxel/grid.hpp"
#include "wvox/voxel/ops.hpp"
#include "wvox/voxel/voxelize.hpp"
#include "wvox/weather/corridor.hpp"
#include "wvox/weather/fog_sim.hpp"
#include "wvox/weather/geometry.hpp"
#include "wvox/weather/params.hpp"
#include "wvox/weather/particle_sim.hpp"
#include "wvox/weather/size_dist.hpp"
#include "wvox/wire/bandwidth.hpp"
#include "wvox/wire/codec.hpp"

#endif
