// Copyright 2026 The Rainkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RAINKIT_SYNTH_HPP
#define RAINKIT_SYNTH_HPP

#include <cstdint>

#include "rainkit/image.hpp"
#include "rainkit/kernels.hpp"
#include "rainkit/rain_model.hpp"
#include "rainkit/rng.hpp"

// Synthetic rain rendering. One sample drops a sparse Gaussian noise field,
// smears it with a motion kernel into streaks, veils the scene with a
// depth-driven transmission map, and blurs both scene and transmission to
// mimic scattering in dense rain. All randomness flows through RainParams.

namespace rainkit {

/// Physical parameters drawn for one rendered sample.
struct RainParams {
    double beta = 3.6;            // veil intensity in T = exp(-beta * d)
    double atm = 0.55;            // achromatic airlight, U(0.3, 0.8)
    int streak_len = 40;          // motion kernel length, px
    double streak_angle = 90.0;   // degrees CCW from horizontal, [0,180)
    double noise_mu = -0.9;       // noise field mean (negative: sparse)
    double noise_sigma = 0.85;    // noise field stddev
    double trans_blur_sigma = 5.0;  // blur of the transmission map, px
    double blur_scale = 1.5;      // depth-variable scene blur: sigma(x) = scale * d(x)
    std::uint64_t seed = 0;       // stream for the noise field
};

/// A rendered sample with every ground-truth sidecar retained.
struct RainSample {
    ImageF rain;
    ImageF clean;
    ImageF clean_blur;
    StreakMap streaks;       // single channel
    Transmission trans;      // exp(-beta * d), pre-blur
    Transmission trans_blur;
    AtmosphericLight atm;
    RainParams params;
};

/// Number of quantized blur levels used by depth_variable_blur.
constexpr int kDepthBlurLevels = 8;

/// Draw one parameter set. Draw order is fixed; the same stream state
/// always yields the same parameters.
RainParams sample_params(RngStream& rng);

/// i.i.d. Gaussian(mu, sigma) per pixel, clamped to [0,1]. Pixels are keyed
/// by their index in the stream, so the fill parallelizes deterministically.
/// Advances `rng` by two counters per pixel.
ImageF noise_map(int height, int width, double mu, double sigma, RngStream& rng);

/// Anti-aliased line kernel of length `len` at `angle_deg` CCW from
/// horizontal, trimmed to its support and normalized to unit sum.
Kernel2D motion_kernel(int len, double angle_deg);

/// Streaks = noise field smeared by the motion kernel, mirrored borders,
/// clamped to [0,1].
StreakMap synthesize_streaks(const ImageF& noise, const Kernel2D& kernel);

/// Per-pixel Gaussian blur with sigma(x) = scale * depth(x), approximated
/// by `levels` uniformly spaced full-image blurs and per-pixel linear
/// interpolation between the two bracketing levels. Zero-depth pixels pass
/// through untouched.
ImageF depth_variable_blur(const ImageF& img, const DepthMap& depth, double scale,
                           int levels = kDepthBlurLevels);

/// Run the full pipeline on a clean image and its normalized depth map.
RainSample render(const ImageF& clean, const DepthMap& depth, const RainParams& params);

}  // namespace rainkit

#endif  // RAINKIT_SYNTH_HPP
