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

#ifndef RAINKIT_METRICS_HPP
#define RAINKIT_METRICS_HPP

#include "rainkit/estimate.hpp"
#include "rainkit/image.hpp"
#include "rainkit/synth.hpp"

namespace rainkit {

/// Weights for combining the three parameter losses. All 1 by default
/// (they are MSE losses on the same scale).
struct LossWeights {
    double streaks = 1.0;
    double atm = 1.0;
    double trans = 1.0;
};

/// Per-parameter MSE losses and their weighted combination.
struct PhysicsLossReport {
    double l_s = 0.0;
    double l_a = 0.0;
    double l_t = 0.0;
    double l_theta = 0.0;
    LossWeights lambdas;
};

struct EvalReport {
    double psnr = 0.0;  // dB, +infinity when mse == 0
    double ssim = 0.0;
    double mse = 0.0;
};

double mse(const ImageF& a, const ImageF& b);

/// 10*log10(peak^2 / mse); +infinity when the images are identical.
double psnr(const ImageF& a, const ImageF& b, double peak = 1.0);

/// Mean local SSIM, 11x11 Gaussian window (sigma 1.5), K1=0.01, K2=0.03,
/// dynamic range 1. Both images must be at least 11x11; RGB is scored per
/// channel and averaged.
double ssim(const ImageF& a, const ImageF& b);

/// Compare an estimated parameter set against a rendered sample's ground
/// truth: l_s = mse(S), l_a = mse over the 3 airlight components,
/// l_t = mse(T against the blurred transmission actually composed).
PhysicsLossReport physics_loss(const ParamEstimate& est, const RainSample& gt,
                               const LossWeights& lambdas = {});

/// Sum of absolute airlight component errors over r,g,b.
double atm_light_error(const AtmosphericLight& a, const AtmosphericLight& gt);

/// Residual high-frequency energy of `low` at ground-truth streak pixels
/// (S_gt > 0.1): mean |luminance(low - blur(low, sigma=4))| over the mask.
/// Zero when the mask is empty. Lower means fewer streaks leaked into the
/// low-frequency channel.
double streak_leakage(const ImageF& low, const StreakMap& streaks_gt);

EvalReport evaluate(const ImageF& a, const ImageF& b, double peak = 1.0);

}  // namespace rainkit

#endif  // RAINKIT_METRICS_HPP
