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

#ifndef RAINKIT_ESTIMATE_HPP
#define RAINKIT_ESTIMATE_HPP

#include <string>

#include "rainkit/decompose.hpp"
#include "rainkit/image.hpp"
#include "rainkit/rain_model.hpp"

// Closed-form baseline estimators for the rain parameters (S, A, T) from a
// frequency-decomposed rain image, plus ingestion of parameter maps
// produced elsewhere. The baselines make no claim beyond producing valid,
// invariant-satisfying parameters so the reconstruction pipeline runs end
// to end; externally estimated maps can be dropped in via the directory
// interface below.

namespace rainkit {

enum class ParamSource { baseline, external };

/// One full set of estimated rain parameters with provenance.
struct ParamEstimate {
    StreakMap streaks;
    Transmission trans;
    AtmosphericLight atm;
    ParamSource source = ParamSource::baseline;
};

constexpr double kDarkChannelOmega = 0.95;
constexpr int kDarkChannelWindow = 15;
constexpr float kStreakThreshold = 0.02f;

/// Airlight as the per-channel mean of the brightest 1% of pixels ranked by
/// luminance (brightest single pixel for images under 100 px). Estimating
/// from the low-frequency channel avoids streak highlights.
AtmosphericLight estimate_atmospheric_light(const ImageF& low);

/// Dark-channel-style transmission: T = clamp(1 - omega * min over channels
/// and a window of (I/A), t_min, 1).
Transmission estimate_transmission(const ImageF& low, const AtmosphericLight& atm,
                                   double omega = kDarkChannelOmega,
                                   int window = kDarkChannelWindow,
                                   float t_min = kDefaultTransmissionFloor);

/// Streaks from the positive part of the high-frequency luminance,
/// thresholded at tau.
StreakMap estimate_streaks(const ImageF& high, float tau = kStreakThreshold);

/// Load `streaks.png`, `trans.png` and `atm.json` ({"a": [r,g,b]}) from a
/// directory and validate ranges. Marks source = external.
ParamEstimate load_external_params(const std::string& dir);

/// Write a parameter set in the same directory layout (16-bit PNGs).
void save_external_params(const std::string& dir, const StreakMap& streaks,
                          const Transmission& trans, const AtmosphericLight& atm);

/// Reconstruct the clean scene from a rain image and a parameter set.
ImageF derain(const ImageF& rain, const ParamEstimate& params,
              float t_min = kDefaultTransmissionFloor);

}  // namespace rainkit

#endif  // RAINKIT_ESTIMATE_HPP
