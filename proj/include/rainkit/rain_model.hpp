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

#ifndef RAINKIT_RAIN_MODEL_HPP
#define RAINKIT_RAIN_MODEL_HPP

#include <array>

#include "rainkit/image.hpp"

// Image formation model for rainy scenes: additive streaks plus an
// atmospheric veil. A rain image I is composed from the clean scene J,
// streak intensities S, a per-pixel transmission T and a global airlight A:
//
//     I = T * (J + S) + (1 - T) * A
//
// and the inverse recovers J from the observed image and the parameters.

namespace rainkit {

/// Per-pixel fraction of scene radiance surviving scattering, in [0,1].
struct Transmission {
    ImageF map;  // single channel
};

/// Global airlight color. Sampled achromatic here but carried as RGB.
struct AtmosphericLight {
    std::array<float, 3> rgb{0.0f, 0.0f, 0.0f};
};

/// Additive streak intensities, >= 0, single channel (achromatic rain,
/// broadcast over color at composition) or full RGB.
struct StreakMap {
    ImageF map;
};

constexpr float kDefaultTransmissionFloor = 0.05f;

/// I = clamp(J + S, 0, 1). Streak-only model, no veil.
ImageF compose_simple(const ImageF& scene, const StreakMap& streaks);

/// I = clamp(T*(J+S) + (1-T)*A, 0, 1). T broadcasts over channels, A over
/// pixels; a single-channel streak map broadcasts over RGB.
ImageF compose(const ImageF& scene, const StreakMap& streaks, const Transmission& trans,
               const AtmosphericLight& atm);

/// Inverse of compose: J = (I - (1-T')*A) / T' - S with T' = max(T, t_min),
/// clamped to [0,1]. t_min must lie in (0,1].
ImageF reconstruct(const ImageF& rain, const StreakMap& streaks, const Transmission& trans,
                   const AtmosphericLight& atm, float t_min = kDefaultTransmissionFloor);

/// T(x) = exp(-beta * d(x)) for a normalized depth map and beta > 0.
Transmission transmission_from_depth(const DepthMap& depth, double beta);

/// Relative depth from transmission: -log T rescaled to [0,1]. A constant
/// map yields all zeros. Zeros in T are lifted to the transmission floor
/// first (with a warning on stderr).
DepthMap relative_depth(const Transmission& trans);

}  // namespace rainkit

#endif  // RAINKIT_RAIN_MODEL_HPP
