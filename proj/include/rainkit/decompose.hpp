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

#ifndef RAINKIT_DECOMPOSE_HPP
#define RAINKIT_DECOMPOSE_HPP

#include <vector>

#include "rainkit/image.hpp"

// Frequency decomposition guided by a rain-invariant reference image.
// Bright achromatic streaks add the same offset to all three color
// channels, so a max-minus-min residue cancels them; smoothing guided by
// that residue keeps chromatic background detail in the low-frequency
// channel while streaks fall through to the high-frequency channel.

namespace rainkit {

/// Guidance for the edge-preserving smoother. Nonnegative, 1 or 3 channels,
/// invariant to achromatic additive offsets by construction.
struct GuidanceImage {
    ImageF data;
};

/// Complementary split of an image. `high` is stored as the exact
/// difference input - low, so additivity holds to float precision; `low`
/// stays within [0,1].
struct FrequencyPair {
    ImageF low;
    ImageF high;
};

constexpr double kDefaultGuidedEps = 1e-2;
constexpr int kDefaultKernelSize = 64;

/// Per-pixel max-over-channels minus min-over-channels. RGB input only.
GuidanceImage residue_channel(const ImageF& img);

/// Per-channel version: G^c = I^c - min_d I^d. Its channel max equals the
/// residue channel and it cancels achromatic offsets the same way.
GuidanceImage colored_residue(const ImageF& img);

/// Guided filter (local linear model q = a*guide + b over box windows of
/// side 2*radius+1, coefficients re-averaged over the windows). A
/// single-channel guide filters every image channel; a 3-channel guide is
/// applied channel-by-channel.
ImageF guided_filter(const ImageF& img, const GuidanceImage& guide, int radius, double eps);

/// Low/high split: the guided-filter smoothing of `img` at each kernel size
/// (a power of two >= 2, window radius k/2) is the low-frequency candidate;
/// candidates are averaged uniformly. high = img - low, exactly.
FrequencyPair decompose(const ImageF& img, const GuidanceImage& guide,
                        const std::vector<int>& kernel_sizes = {kDefaultKernelSize},
                        double eps = kDefaultGuidedEps);

}  // namespace rainkit

#endif  // RAINKIT_DECOMPOSE_HPP
