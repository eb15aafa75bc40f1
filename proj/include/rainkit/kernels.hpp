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

#ifndef RAINKIT_KERNELS_HPP
#define RAINKIT_KERNELS_HPP

#include <vector>

#include "rainkit/image.hpp"

// Data-parallel image kernels. Every routine here writes each output pixel
// independently (no cross-pixel floating-point reductions), so results are
// identical for any thread count. Accumulation is done in double.

namespace rainkit {

/// Small dense 2D stencil, row-major, odd dimensions, centered anchor.
struct Kernel2D {
    int height = 0;
    int width = 0;
    std::vector<float> data;

    float at(int y, int x) const { return data[static_cast<std::size_t>(y) * width + x]; }
};

/// Mirror index into [0,n) with edge duplication: -1 -> 0, n -> n-1.
inline int reflect_index(int i, int n) {
    if (n == 1) return 0;
    const int period = 2 * n;
    i %= period;
    if (i < 0) i += period;
    return i < n ? i : period - 1 - i;
}

/// Per-channel box mean over a (2*radius+1)^2 window clipped to the image
/// (border windows shrink; the divisor is the actual pixel count).
ImageF box_mean(const ImageF& img, int radius);

/// Separable Gaussian blur, kernel radius ceil(3*sigma), mirrored borders.
/// sigma == 0 returns the input unchanged.
ImageF gaussian_blur(const ImageF& img, double sigma);

/// Correlate a single-channel image with a dense stencil, mirrored borders.
/// Zero taps are skipped, which makes thin line kernels cheap.
ImageF convolve(const ImageF& img, const Kernel2D& kernel);

/// Per-channel minimum over a window of side `window` clipped to the image.
ImageF min_filter(const ImageF& img, int window);

}  // namespace rainkit

#endif  // RAINKIT_KERNELS_HPP
