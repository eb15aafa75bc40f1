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

#ifndef RAINKIT_IMAGE_HPP
#define RAINKIT_IMAGE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainkit {

/// Planar-interleaved float image, row-major, values nominally in [0,1].
/// Channels are restricted to 1 (grayscale) or 3 (RGB). Instances are
/// treated as immutable once filled; sharing read-only across threads is
/// safe.
struct ImageF {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<float> data;

    ImageF() = default;

    ImageF(int h, int w, int c, float fill = 0.0f)
        : height(h), width(w), channels(c),
          data(static_cast<std::size_t>(h) * w * c, fill) {
        if (h <= 0 || w <= 0 || (c != 1 && c != 3)) {
            throw std::invalid_argument("ImageF: dimensions must be positive and channels 1 or 3");
        }
    }

    std::size_t index(int y, int x, int c = 0) const {
        return (static_cast<std::size_t>(y) * width + x) * channels + c;
    }

    float& at(int y, int x, int c = 0) { return data[index(y, x, c)]; }
    float at(int y, int x, int c = 0) const { return data[index(y, x, c)]; }

    std::size_t pixel_count() const {
        return static_cast<std::size_t>(height) * width;
    }

    bool same_shape(const ImageF& o) const {
        return height == o.height && width == o.width && channels == o.channels;
    }

    bool same_extent(const ImageF& o) const {
        return height == o.height && width == o.width;
    }
};

/// Scene depth, one value per pixel, nonnegative. `normalized` marks maps
/// rescaled into [0,1]; raw maps keep their source units (e.g. meters).
struct DepthMap {
    int height = 0;
    int width = 0;
    std::vector<float> data;
    bool normalized = false;

    DepthMap() = default;

    DepthMap(int h, int w, float fill = 0.0f)
        : height(h), width(w), data(static_cast<std::size_t>(h) * w, fill) {
        if (h <= 0 || w <= 0) {
            throw std::invalid_argument("DepthMap: dimensions must be positive");
        }
    }

    float& at(int y, int x) { return data[static_cast<std::size_t>(y) * width + x]; }
    float at(int y, int x) const { return data[static_cast<std::size_t>(y) * width + x]; }

    std::size_t pixel_count() const {
        return static_cast<std::size_t>(height) * width;
    }
};

/// Rescale a depth map so its maximum becomes exactly 1. An all-zero map
/// (flat scene at the camera plane) passes through unchanged but is flagged
/// normalized. Idempotent.
DepthMap normalize_depth(const DepthMap& d);

/// Rec.601 luma for RGB images; identity for grayscale. Accepts signed
/// inputs (used on high-frequency residuals).
ImageF luminance(const ImageF& img);

inline float clamp01(float v) { return v < 0.0f ? 0.0f : (v > 1.0f ? 1.0f : v); }

}  // namespace rainkit

#endif  // RAINKIT_IMAGE_HPP
