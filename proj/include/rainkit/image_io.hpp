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

#ifndef RAINKIT_IMAGE_IO_HPP
#define RAINKIT_IMAGE_IO_HPP

#include <optional>
#include <string>

#include "rainkit/image.hpp"

namespace rainkit {

/// Load an 8- or 16-bit grayscale/RGB PNG. Samples are scaled to [0,1] by
/// 255 or 65535. Anything else (palette, alpha, other depths) fails with a
/// descriptive error.
ImageF load_image(const std::string& path);

/// Write a PNG, quantizing to the requested bit depth (8 or 16, default 16)
/// with round-to-nearest. Values are clamped to [0,1] first.
void save_image(const std::string& path, const ImageF& img, int bit_depth = 16);

/// Load a depth map. `.pfm` files must be grayscale ("Pf"); the scale line's
/// sign selects endianness as usual. 16-bit grayscale PNGs are accepted when
/// `png_scale` is given: depth = raw_sample * png_scale. Depths must be
/// finite and nonnegative. The result is never marked normalized.
DepthMap load_depth(const std::string& path, std::optional<double> png_scale = std::nullopt);

/// Write a grayscale little-endian PFM (scale line -1.0).
void save_depth_pfm(const std::string& path, const DepthMap& d);

}  // namespace rainkit

#endif  // RAINKIT_IMAGE_IO_HPP
