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

#include "rainkit/image.hpp"

namespace rainkit {

DepthMap normalize_depth(const DepthMap& d) {
    float maxval = 0.0f;
    const std::size_t n = d.data.size();
#ifdef _OPENMP
#pragma omp parallel for reduction(max : maxval)
#endif
    for (std::size_t i = 0; i < n; ++i) {
        maxval = maxval > d.data[i] ? maxval : d.data[i];
    }

    DepthMap out = d;
    out.normalized = true;
    if (maxval <= 0.0f) {
        return out;  // flat scene at the camera plane
    }
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        out.data[i] = d.data[i] / maxval;
    }
    return out;
}

ImageF luminance(const ImageF& img) {
    if (img.channels == 1) {
        return img;
    }
    ImageF out(img.height, img.width, 1);
    const std::size_t n = img.pixel_count();
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        const float* px = &img.data[i * 3];
        out.data[i] = 0.299f * px[0] + 0.587f * px[1] + 0.114f * px[2];
    }
    return out;
}

}  // namespace rainkit
