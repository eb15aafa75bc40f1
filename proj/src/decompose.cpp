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

#include "rainkit/decompose.hpp"

#include <algorithm>
#include <cmath>

#include "rainkit/kernels.hpp"

namespace rainkit {

GuidanceImage residue_channel(const ImageF& img) {
    if (img.channels != 3) {
        throw std::invalid_argument("residue_channel: RGB input required");
    }
    GuidanceImage g;
    g.data = ImageF(img.height, img.width, 1);
    const std::size_t n = img.pixel_count();
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        const float* px = &img.data[i * 3];
        const float mx = std::max({px[0], px[1], px[2]});
        const float mn = std::min({px[0], px[1], px[2]});
        g.data.data[i] = mx - mn;
    }
    return g;
}

GuidanceImage colored_residue(const ImageF& img) {
    if (img.channels != 3) {
        throw std::invalid_argument("colored_residue: RGB input required");
    }
    GuidanceImage g;
    g.data = ImageF(img.height, img.width, 3);
    const std::size_t n = img.pixel_count();
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        const float* px = &img.data[i * 3];
        const float mn = std::min({px[0], px[1], px[2]});
        g.data.data[i * 3 + 0] = px[0] - mn;
        g.data.data[i * 3 + 1] = px[1] - mn;
        g.data.data[i * 3 + 2] = px[2] - mn;
    }
    return g;
}

namespace {

ImageF extract_channel(const ImageF& img, int c) {
    if (img.channels == 1) return img;
    ImageF out(img.height, img.width, 1);
    const std::size_t n = img.pixel_count();
    for (std::size_t i = 0; i < n; ++i) out.data[i] = img.data[i * 3 + c];
    return out;
}

// Gray-guide guided filter for one image channel.
ImageF guided_filter_gray(const ImageF& p, const ImageF& guide, int radius, double eps) {
    const std::size_t n = p.pixel_count();

    ImageF gp(p.height, p.width, 1);
    ImageF gg(p.height, p.width, 1);
    for (std::size_t i = 0; i < n; ++i) {
        gp.data[i] = guide.data[i] * p.data[i];
        gg.data[i] = guide.data[i] * guide.data[i];
    }

    const ImageF mean_g = box_mean(guide, radius);
    const ImageF mean_p = box_mean(p, radius);
    const ImageF mean_gp = box_mean(gp, radius);
    const ImageF mean_gg = box_mean(gg, radius);

    ImageF a(p.height, p.width, 1);
    ImageF b(p.height, p.width, 1);
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        const float cov = mean_gp.data[i] - mean_g.data[i] * mean_p.data[i];
        const float var = std::max(0.0f, mean_gg.data[i] - mean_g.data[i] * mean_g.data[i]);
        const float denom = var + static_cast<float>(eps);
        const float ai = denom > 0.0f ? cov / denom : 0.0f;
        a.data[i] = ai;
        b.data[i] = mean_p.data[i] - ai * mean_g.data[i];
    }

    const ImageF mean_a = box_mean(a, radius);
    const ImageF mean_b = box_mean(b, radius);

    ImageF q(p.height, p.width, 1);
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        q.data[i] = mean_a.data[i] * guide.data[i] + mean_b.data[i];
    }
    return q;
}

}  // namespace

ImageF guided_filter(const ImageF& img, const GuidanceImage& guide, int radius, double eps) {
    if (radius < 1) throw std::invalid_argument("guided_filter: radius must be >= 1");
    if (eps < 0.0) throw std::invalid_argument("guided_filter: eps must be >= 0");
    if (!img.same_extent(guide.data)) {
        throw std::invalid_argument("guided_filter: guide shape does not match image");
    }
    if (guide.data.channels != 1 && guide.data.channels != img.channels) {
        throw std::invalid_argument("guided_filter: guide must be single-channel or match image");
    }

    if (img.channels == 1 && guide.data.channels == 1) {
        return guided_filter_gray(img, guide.data, radius, eps);
    }

    ImageF out(img.height, img.width, img.channels);
    for (int c = 0; c < img.channels; ++c) {
        const ImageF pc = extract_channel(img, c);
        const ImageF gc = guide.data.channels == 1 ? guide.data : extract_channel(guide.data, c);
        const ImageF qc = guided_filter_gray(pc, gc, radius, eps);
        const std::size_t n = img.pixel_count();
        for (std::size_t i = 0; i < n; ++i) out.data[i * img.channels + c] = qc.data[i];
    }
    return out;
}

FrequencyPair decompose(const ImageF& img, const GuidanceImage& guide,
                        const std::vector<int>& kernel_sizes, double eps) {
    if (kernel_sizes.empty()) {
        throw std::invalid_argument("decompose: kernel size list must not be empty");
    }
    for (int k : kernel_sizes) {
        if (k < 2 || (k & (k - 1)) != 0) {
            throw std::invalid_argument("decompose: kernel sizes must be powers of two >= 2");
        }
    }

    const std::size_t n = img.data.size();
    std::vector<double> acc(n, 0.0);
    for (int k : kernel_sizes) {
        const ImageF low_k = guided_filter(img, guide, k / 2, eps);
        for (std::size_t i = 0; i < n; ++i) acc[i] += low_k.data[i];
    }

    FrequencyPair fp;
    fp.low = ImageF(img.height, img.width, img.channels);
    fp.high = ImageF(img.height, img.width, img.channels);
    const double inv = 1.0 / static_cast<double>(kernel_sizes.size());
    for (std::size_t i = 0; i < n; ++i) {
        fp.low.data[i] = clamp01(static_cast<float>(acc[i] * inv));
        fp.high.data[i] = img.data[i] - fp.low.data[i];
    }
    return fp;
}

}  // namespace rainkit
