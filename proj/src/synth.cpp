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

#include "rainkit/synth.hpp"

#include <algorithm>
#include <cmath>

namespace rainkit {

RainParams sample_params(RngStream& rng) {
    RainParams p;
    // Draw order is part of the reproducibility contract; do not reorder.
    p.noise_mu = -rng.uniform(0.0, 0.2) - 0.8;
    p.noise_sigma = rng.uniform(0.0, 0.3) + 0.7;
    p.streak_len = std::max(1, static_cast<int>(std::lround(rng.uniform(0.0, 40.0) + 20.0)));
    p.streak_angle = rng.uniform(80.0, 100.0);
    p.beta = rng.uniform(3.0, 4.2);
    p.trans_blur_sigma = std::max(0.1, rng.normal(5.0, 1.5));
    p.atm = rng.uniform(0.3, 0.8);
    p.blur_scale = 1.5;
    p.seed = rng.next_u64();
    return p;
}

ImageF noise_map(int height, int width, double mu, double sigma, RngStream& rng) {
    if (!(sigma > 0.0)) throw std::invalid_argument("noise_map: sigma must be > 0");
    ImageF out(height, width, 1);
    const std::uint64_t base = rng.counter();
    const std::size_t n = out.pixel_count();
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        const double v = rng.normal_at(base + 2 * i, mu, sigma);
        out.data[i] = clamp01(static_cast<float>(v));
    }
    rng.advance(2 * n);
    return out;
}

Kernel2D motion_kernel(int len, double angle_deg) {
    if (len < 1) throw std::invalid_argument("motion_kernel: length must be >= 1");
    if (!(angle_deg >= 0.0 && angle_deg < 180.0)) {
        throw std::invalid_argument("motion_kernel: angle must be in [0,180)");
    }

    const double rad = angle_deg * 3.14159265358979323846 / 180.0;
    double dx = std::cos(rad);
    double dy = std::sin(rad);
    // Snap to the axes so 0/90-degree kernels have exact 1-pixel support.
    if (std::abs(dx) < 1e-12) dx = 0.0;
    if (std::abs(dy) < 1e-12) dy = 0.0;

    const double half = 0.5 * (len - 1);
    const int rx = static_cast<int>(std::ceil(half * std::abs(dx)));
    const int ry = static_cast<int>(std::ceil(half * std::abs(dy)));

    Kernel2D k;
    k.height = 2 * ry + 1;
    k.width = 2 * rx + 1;
    k.data.assign(static_cast<std::size_t>(k.height) * k.width, 0.0f);

    // Tent anti-aliasing: weight = 1 - distance to the centered segment.
    // Grid y points up here; the raster flip is irrelevant by symmetry.
    double sum = 0.0;
    for (int iy = -ry; iy <= ry; ++iy) {
        for (int ix = -rx; ix <= rx; ++ix) {
            const double proj = std::clamp(ix * dx + iy * dy, -half, half);
            const double ex = ix - proj * dx;
            const double ey = iy - proj * dy;
            const double dist = std::sqrt(ex * ex + ey * ey);
            const double wv = 1.0 - dist;
            if (wv > 0.0) {
                k.data[static_cast<std::size_t>(iy + ry) * k.width + (ix + rx)] =
                    static_cast<float>(wv);
                sum += wv;
            }
        }
    }
    for (float& wv : k.data) wv = static_cast<float>(wv / sum);

    // Trim all-zero border rows/columns; symmetry keeps the center anchored.
    int trim_y = 0;
    while (trim_y < k.height / 2) {
        bool empty = true;
        for (int x = 0; x < k.width && empty; ++x) {
            if (k.at(trim_y, x) != 0.0f || k.at(k.height - 1 - trim_y, x) != 0.0f) empty = false;
        }
        if (!empty) break;
        ++trim_y;
    }
    int trim_x = 0;
    while (trim_x < k.width / 2) {
        bool empty = true;
        for (int y = 0; y < k.height && empty; ++y) {
            if (k.at(y, trim_x) != 0.0f || k.at(y, k.width - 1 - trim_x) != 0.0f) empty = false;
        }
        if (!empty) break;
        ++trim_x;
    }
    if (trim_y > 0 || trim_x > 0) {
        Kernel2D t;
        t.height = k.height - 2 * trim_y;
        t.width = k.width - 2 * trim_x;
        t.data.resize(static_cast<std::size_t>(t.height) * t.width);
        for (int y = 0; y < t.height; ++y) {
            for (int x = 0; x < t.width; ++x) {
                t.data[static_cast<std::size_t>(y) * t.width + x] = k.at(y + trim_y, x + trim_x);
            }
        }
        return t;
    }
    return k;
}

StreakMap synthesize_streaks(const ImageF& noise, const Kernel2D& kernel) {
    if (noise.channels != 1) {
        throw std::invalid_argument("synthesize_streaks: noise map must be single-channel");
    }
    StreakMap s;
    s.map = convolve(noise, kernel);
    for (float& v : s.map.data) v = clamp01(v);
    return s;
}

ImageF depth_variable_blur(const ImageF& img, const DepthMap& depth, double scale, int levels) {
    if (img.height != depth.height || img.width != depth.width) {
        throw std::invalid_argument("depth_variable_blur: depth shape does not match image");
    }
    if (!depth.normalized) {
        throw std::invalid_argument("depth_variable_blur: depth must be normalized first");
    }
    if (scale < 0.0) throw std::invalid_argument("depth_variable_blur: scale must be >= 0");
    if (levels < 2) throw std::invalid_argument("depth_variable_blur: need at least 2 levels");

    float max_depth = 0.0f;
    for (float v : depth.data) max_depth = std::max(max_depth, v);
    const double sigma_max = scale * max_depth;
    if (sigma_max == 0.0) return img;

    // Full-image blur at each quantized sigma, then per-pixel interpolation
    // between the two bracketing levels. Level 0 is the unblurred input, so
    // zero-depth pixels come out bit-identical.
    std::vector<ImageF> pyramid;
    pyramid.reserve(static_cast<std::size_t>(levels));
    pyramid.push_back(img);
    for (int j = 1; j < levels; ++j) {
        pyramid.push_back(gaussian_blur(img, sigma_max * j / (levels - 1)));
    }

    ImageF out(img.height, img.width, img.channels);
    const std::size_t n = img.pixel_count();
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        const double sigma = scale * depth.data[i];
        const double u = sigma / sigma_max * (levels - 1);
        const int j = std::min(static_cast<int>(u), levels - 2);
        const float t = static_cast<float>(u - j);
        for (int c = 0; c < img.channels; ++c) {
            const std::size_t idx = i * img.channels + c;
            out.data[idx] = (1.0f - t) * pyramid[j].data[idx] + t * pyramid[j + 1].data[idx];
        }
    }
    return out;
}

RainSample render(const ImageF& clean, const DepthMap& depth, const RainParams& params) {
    if (clean.height != depth.height || clean.width != depth.width) {
        throw std::invalid_argument("render: depth shape does not match image");
    }

    RainSample s;
    s.params = params;
    s.clean = clean;
    s.clean_blur = depth_variable_blur(clean, depth, params.blur_scale);

    RngStream noise_rng(params.seed, 0);
    const ImageF noise =
        noise_map(clean.height, clean.width, params.noise_mu, params.noise_sigma, noise_rng);
    s.streaks = synthesize_streaks(noise, motion_kernel(params.streak_len, params.streak_angle));

    s.trans = transmission_from_depth(depth, params.beta);
    s.trans_blur.map = gaussian_blur(s.trans.map, params.trans_blur_sigma);

    const float a = static_cast<float>(params.atm);
    s.atm.rgb = {a, a, a};

    s.rain = compose(s.clean_blur, s.streaks, s.trans_blur, s.atm);
    return s;
}

}  // namespace rainkit
