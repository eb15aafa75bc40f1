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

#include "rainkit/rain_model.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

namespace rainkit {

namespace {

void require_streak_shape(const ImageF& scene, const StreakMap& streaks) {
    if (!scene.same_extent(streaks.map) ||
        (streaks.map.channels != 1 && streaks.map.channels != scene.channels)) {
        throw std::invalid_argument("streak map shape does not match scene");
    }
}

void require_trans_shape(const ImageF& scene, const Transmission& trans) {
    if (trans.map.channels != 1 || !scene.same_extent(trans.map)) {
        throw std::invalid_argument("transmission map shape does not match scene");
    }
}

inline float streak_at(const StreakMap& s, std::size_t pixel, int c) {
    return s.map.channels == 1 ? s.map.data[pixel] : s.map.data[pixel * 3 + c];
}

}  // namespace

ImageF compose_simple(const ImageF& scene, const StreakMap& streaks) {
    require_streak_shape(scene, streaks);
    ImageF out(scene.height, scene.width, scene.channels);
    const std::size_t n = scene.pixel_count();
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        for (int c = 0; c < scene.channels; ++c) {
            out.data[i * scene.channels + c] =
                clamp01(scene.data[i * scene.channels + c] + streak_at(streaks, i, c));
        }
    }
    return out;
}

ImageF compose(const ImageF& scene, const StreakMap& streaks, const Transmission& trans,
               const AtmosphericLight& atm) {
    require_streak_shape(scene, streaks);
    require_trans_shape(scene, trans);
    ImageF out(scene.height, scene.width, scene.channels);
    const std::size_t n = scene.pixel_count();
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        const float t = trans.map.data[i];
        for (int c = 0; c < scene.channels; ++c) {
            const float radiance = scene.data[i * scene.channels + c] + streak_at(streaks, i, c);
            out.data[i * scene.channels + c] =
                clamp01(t * radiance + (1.0f - t) * atm.rgb[static_cast<std::size_t>(c)]);
        }
    }
    return out;
}

ImageF reconstruct(const ImageF& rain, const StreakMap& streaks, const Transmission& trans,
                   const AtmosphericLight& atm, float t_min) {
    if (!(t_min > 0.0f && t_min <= 1.0f)) {
        throw std::invalid_argument("reconstruct: t_min must be in (0,1]");
    }
    require_streak_shape(rain, streaks);
    require_trans_shape(rain, trans);
    ImageF out(rain.height, rain.width, rain.channels);
    const std::size_t n = rain.pixel_count();
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        const float t = std::max(trans.map.data[i], t_min);
        for (int c = 0; c < rain.channels; ++c) {
            const float a = atm.rgb[static_cast<std::size_t>(c)];
            const float scene =
                (rain.data[i * rain.channels + c] - (1.0f - t) * a) / t - streak_at(streaks, i, c);
            out.data[i * rain.channels + c] = clamp01(scene);
        }
    }
    return out;
}

Transmission transmission_from_depth(const DepthMap& depth, double beta) {
    if (!depth.normalized) {
        throw std::invalid_argument(
            "transmission_from_depth: depth must be normalized first (see normalize_depth)");
    }
    if (!(beta > 0.0)) {
        throw std::invalid_argument("transmission_from_depth: beta must be > 0");
    }
    Transmission t;
    t.map = ImageF(depth.height, depth.width, 1);
    const std::size_t n = depth.pixel_count();
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        t.map.data[i] = static_cast<float>(std::exp(-beta * depth.data[i]));
    }
    return t;
}

DepthMap relative_depth(const Transmission& trans) {
    const std::size_t n = trans.map.pixel_count();
    bool clamped = false;
    std::vector<double> neglog(n);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        float t = trans.map.data[i];
        if (t <= 0.0f) {
            t = kDefaultTransmissionFloor;
            clamped = true;
        }
        neglog[i] = -std::log(static_cast<double>(t));
        lo = std::min(lo, neglog[i]);
        hi = std::max(hi, neglog[i]);
    }
    if (clamped) {
        std::cerr << "relative_depth: zero transmission clamped to "
                  << kDefaultTransmissionFloor << " before log\n";
    }

    DepthMap d(trans.map.height, trans.map.width);
    d.normalized = true;
    const double range = hi - lo;
    if (range > 0.0) {
#ifdef _OPENMP
#pragma omp parallel for
#endif
        for (std::size_t i = 0; i < n; ++i) {
            d.data[i] = static_cast<float>((neglog[i] - lo) / range);
        }
    }
    return d;
}

}  // namespace rainkit
