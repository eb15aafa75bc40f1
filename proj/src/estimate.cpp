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

#include "rainkit/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "rainkit/image_io.hpp"
#include "rainkit/kernels.hpp"

namespace rainkit {

AtmosphericLight estimate_atmospheric_light(const ImageF& low) {
    const std::size_t n = low.pixel_count();
    const std::size_t take = std::max<std::size_t>(1, n / 100);

    // Rank by (luminance, r, g, b) so ties resolve identically for any
    // pixel ordering; the result is a pure multiset statistic.
    const ImageF lum = luminance(low);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lum.data[a] != lum.data[b]) return lum.data[a] > lum.data[b];
        for (int c = 0; c < low.channels; ++c) {
            const float va = low.data[a * low.channels + c];
            const float vb = low.data[b * low.channels + c];
            if (va != vb) return va > vb;
        }
        return false;
    });

    double sum[3] = {0.0, 0.0, 0.0};
    for (std::size_t r = 0; r < take; ++r) {
        const std::size_t i = order[r];
        for (int c = 0; c < 3; ++c) {
            sum[c] += low.data[i * low.channels + (low.channels == 1 ? 0 : c)];
        }
    }
    AtmosphericLight a;
    for (int c = 0; c < 3; ++c) {
        a.rgb[static_cast<std::size_t>(c)] = static_cast<float>(sum[c] / static_cast<double>(take));
    }
    return a;
}

Transmission estimate_transmission(const ImageF& low, const AtmosphericLight& atm, double omega,
                                   int window, float t_min) {
    for (float a : atm.rgb) {
        if (!(a > 0.0f)) {
            throw std::invalid_argument("estimate_transmission: airlight components must be > 0");
        }
    }

    ImageF ratio(low.height, low.width, 1);
    const std::size_t n = low.pixel_count();
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        float m = std::numeric_limits<float>::max();
        for (int c = 0; c < low.channels; ++c) {
            const float a = atm.rgb[static_cast<std::size_t>(low.channels == 1 ? 0 : c)];
            m = std::min(m, low.data[i * low.channels + c] / a);
        }
        ratio.data[i] = m;
    }

    const ImageF dark = min_filter(ratio, window);

    Transmission t;
    t.map = ImageF(low.height, low.width, 1);
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        const float v = 1.0f - static_cast<float>(omega) * dark.data[i];
        t.map.data[i] = std::clamp(v, t_min, 1.0f);
    }
    return t;
}

StreakMap estimate_streaks(const ImageF& high, float tau) {
    const ImageF lum = luminance(high);
    StreakMap s;
    s.map = ImageF(high.height, high.width, 1);
    const std::size_t n = high.pixel_count();
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (std::size_t i = 0; i < n; ++i) {
        const float v = std::max(lum.data[i], 0.0f);
        s.map.data[i] = v >= tau ? v : 0.0f;
    }
    return s;
}

namespace {

void require_range01(const ImageF& img, const std::string& name) {
    for (float v : img.data) {
        if (!(v >= 0.0f && v <= 1.0f)) {
            throw std::runtime_error("external params: " + name + " has values outside [0,1]");
        }
    }
}

}  // namespace

ParamEstimate load_external_params(const std::string& dir) {
    ParamEstimate est;
    est.source = ParamSource::external;

    est.streaks.map = load_image(dir + "/streaks.png");
    require_range01(est.streaks.map, "streaks.png");

    ImageF trans = load_image(dir + "/trans.png");
    if (trans.channels != 1) {
        throw std::runtime_error("external params: trans.png must be grayscale");
    }
    require_range01(trans, "trans.png");
    est.trans.map = std::move(trans);

    std::ifstream f(dir + "/atm.json");
    if (!f) throw std::runtime_error("external params: missing atm.json in " + dir);
    nlohmann::json j;
    f >> j;
    if (!j.contains("a") || !j["a"].is_array() || j["a"].size() != 3) {
        throw std::runtime_error("external params: atm.json must hold {\"a\": [r,g,b]}");
    }
    for (int c = 0; c < 3; ++c) {
        const double v = j["a"][static_cast<std::size_t>(c)].get<double>();
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::runtime_error("external params: airlight component outside [0,1]");
        }
        est.atm.rgb[static_cast<std::size_t>(c)] = static_cast<float>(v);
    }

    if (!est.streaks.map.same_extent(est.trans.map)) {
        throw std::runtime_error("external params: streaks.png and trans.png shapes differ");
    }
    return est;
}

void save_external_params(const std::string& dir, const StreakMap& streaks,
                          const Transmission& trans, const AtmosphericLight& atm) {
    save_image(dir + "/streaks.png", streaks.map, 16);
    save_image(dir + "/trans.png", trans.map, 16);
    nlohmann::json j;
    j["a"] = {atm.rgb[0], atm.rgb[1], atm.rgb[2]};
    std::ofstream f(dir + "/atm.json");
    if (!f) throw std::runtime_error("cannot write atm.json in " + dir);
    f << j.dump(2) << "\n";
}

ImageF derain(const ImageF& rain, const ParamEstimate& params, float t_min) {
    return reconstruct(rain, params.streaks, params.trans, params.atm, t_min);
}

}  // namespace rainkit
