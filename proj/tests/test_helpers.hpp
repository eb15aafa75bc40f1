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

#ifndef RAINKIT_TEST_HELPERS_HPP
#define RAINKIT_TEST_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rainkit/image.hpp"
#include "rainkit/kernels.hpp"
#include "rainkit/rng.hpp"
#include "rainkit/synth.hpp"

namespace testutil {

inline std::filesystem::path temp_dir(const std::string& tag) {
    auto p = std::filesystem::temp_directory_path() / ("rainkit_test_" + tag);
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

inline rainkit::ImageF random_image(int h, int w, int c, rainkit::RngStream& rng, float lo = 0.0f,
                                    float hi = 1.0f) {
    rainkit::ImageF img(h, w, c);
    for (float& v : img.data) v = static_cast<float>(rng.uniform(lo, hi));
    return img;
}

inline rainkit::DepthMap random_depth(int h, int w, rainkit::RngStream& rng, float lo = 0.0f,
                                      float hi = 1.0f) {
    rainkit::DepthMap d(h, w);
    for (float& v : d.data) v = static_cast<float>(rng.uniform(lo, hi));
    return d;
}

/// Indoor-like chromatic background: coarse smooth color structure plus
/// low-amplitude fine detail, per-channel stretched and gamma-darkened so
/// scenes carry both colorful edges (what the residue guidance keys on)
/// and dark regions (what the dark-channel prior needs).
inline rainkit::ImageF textured_background(int h, int w, rainkit::RngStream& rng) {
    rainkit::ImageF coarse = rainkit::gaussian_blur(random_image(h, w, 3, rng), 6.0);
    const rainkit::ImageF fine = rainkit::gaussian_blur(random_image(h, w, 3, rng), 1.0);
    for (std::size_t i = 0; i < coarse.data.size(); ++i) {
        coarse.data[i] += 0.08f * (fine.data[i] - 0.5f);
    }
    for (int c = 0; c < 3; ++c) {
        float lo = 1.0f, hi = 0.0f;
        for (std::size_t i = 0; i < coarse.pixel_count(); ++i) {
            lo = std::min(lo, coarse.data[i * 3 + c]);
            hi = std::max(hi, coarse.data[i * 3 + c]);
        }
        const float range = hi > lo ? hi - lo : 1.0f;
        for (std::size_t i = 0; i < coarse.pixel_count(); ++i) {
            float& v = coarse.data[i * 3 + c];
            v = 0.02f + 0.83f * std::pow((v - lo) / range, 1.8f);
        }
    }
    return coarse;
}

/// Diagonal, vertical or radial depth ramp, squared like indoor scenes
/// (most pixels shallow, the far band reaching the maximum), normalized.
inline rainkit::DepthMap ramp_depth(int h, int w, int variant = 0) {
    rainkit::DepthMap d(h, w);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            float v = 0.0f;
            switch (variant % 3) {
                case 0: v = static_cast<float>(x + y) / static_cast<float>(w + h - 2); break;
                case 1: v = static_cast<float>(y) / static_cast<float>(h - 1); break;
                default: {  // corridor: far at the center, near at the rim
                    const float dy = (y - 0.5f * h) / (0.5f * h);
                    const float dx = (x - 0.5f * w) / (0.5f * w);
                    v = 1.0f - std::min(1.0f, std::sqrt(dx * dx + dy * dy));
                }
            }
            d.at(y, x) = v * v;
        }
    }
    return rainkit::normalize_depth(d);
}

/// Render a deterministic batch of varied samples for statistics. Scene
/// depth tops out between 0.5 and 1.0 across the batch, as under a
/// dataset-global depth normalization.
inline std::vector<rainkit::RainSample> render_batch(int n, int h, int w, std::uint64_t seed) {
    std::vector<rainkit::RainSample> out;
    out.reserve(static_cast<std::size_t>(n));
    rainkit::RngStream root(seed, 0);
    for (int i = 0; i < n; ++i) {
        rainkit::RngStream rng = rainkit::split_stream(root, static_cast<std::uint64_t>(i));
        rainkit::RngStream bg(seed ^ 0xB0B0B0B0ull, static_cast<std::uint64_t>(i));
        const rainkit::ImageF clean = textured_background(h, w, bg);
        rainkit::DepthMap depth = ramp_depth(h, w, i);
        const float scene_max = 0.3f + 0.1f * static_cast<float>(i % 5);
        for (float& v : depth.data) v *= scene_max;
        out.push_back(rainkit::render(clean, depth, rainkit::sample_params(rng)));
    }
    return out;
}

inline std::uint64_t fnv1a(const void* bytes, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(bytes);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t hash_image(const rainkit::ImageF& img, std::uint64_t h = 0xcbf29ce484222325ull) {
    h = fnv1a(&img.height, sizeof img.height, h);
    h = fnv1a(&img.width, sizeof img.width, h);
    h = fnv1a(&img.channels, sizeof img.channels, h);
    return fnv1a(img.data.data(), img.data.size() * sizeof(float), h);
}

inline double max_abs_diff(const rainkit::ImageF& a, const rainkit::ImageF& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        m = std::max(m, std::abs(static_cast<double>(a.data[i]) - b.data[i]));
    }
    return m;
}

inline double pearson(const std::vector<float>& a, const std::vector<float>& b) {
    const std::size_t n = a.size();
    double ma = 0, mb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double saa = 0, sbb = 0, sab = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = a[i] - ma, db = b[i] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    if (saa == 0.0 || sbb == 0.0) return 0.0;
    return sab / std::sqrt(saa * sbb);
}

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

/// Pixels of a rendered sample where the inverse model is well conditioned:
/// transmission above the floor and composition away from the clamp rails.
inline std::vector<char> stable_mask(const rainkit::RainSample& s) {
    std::vector<char> mask(s.rain.pixel_count(), 1);
    for (std::size_t i = 0; i < mask.size(); ++i) {
        const float t = s.trans_blur.map.data[i];
        if (t < rainkit::kDefaultTransmissionFloor) {
            mask[i] = 0;
            continue;
        }
        for (int c = 0; c < 3; ++c) {
            const float raw = t * (s.clean_blur.data[i * 3 + c] + s.streaks.map.data[i]) +
                              (1.0f - t) * s.atm.rgb[static_cast<std::size_t>(c)];
            if (raw <= 0.0f || raw >= 1.0f) mask[i] = 0;
        }
    }
    return mask;
}

inline double masked_max_err(const rainkit::ImageF& a, const rainkit::ImageF& b,
                             const std::vector<char>& mask) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.pixel_count(); ++i) {
        if (!mask[i]) continue;
        for (int c = 0; c < a.channels; ++c) {
            m = std::max(m, std::abs(static_cast<double>(a.data[i * a.channels + c]) -
                                     b.data[i * b.channels + c]));
        }
    }
    return m;
}

/// Share of masked energy carried by `part` relative to `whole`:
/// sum(S*|part|) / sum(S*|whole|).
inline double streak_energy_fraction(const rainkit::StreakMap& streaks, const rainkit::ImageF& part,
                                     const rainkit::ImageF& whole) {
    double num = 0.0, den = 0.0;
    const std::size_t n = part.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const float s = streaks.map.data[i];
        for (int c = 0; c < part.channels; ++c) {
            num += s * std::abs(part.data[i * part.channels + c]);
            den += s * std::abs(whole.data[i * whole.channels + c]);
        }
    }
    return den > 0.0 ? num / den : 0.0;
}

}  // namespace testutil

#endif  // RAINKIT_TEST_HELPERS_HPP
