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

#include "rainkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rainkit/kernels.hpp"

namespace rainkit {

namespace {

constexpr int kSsimWindow = 11;
constexpr double kSsimSigma = 1.5;
constexpr double kSsimC1 = 0.01 * 0.01;  // (K1 * L)^2, L = 1
constexpr double kSsimC2 = 0.03 * 0.03;

void require_same_shape(const ImageF& a, const ImageF& b, const char* who) {
    if (!a.same_shape(b)) {
        throw std::invalid_argument(std::string(who) + ": image shapes differ");
    }
}

// Mean SSIM of one channel over all fully interior 11x11 windows.
double ssim_channel(const ImageF& a, const ImageF& b, int channel) {
    const int h = a.height, w = a.width;
    const int r = kSsimWindow / 2;
    const int hv = h - 2 * r, wv = w - 2 * r;

    double weights[kSsimWindow];
    double wsum = 0.0;
    for (int i = 0; i < kSsimWindow; ++i) {
        const int d = i - r;
        weights[i] = std::exp(-0.5 * d * d / (kSsimSigma * kSsimSigma));
        wsum += weights[i];
    }
    for (double& wv2 : weights) wv2 /= wsum;

    // Horizontal weighted sums of a, b, a^2, b^2, ab on valid columns.
    const std::size_t stride = static_cast<std::size_t>(wv);
    std::vector<double> ha(static_cast<std::size_t>(h) * wv), hb(ha.size()), haa(ha.size()),
        hbb(ha.size()), hab(ha.size());
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (int y = 0; y < h; ++y) {
        for (int xv = 0; xv < wv; ++xv) {
            double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
            for (int k = 0; k < kSsimWindow; ++k) {
                const double va = a.at(y, xv + k, channel);
                const double vb = b.at(y, xv + k, channel);
                sa += weights[k] * va;
                sb += weights[k] * vb;
                saa += weights[k] * va * va;
                sbb += weights[k] * vb * vb;
                sab += weights[k] * va * vb;
            }
            const std::size_t idx = static_cast<std::size_t>(y) * stride + xv;
            ha[idx] = sa;
            hb[idx] = sb;
            haa[idx] = saa;
            hbb[idx] = sbb;
            hab[idx] = sab;
        }
    }

    // Vertical pass and per-row partial means, combined in row order so the
    // result does not depend on the thread count.
    std::vector<double> row_sum(static_cast<std::size_t>(hv), 0.0);
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (int yv = 0; yv < hv; ++yv) {
        double acc = 0.0;
        for (int xv = 0; xv < wv; ++xv) {
            double mu_a = 0, mu_b = 0, e_aa = 0, e_bb = 0, e_ab = 0;
            for (int k = 0; k < kSsimWindow; ++k) {
                const std::size_t idx = static_cast<std::size_t>(yv + k) * stride + xv;
                mu_a += weights[k] * ha[idx];
                mu_b += weights[k] * hb[idx];
                e_aa += weights[k] * haa[idx];
                e_bb += weights[k] * hbb[idx];
                e_ab += weights[k] * hab[idx];
            }
            const double var_a = e_aa - mu_a * mu_a;
            const double var_b = e_bb - mu_b * mu_b;
            const double cov = e_ab - mu_a * mu_b;
            const double num = (2.0 * mu_a * mu_b + kSsimC1) * (2.0 * cov + kSsimC2);
            const double den = (mu_a * mu_a + mu_b * mu_b + kSsimC1) * (var_a + var_b + kSsimC2);
            acc += num / den;
        }
        row_sum[static_cast<std::size_t>(yv)] = acc;
    }
    double total = 0.0;
    for (double v : row_sum) total += v;
    return total / (static_cast<double>(hv) * wv);
}

}  // namespace

double mse(const ImageF& a, const ImageF& b) {
    require_same_shape(a, b, "mse");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = static_cast<double>(a.data[i]) - b.data[i];
        acc += d * d;
    }
    return acc / static_cast<double>(a.data.size());
}

double psnr(const ImageF& a, const ImageF& b, double peak) {
    if (!(peak > 0.0)) throw std::invalid_argument("psnr: peak must be > 0");
    const double err = mse(a, b);
    if (err == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / err);
}

double ssim(const ImageF& a, const ImageF& b) {
    require_same_shape(a, b, "ssim");
    if (a.height < kSsimWindow || a.width < kSsimWindow) {
        throw std::invalid_argument("ssim: image smaller than the 11x11 window");
    }
    double acc = 0.0;
    for (int c = 0; c < a.channels; ++c) acc += ssim_channel(a, b, c);
    return acc / a.channels;
}

PhysicsLossReport physics_loss(const ParamEstimate& est, const RainSample& gt,
                               const LossWeights& lambdas) {
    PhysicsLossReport r;
    r.lambdas = lambdas;
    r.l_s = mse(est.streaks.map, gt.streaks.map);
    double acc = 0.0;
    for (int c = 0; c < 3; ++c) {
        const double d = static_cast<double>(est.atm.rgb[static_cast<std::size_t>(c)]) -
                         gt.atm.rgb[static_cast<std::size_t>(c)];
        acc += d * d;
    }
    r.l_a = acc / 3.0;
    r.l_t = mse(est.trans.map, gt.trans_blur.map);
    r.l_theta = lambdas.streaks * r.l_s + lambdas.atm * r.l_a + lambdas.trans * r.l_t;
    return r;
}

double atm_light_error(const AtmosphericLight& a, const AtmosphericLight& gt) {
    double acc = 0.0;
    for (int c = 0; c < 3; ++c) {
        acc += std::abs(static_cast<double>(a.rgb[static_cast<std::size_t>(c)]) -
                        gt.rgb[static_cast<std::size_t>(c)]);
    }
    return acc;
}

double streak_leakage(const ImageF& low, const StreakMap& streaks_gt) {
    if (streaks_gt.map.channels != 1 || !low.same_extent(streaks_gt.map)) {
        throw std::invalid_argument("streak_leakage: single-channel streak map matching the image expected");
    }
    const ImageF smooth = gaussian_blur(low, 4.0);
    ImageF hf(low.height, low.width, low.channels);
    for (std::size_t i = 0; i < low.data.size(); ++i) {
        hf.data[i] = low.data[i] - smooth.data[i];
    }
    const ImageF lum = luminance(hf);

    double acc = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < lum.data.size(); ++i) {
        if (streaks_gt.map.data[i] > 0.1f) {
            acc += std::abs(static_cast<double>(lum.data[i]));
            ++count;
        }
    }
    return acc / static_cast<double>(std::max<std::size_t>(count, 1));
}

EvalReport evaluate(const ImageF& a, const ImageF& b, double peak) {
    EvalReport r;
    r.mse = mse(a, b);
    r.psnr = psnr(a, b, peak);
    r.ssim = ssim(a, b);
    return r;
}

}  // namespace rainkit
