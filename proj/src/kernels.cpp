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

#include "rainkit/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace rainkit {

namespace {

// Sliding-window sums along x for one row, clipped at the borders.
// Each row is processed serially; rows run in parallel.
void row_box_sum(const float* src, double* dst, int width, int channels, int radius) {
    for (int c = 0; c < channels; ++c) {
        double acc = 0.0;
        const int r = std::min(radius, width - 1);
        for (int x = 0; x <= r; ++x) acc += src[x * channels + c];
        dst[c] = acc;
        for (int x = 1; x < width; ++x) {
            const int add = x + radius;
            const int drop = x - radius - 1;
            if (add < width) acc += src[add * channels + c];
            if (drop >= 0) acc -= src[drop * channels + c];
            dst[x * channels + c] = acc;
        }
    }
}

}  // namespace

ImageF box_mean(const ImageF& img, int radius) {
    if (radius < 0) throw std::invalid_argument("box_mean: radius must be >= 0");
    const int h = img.height, w = img.width, ch = img.channels;

    // Horizontal clipped sums.
    std::vector<double> hsum(img.data.size());
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (int y = 0; y < h; ++y) {
        row_box_sum(&img.data[img.index(y, 0)], &hsum[img.index(y, 0)], w, ch, radius);
    }

    // Vertical clipped sums of the horizontal sums, then divide by the
    // actual window area.
    ImageF out(h, w, ch);
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (int x = 0; x < w; ++x) {
        const int x0 = std::max(0, x - radius);
        const int x1 = std::min(w - 1, x + radius);
        const int count_x = x1 - x0 + 1;
        for (int c = 0; c < ch; ++c) {
            double acc = 0.0;
            const int r = std::min(radius, h - 1);
            for (int y = 0; y <= r; ++y) acc += hsum[img.index(y, x, c)];
            for (int y = 0; y < h; ++y) {
                if (y > 0) {
                    const int add = y + radius;
                    const int drop = y - radius - 1;
                    if (add < h) acc += hsum[img.index(add, x, c)];
                    if (drop >= 0) acc -= hsum[img.index(drop, x, c)];
                }
                const int y0 = std::max(0, y - radius);
                const int y1 = std::min(h - 1, y + radius);
                const int count = count_x * (y1 - y0 + 1);
                out.at(y, x, c) = static_cast<float>(acc / count);
            }
        }
    }
    return out;
}

ImageF gaussian_blur(const ImageF& img, double sigma) {
    if (sigma < 0.0) throw std::invalid_argument("gaussian_blur: sigma must be >= 0");
    if (sigma == 0.0) return img;

    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> weights(2 * radius + 1);
    double wsum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        weights[i + radius] = std::exp(-0.5 * (i * i) / (sigma * sigma));
        wsum += weights[i + radius];
    }
    for (double& wv : weights) wv /= wsum;

    const int h = img.height, w = img.width, ch = img.channels;
    ImageF tmp(h, w, ch);
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < ch; ++c) {
                double acc = 0.0;
                for (int k = -radius; k <= radius; ++k) {
                    acc += weights[k + radius] * img.at(y, reflect_index(x + k, w), c);
                }
                tmp.at(y, x, c) = static_cast<float>(acc);
            }
        }
    }
    ImageF out(h, w, ch);
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < ch; ++c) {
                double acc = 0.0;
                for (int k = -radius; k <= radius; ++k) {
                    acc += weights[k + radius] * tmp.at(reflect_index(y + k, h), x, c);
                }
                out.at(y, x, c) = static_cast<float>(acc);
            }
        }
    }
    return out;
}

ImageF convolve(const ImageF& img, const Kernel2D& kernel) {
    if (img.channels != 1) throw std::invalid_argument("convolve: single-channel input expected");
    if (kernel.height % 2 == 0 || kernel.width % 2 == 0) {
        throw std::invalid_argument("convolve: kernel dimensions must be odd");
    }

    struct Tap {
        int dy, dx;
        float w;
    };
    std::vector<Tap> taps;
    taps.reserve(kernel.data.size());
    const int ky0 = kernel.height / 2, kx0 = kernel.width / 2;
    for (int ky = 0; ky < kernel.height; ++ky) {
        for (int kx = 0; kx < kernel.width; ++kx) {
            const float wv = kernel.at(ky, kx);
            if (wv != 0.0f) taps.push_back({ky - ky0, kx - kx0, wv});
        }
    }

    const int h = img.height, w = img.width;
    ImageF out(h, w, 1);
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (const Tap& t : taps) {
                acc += static_cast<double>(t.w) *
                       img.at(reflect_index(y + t.dy, h), reflect_index(x + t.dx, w));
            }
            out.at(y, x) = static_cast<float>(acc);
        }
    }
    return out;
}

ImageF min_filter(const ImageF& img, int window) {
    if (window < 1 || window % 2 == 0) {
        throw std::invalid_argument("min_filter: window must be odd and >= 1");
    }
    const int radius = window / 2;
    const int h = img.height, w = img.width, ch = img.channels;

    ImageF tmp(h, w, ch);
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int x0 = std::max(0, x - radius);
            const int x1 = std::min(w - 1, x + radius);
            for (int c = 0; c < ch; ++c) {
                float m = img.at(y, x0, c);
                for (int xx = x0 + 1; xx <= x1; ++xx) m = std::min(m, img.at(y, xx, c));
                tmp.at(y, x, c) = m;
            }
        }
    }
    ImageF out(h, w, ch);
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) {
            const int y0 = std::max(0, y - radius);
            const int y1 = std::min(h - 1, y + radius);
            for (int c = 0; c < ch; ++c) {
                float m = tmp.at(y0, x, c);
                for (int yy = y0 + 1; yy <= y1; ++yy) m = std::min(m, tmp.at(yy, x, c));
                out.at(y, x, c) = m;
            }
        }
    }
    return out;
}

}  // namespace rainkit
