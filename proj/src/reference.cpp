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

#include "rainkit/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace rainkit::reference {

namespace {

double window_mean(const ImageF& img, int yc, int xc, int c, int radius) {
    const int y0 = std::max(0, yc - radius), y1 = std::min(img.height - 1, yc + radius);
    const int x0 = std::max(0, xc - radius), x1 = std::min(img.width - 1, xc + radius);
    double acc = 0.0;
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) acc += img.at(y, x, c);
    }
    return acc / (static_cast<double>(y1 - y0 + 1) * (x1 - x0 + 1));
}

ImageF dense_gaussian(const ImageF& img, double sigma) {
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    const int side = 2 * radius + 1;
    std::vector<double> k(static_cast<std::size_t>(side) * side);
    double sum = 0.0;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            const double v = std::exp(-0.5 * (dy * dy + dx * dx) / (sigma * sigma));
            k[static_cast<std::size_t>(dy + radius) * side + (dx + radius)] = v;
            sum += v;
        }
    }
    for (double& v : k) v /= sum;

    ImageF out(img.height, img.width, img.channels);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            for (int c = 0; c < img.channels; ++c) {
                double acc = 0.0;
                for (int dy = -radius; dy <= radius; ++dy) {
                    for (int dx = -radius; dx <= radius; ++dx) {
                        acc += k[static_cast<std::size_t>(dy + radius) * side + (dx + radius)] *
                               img.at(reflect_index(y + dy, img.height),
                                      reflect_index(x + dx, img.width), c);
                    }
                }
                out.at(y, x, c) = static_cast<float>(acc);
            }
        }
    }
    return out;
}

}  // namespace

ImageF box_mean(const ImageF& img, int radius) {
    ImageF out(img.height, img.width, img.channels);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            for (int c = 0; c < img.channels; ++c) {
                out.at(y, x, c) = static_cast<float>(window_mean(img, y, x, c, radius));
            }
        }
    }
    return out;
}

ImageF gaussian_blur(const ImageF& img, double sigma) {
    if (sigma == 0.0) return img;
    return dense_gaussian(img, sigma);
}

ImageF depth_variable_blur(const ImageF& img, const DepthMap& depth, double scale) {
    ImageF out(img.height, img.width, img.channels);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const double sigma = scale * depth.at(y, x);
            if (sigma == 0.0) {
                for (int c = 0; c < img.channels; ++c) out.at(y, x, c) = img.at(y, x, c);
                continue;
            }
            const int radius = static_cast<int>(std::ceil(3.0 * sigma));
            double wsum = 0.0;
            std::vector<double> acc(static_cast<std::size_t>(img.channels), 0.0);
            for (int dy = -radius; dy <= radius; ++dy) {
                for (int dx = -radius; dx <= radius; ++dx) {
                    const double w = std::exp(-0.5 * (dy * dy + dx * dx) / (sigma * sigma));
                    wsum += w;
                    for (int c = 0; c < img.channels; ++c) {
                        acc[static_cast<std::size_t>(c)] +=
                            w * img.at(reflect_index(y + dy, img.height),
                                       reflect_index(x + dx, img.width), c);
                    }
                }
            }
            for (int c = 0; c < img.channels; ++c) {
                out.at(y, x, c) = static_cast<float>(acc[static_cast<std::size_t>(c)] / wsum);
            }
        }
    }
    return out;
}

ImageF convolve(const ImageF& img, const Kernel2D& kernel) {
    const int ry = kernel.height / 2, rx = kernel.width / 2;
    ImageF out(img.height, img.width, 1);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int ky = 0; ky < kernel.height; ++ky) {
                for (int kx = 0; kx < kernel.width; ++kx) {
                    acc += static_cast<double>(kernel.at(ky, kx)) *
                           img.at(reflect_index(y + ky - ry, img.height),
                                  reflect_index(x + kx - rx, img.width));
                }
            }
            out.at(y, x) = static_cast<float>(acc);
        }
    }
    return out;
}

ImageF guided_filter(const ImageF& img, const GuidanceImage& guide, int radius, double eps) {
    const int h = img.height, w = img.width;
    ImageF out(h, w, img.channels);

    for (int pc = 0; pc < img.channels; ++pc) {
        const int gc = guide.data.channels == 1 ? 0 : pc;

        // Per-pixel linear coefficients from direct window statistics.
        ImageF a(h, w, 1), b(h, w, 1);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const int y0 = std::max(0, y - radius), y1 = std::min(h - 1, y + radius);
                const int x0 = std::max(0, x - radius), x1 = std::min(w - 1, x + radius);
                double sg = 0, sp = 0, sgg = 0, sgp = 0;
                for (int yy = y0; yy <= y1; ++yy) {
                    for (int xx = x0; xx <= x1; ++xx) {
                        const double g = guide.data.at(yy, xx, gc);
                        const double p = img.at(yy, xx, pc);
                        sg += g;
                        sp += p;
                        sgg += g * g;
                        sgp += g * p;
                    }
                }
                const double cnt = static_cast<double>(y1 - y0 + 1) * (x1 - x0 + 1);
                const double mg = sg / cnt, mp = sp / cnt;
                const double cov = sgp / cnt - mg * mp;
                const double var = std::max(0.0, sgg / cnt - mg * mg);
                const double denom = var + eps;
                const double ai = denom > 0.0 ? cov / denom : 0.0;
                a.at(y, x) = static_cast<float>(ai);
                b.at(y, x) = static_cast<float>(mp - ai * mg);
            }
        }
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const double ma = window_mean(a, y, x, 0, radius);
                const double mb = window_mean(b, y, x, 0, radius);
                out.at(y, x, pc) = static_cast<float>(ma * guide.data.at(y, x, gc) + mb);
            }
        }
    }
    return out;
}

double ssim(const ImageF& a, const ImageF& b) {
    constexpr int kWindow = 11;
    constexpr double kSigma = 1.5;
    constexpr double c1 = 0.01 * 0.01;
    constexpr double c2 = 0.03 * 0.03;
    const int r = kWindow / 2;

    std::vector<double> wts(static_cast<std::size_t>(kWindow) * kWindow);
    double wsum = 0.0;
    for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
            const double v = std::exp(-0.5 * (dy * dy + dx * dx) / (kSigma * kSigma));
            wts[static_cast<std::size_t>(dy + r) * kWindow + (dx + r)] = v;
            wsum += v;
        }
    }
    for (double& v : wts) v /= wsum;

    double total = 0.0;
    for (int c = 0; c < a.channels; ++c) {
        double acc = 0.0;
        int count = 0;
        for (int y = r; y < a.height - r; ++y) {
            for (int x = r; x < a.width - r; ++x) {
                double mu_a = 0, mu_b = 0;
                for (int dy = -r; dy <= r; ++dy) {
                    for (int dx = -r; dx <= r; ++dx) {
                        const double wv = wts[static_cast<std::size_t>(dy + r) * kWindow + (dx + r)];
                        mu_a += wv * a.at(y + dy, x + dx, c);
                        mu_b += wv * b.at(y + dy, x + dx, c);
                    }
                }
                double var_a = 0, var_b = 0, cov = 0;
                for (int dy = -r; dy <= r; ++dy) {
                    for (int dx = -r; dx <= r; ++dx) {
                        const double wv = wts[static_cast<std::size_t>(dy + r) * kWindow + (dx + r)];
                        const double da = a.at(y + dy, x + dx, c) - mu_a;
                        const double db = b.at(y + dy, x + dx, c) - mu_b;
                        var_a += wv * da * da;
                        var_b += wv * db * db;
                        cov += wv * da * db;
                    }
                }
                acc += ((2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2)) /
                       ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
                ++count;
            }
        }
        total += acc / count;
    }
    return total / a.channels;
}

double mse(const ImageF& a, const ImageF& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = static_cast<double>(a.data[i]) - b.data[i];
        acc += d * d;
    }
    return acc / static_cast<double>(a.data.size());
}

double psnr(const ImageF& a, const ImageF& b, double peak) {
    const double err = mse(a, b);
    if (err == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / err);
}

}  // namespace rainkit::reference
