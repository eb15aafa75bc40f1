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

#ifndef RAINKIT_REFERENCE_HPP
#define RAINKIT_REFERENCE_HPP

#include "rainkit/decompose.hpp"
#include "rainkit/image.hpp"
#include "rainkit/kernels.hpp"

// Serial brute-force counterparts of the optimized kernels. These evaluate
// the defining formulas directly (dense stencils, explicit window loops)
// and share no code with the fast paths, so the test suite can use them as
// independent oracles and the bench target as a speed baseline. Do not
// optimize.

namespace rainkit::reference {

/// Box mean via explicit clipped-window loops.
ImageF box_mean(const ImageF& img, int radius);

/// Gaussian blur via a dense, non-separable 2D kernel, mirrored borders.
ImageF gaussian_blur(const ImageF& img, double sigma);

/// Per-pixel Gaussian blur with sigma(x) = scale * depth(x); a fresh dense
/// kernel per pixel.
ImageF depth_variable_blur(const ImageF& img, const DepthMap& depth, double scale);

/// Dense correlation, mirrored borders.
ImageF convolve(const ImageF& img, const Kernel2D& kernel);

/// Guided filter evaluated from per-window statistics: every window mean,
/// variance and covariance is a direct loop over the clipped window.
ImageF guided_filter(const ImageF& img, const GuidanceImage& guide, int radius, double eps);

/// Mean SSIM via explicit 11x11 windows (sigma 1.5, K1=0.01, K2=0.03,
/// range 1), per channel averaged.
double ssim(const ImageF& a, const ImageF& b);

double mse(const ImageF& a, const ImageF& b);

double psnr(const ImageF& a, const ImageF& b, double peak = 1.0);

}  // namespace rainkit::reference

#endif  // RAINKIT_REFERENCE_HPP
