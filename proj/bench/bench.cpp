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

// Times the parallel kernels against the serial reference implementations
// on the same inputs and reports the speedup plus the max deviation (a
// cheap correctness cross-check while benchmarking).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "rainkit/decompose.hpp"
#include "rainkit/kernels.hpp"
#include "rainkit/reference.hpp"
#include "rainkit/rng.hpp"
#include "rainkit/synth.hpp"

namespace {

using namespace rainkit;
using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int iters) {
    fn();  // warm up
    const auto t0 = Clock::now();
    for (int i = 0; i < iters; ++i) fn();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / iters;
}

double max_diff(const ImageF& a, const ImageF& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        m = std::max(m, std::abs(static_cast<double>(a.data[i]) - b.data[i]));
    }
    return m;
}

void report(const char* name, double fast_ms, double ref_ms, double diff) {
    std::printf("%-22s %10.2f ms %12.2f ms %8.1fx %12.2e\n", name, fast_ms, ref_ms,
                ref_ms / fast_ms, diff);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainkit kernel benchmark (parallel vs serial reference)"};
    int size = 256;
    int iters = 3;
    app.add_option("--size", size, "Square image side");
    app.add_option("--iters", iters, "Timed iterations per kernel");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("threads: %d, image: %dx%d rgb\n", omp_get_max_threads(), size, size);
#else
    std::printf("threads: 1 (no OpenMP), image: %dx%d rgb\n", size, size);
#endif
    std::printf("%-22s %13s %15s %9s %12s\n", "kernel", "parallel", "reference", "speedup",
                "max diff");

    RngStream rng(1234, 0);
    ImageF img(size, size, 3);
    for (float& v : img.data) v = static_cast<float>(rng.next_double());
    ImageF gray(size, size, 1);
    for (float& v : gray.data) v = static_cast<float>(rng.next_double());
    DepthMap depth(size, size);
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            depth.at(y, x) = static_cast<float>(x) / static_cast<float>(size - 1);
        }
    }
    depth.normalized = true;

    {
        ImageF fast, slow;
        const double tf = time_ms([&] { fast = gaussian_blur(img, 2.0); }, iters);
        const double ts = time_ms([&] { slow = reference::gaussian_blur(img, 2.0); }, iters);
        report("gaussian_blur s=2", tf, ts, max_diff(fast, slow));
    }
    {
        ImageF fast, slow;
        const double tf = time_ms([&] { fast = box_mean(img, 8); }, iters);
        const double ts = time_ms([&] { slow = reference::box_mean(img, 8); }, iters);
        report("box_mean r=8", tf, ts, max_diff(fast, slow));
    }
    {
        const Kernel2D k = motion_kernel(31, 85.0);
        ImageF fast, slow;
        const double tf = time_ms([&] { fast = convolve(gray, k); }, iters);
        const double ts = time_ms([&] { slow = reference::convolve(gray, k); }, iters);
        report("motion convolve l=31", tf, ts, max_diff(fast, slow));
    }
    {
        ImageF fast, slow;
        const double tf = time_ms([&] { fast = depth_variable_blur(img, depth, 1.5); }, iters);
        const double ts =
            time_ms([&] { slow = reference::depth_variable_blur(img, depth, 1.5); }, 1);
        // diff here is the quantized-level approximation error on noise
        // content, not a defect; see the oracle test for the bound on
        // natural images.
        report("depth_variable_blur*", tf, ts, max_diff(fast, slow));
    }
    {
        const GuidanceImage guide = residue_channel(img);
        ImageF fast, slow;
        const double tf = time_ms([&] { fast = guided_filter(img, guide, 8, 0.01); }, iters);
        const double ts = time_ms([&] { slow = reference::guided_filter(img, guide, 8, 0.01); }, 1);
        report("guided_filter r=8", tf, ts, max_diff(fast, slow));
    }
    return 0;
}
