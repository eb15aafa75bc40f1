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

#ifndef RAINKIT_RNG_HPP
#define RAINKIT_RNG_HPP

#include <cmath>
#include <cstdint>

namespace rainkit {

/// Counter-based random stream. Each stream is keyed by
/// (root_seed, stream_index) and every draw is a pure function of that key
/// and a draw counter, so streams can be replayed from scratch and filled
/// in parallel without shared state. Distinct stream indices give
/// statistically independent sequences.
class RngStream {
public:
    RngStream(std::uint64_t root_seed, std::uint64_t stream_index)
        : root_seed_(root_seed), stream_index_(stream_index) {
        std::uint64_t k = mix(root_seed + 0x9E3779B97F4A7C15ull);
        key_ = mix(k ^ (stream_index + 0xD1B54A32D192ED03ull));
    }

    std::uint64_t root_seed() const { return root_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }
    std::uint64_t counter() const { return counter_; }

    /// Draw at an absolute counter position without advancing the stream.
    std::uint64_t u64_at(std::uint64_t c) const {
        return mix(key_ + (c + 1) * 0x9E3779B97F4A7C15ull);
    }

    /// Uniform double in [0,1) at an absolute counter position.
    double double_at(std::uint64_t c) const {
        return static_cast<double>(u64_at(c) >> 11) * 0x1.0p-53;
    }

    /// Gaussian draw occupying counters (c, c+1), Box-Muller.
    double normal_at(std::uint64_t c, double mu, double sigma) const {
        double u1 = 1.0 - double_at(c);  // (0,1], keeps log() finite
        double u2 = double_at(c + 1);
        double r = std::sqrt(-2.0 * std::log(u1));
        return mu + sigma * r * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::uint64_t next_u64() { return u64_at(counter_++); }

    double next_double() { return double_at(counter_++); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    double normal(double mu, double sigma) {
        double v = normal_at(counter_, mu, sigma);
        counter_ += 2;
        return v;
    }

    /// Skip `n` counter positions (used after bulk parallel fills).
    void advance(std::uint64_t n) { counter_ += n; }

private:
    // SplitMix64 finalizer.
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t root_seed_;
    std::uint64_t stream_index_;
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

/// Derive the dedicated stream for one sample of a batch. Depends only on
/// the parent's root seed and the sample index, so per-sample work is
/// independent of scheduling order.
inline RngStream split_stream(const RngStream& rng, std::uint64_t sample_index) {
    return RngStream(rng.root_seed(), sample_index);
}

}  // namespace rainkit

#endif  // RAINKIT_RNG_HPP
