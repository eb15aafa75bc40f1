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

#ifndef RAINKIT_DATASET_HPP
#define RAINKIT_DATASET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainkit/synth.hpp"

// Batch rendering with ground-truth sidecars and a JSONL manifest. Sample i
// draws its parameters from the stream (seed, i), so the produced tree is a
// pure function of the input list and the seed, independent of worker count
// and scheduling.

namespace rainkit {

constexpr std::uint64_t kDefaultSeed = 142857;

struct SourcePair {
    std::string clean_path;
    std::string depth_path;
};

struct DatasetOptions {
    std::vector<SourcePair> pairs;
    std::string out_dir;
    int count = 100;
    std::uint64_t seed = kDefaultSeed;
    std::string split = "train";
    std::optional<double> depth_scale;  // for 16-bit PNG depth inputs
};

struct DatasetResult {
    int written = 0;
    int skipped = 0;
    std::string manifest_path;
};

/// Parse a pairs list: one "clean_path depth_path" per line, blank lines
/// and lines starting with '#' ignored.
std::vector<SourcePair> load_pair_list(const std::string& path);

/// Render `count` samples (cycling through the pair list), write all
/// sidecars plus `{id}_params.json` per sample, and finish the run with an
/// atomic rename of `manifest.jsonl`. Unreadable pairs skip their samples
/// with a log line on stderr.
DatasetResult generate_dataset(const DatasetOptions& opts);

/// Write one rendered sample's files into `out_dir` with the given id and
/// return the manifest record line (no trailing newline).
std::string write_sample(const std::string& out_dir, const std::string& id,
                         const RainSample& sample, const std::string& split,
                         const std::string& source_clean, const std::string& source_depth);

}  // namespace rainkit

#endif  // RAINKIT_DATASET_HPP
