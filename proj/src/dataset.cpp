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

#include "rainkit/dataset.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "rainkit/image_io.hpp"

namespace rainkit {

namespace {

namespace fs = std::filesystem;

nlohmann::json params_json(const RainParams& p, const AtmosphericLight& a) {
    nlohmann::json j;
    j["schema"] = 1;
    j["beta"] = p.beta;
    j["atm"] = p.atm;
    j["streak_len"] = p.streak_len;
    j["streak_angle"] = p.streak_angle;
    j["noise_mu"] = p.noise_mu;
    j["noise_sigma"] = p.noise_sigma;
    j["trans_blur_sigma"] = p.trans_blur_sigma;
    j["blur_scale"] = p.blur_scale;
    j["seed"] = p.seed;
    j["a"] = {a.rgb[0], a.rgb[1], a.rgb[2]};
    return j;
}

struct LoadedPair {
    ImageF clean;
    DepthMap depth;  // normalized
};

}  // namespace

std::vector<SourcePair> load_pair_list(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open pair list: " + path);
    std::vector<SourcePair> pairs;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        SourcePair p;
        if (!(ss >> p.clean_path >> p.depth_path)) {
            throw std::runtime_error("malformed pair list line: " + line);
        }
        pairs.push_back(std::move(p));
    }
    if (pairs.empty()) throw std::runtime_error("pair list is empty: " + path);
    return pairs;
}

std::string write_sample(const std::string& out_dir, const std::string& id,
                         const RainSample& sample, const std::string& split,
                         const std::string& source_clean, const std::string& source_depth) {
    const auto file = [&](const char* suffix) { return id + "_" + suffix + ".png"; };
    save_image(out_dir + "/" + file("rain"), sample.rain, 16);
    save_image(out_dir + "/" + file("clean"), sample.clean, 16);
    save_image(out_dir + "/" + file("cleanblur"), sample.clean_blur, 16);
    save_image(out_dir + "/" + file("streaks"), sample.streaks.map, 16);
    save_image(out_dir + "/" + file("trans"), sample.trans.map, 16);
    save_image(out_dir + "/" + file("transblur"), sample.trans_blur.map, 16);

    const std::string params_name = id + "_params.json";
    {
        std::ofstream pf(out_dir + "/" + params_name);
        if (!pf) throw std::runtime_error("cannot write " + params_name);
        pf << params_json(sample.params, sample.atm).dump() << "\n";
    }

    nlohmann::json rec;
    rec["schema"] = 1;
    rec["id"] = id;
    rec["split"] = split;
    rec["source_clean"] = source_clean;
    rec["source_depth"] = source_depth;
    rec["files"] = {{"rain", file("rain")},       {"clean", file("clean")},
                    {"cleanblur", file("cleanblur")}, {"streaks", file("streaks")},
                    {"trans", file("trans")},     {"transblur", file("transblur")},
                    {"params", params_name}};
    rec["params"] = params_json(sample.params, sample.atm);
    return rec.dump();
}

DatasetResult generate_dataset(const DatasetOptions& opts) {
    if (opts.count < 1) throw std::invalid_argument("generate_dataset: count must be >= 1");
    if (opts.pairs.empty()) throw std::invalid_argument("generate_dataset: no source pairs");
    fs::create_directories(opts.out_dir);

    // Load each distinct pair once, shared read-only by all samples.
    std::map<std::string, LoadedPair> cache;
    std::map<std::string, std::string> broken;
    for (const SourcePair& p : opts.pairs) {
        const std::string key = p.clean_path + "\n" + p.depth_path;
        if (cache.count(key) || broken.count(key)) continue;
        try {
            LoadedPair lp;
            lp.clean = load_image(p.clean_path);
            DepthMap raw = load_depth(p.depth_path, opts.depth_scale);
            if (raw.height != lp.clean.height || raw.width != lp.clean.width) {
                throw std::runtime_error("depth dimensions do not match clean image");
            }
            lp.depth = normalize_depth(raw);
            cache.emplace(key, std::move(lp));
        } catch (const std::exception& e) {
            broken.emplace(key, e.what());
        }
    }

    const RngStream root(opts.seed, 0);
    std::vector<std::string> records(static_cast<std::size_t>(opts.count));
    std::vector<char> ok(static_cast<std::size_t>(opts.count), 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < opts.count; ++i) {
        const SourcePair& p = opts.pairs[static_cast<std::size_t>(i) % opts.pairs.size()];
        const std::string key = p.clean_path + "\n" + p.depth_path;
        char id[16];
        std::snprintf(id, sizeof id, "%06d", i);

        const auto broken_it = broken.find(key);
        if (broken_it != broken.end()) {
#ifdef _OPENMP
#pragma omp critical(rainkit_dataset_log)
#endif
            std::cerr << "skip sample " << id << ": " << broken_it->second << "\n";
            continue;
        }
        const LoadedPair& lp = cache.at(key);

        try {
            RngStream rng = split_stream(root, static_cast<std::uint64_t>(i));
            const RainParams params = sample_params(rng);
            const RainSample sample = render(lp.clean, lp.depth, params);
            records[static_cast<std::size_t>(i)] =
                write_sample(opts.out_dir, id, sample, opts.split, p.clean_path, p.depth_path);
            ok[static_cast<std::size_t>(i)] = 1;
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical(rainkit_dataset_log)
#endif
            std::cerr << "skip sample " << id << ": " << e.what() << "\n";
        }
    }

    const std::string manifest = opts.out_dir + "/manifest.jsonl";
    const std::string tmp = manifest + ".tmp";
    {
        std::ofstream mf(tmp);
        if (!mf) throw std::runtime_error("cannot write manifest: " + tmp);
        for (int i = 0; i < opts.count; ++i) {
            if (ok[static_cast<std::size_t>(i)]) mf << records[static_cast<std::size_t>(i)] << "\n";
        }
    }
    fs::rename(tmp, manifest);

    DatasetResult res;
    for (char c : ok) res.written += c;
    res.skipped = opts.count - res.written;
    res.manifest_path = manifest;
    return res;
}

}  // namespace rainkit
