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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "rainkit/dataset.hpp"
#include "rainkit/image_io.hpp"
#include "test_helpers.hpp"

using namespace rainkit;
namespace fs = std::filesystem;

namespace {

// Two small clean/depth pairs on disk plus their pairs file.
std::string write_fixture_pairs(const fs::path& dir) {
    RngStream rng(61, 0);
    for (int i = 0; i < 2; ++i) {
        const ImageF clean = testutil::textured_background(24, 32, rng);
        DepthMap depth(24, 32);
        for (int y = 0; y < 24; ++y) {
            for (int x = 0; x < 32; ++x) {
                depth.at(y, x) = static_cast<float>((i == 0 ? x : y)) * 0.25f;
            }
        }
        save_image((dir / ("clean" + std::to_string(i) + ".png")).string(), clean, 16);
        save_depth_pfm((dir / ("depth" + std::to_string(i) + ".pfm")).string(), depth);
    }
    const fs::path list = dir / "pairs.txt";
    std::ofstream f(list);
    f << "# clean depth\n";
    for (int i = 0; i < 2; ++i) {
        f << (dir / ("clean" + std::to_string(i) + ".png")).string() << " "
          << (dir / ("depth" + std::to_string(i) + ".pfm")).string() << "\n";
    }
    return list.string();
}

std::uint64_t hash_file(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::vector<char> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return testutil::fnv1a(bytes.data(), bytes.size());
}

std::uint64_t hash_tree(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& p : files) {
        const std::string name = p.filename().string();
        h = testutil::fnv1a(name.data(), name.size(), h);
        const std::uint64_t fh = hash_file(p);
        h = testutil::fnv1a(&fh, sizeof fh, h);
    }
    return h;
}

}  // namespace

TEST_SUITE("dataset") {

TEST_CASE("pair list parsing") {
    const auto dir = testutil::temp_dir("pairlist");
    const std::string list = write_fixture_pairs(dir);
    const auto pairs = load_pair_list(list);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].clean_path.find("clean0") != std::string::npos);
    CHECK_THROWS(load_pair_list((dir / "missing.txt").string()));
    std::ofstream(dir / "empty.txt") << "# only a comment\n";
    CHECK_THROWS(load_pair_list((dir / "empty.txt").string()));
}

TEST_CASE("generation is complete, parseable and reproducible") {
    const auto dir = testutil::temp_dir("gen");
    const std::string list = write_fixture_pairs(dir);

    DatasetOptions opts;
    opts.pairs = load_pair_list(list);
    opts.out_dir = (dir / "out_a").string();
    opts.count = 5;
    opts.seed = 20260808;
    const DatasetResult res = generate_dataset(opts);
    CHECK(res.written == 5);
    CHECK(res.skipped == 0);

    // Manifest completeness both ways: every referenced file exists, every
    // produced file is referenced.
    std::set<std::string> referenced{"manifest.jsonl"};
    std::ifstream mf(res.manifest_path);
    std::string line;
    int records = 0;
    while (std::getline(mf, line)) {
        const auto rec = nlohmann::json::parse(line);
        ++records;
        CHECK(rec["schema"] == 1);
        CHECK(rec["split"] == "train");
        const double beta = rec["params"]["beta"].get<double>();
        CHECK(beta >= 3.0);
        CHECK(beta <= 4.2);
        for (const auto& [key, value] : rec["files"].items()) {
            const std::string rel = value.get<std::string>();
            CHECK(fs::exists(fs::path(opts.out_dir) / rel));
            referenced.insert(rel);
            if (key != "params") {
                CHECK_NOTHROW(load_image((fs::path(opts.out_dir) / rel).string()));
            }
        }
    }
    CHECK(records == 5);
    for (const auto& e : fs::directory_iterator(opts.out_dir)) {
        CHECK(referenced.count(e.path().filename().string()) == 1);
    }

    DatasetOptions again = opts;
    again.out_dir = (dir / "out_b").string();
    generate_dataset(again);
    CHECK(hash_tree(opts.out_dir) == hash_tree(again.out_dir));
}

TEST_CASE("unreadable pairs are skipped and counted") {
    const auto dir = testutil::temp_dir("skip");
    const std::string list = write_fixture_pairs(dir);
    auto pairs = load_pair_list(list);
    pairs.push_back({(dir / "missing.png").string(), (dir / "missing.pfm").string()});

    DatasetOptions opts;
    opts.pairs = pairs;
    opts.out_dir = (dir / "out").string();
    opts.count = 6;  // samples 2 and 5 land on the broken pair
    opts.seed = 7;
    const DatasetResult res = generate_dataset(opts);
    CHECK(res.written == 4);
    CHECK(res.skipped == 2);

    std::ifstream mf(res.manifest_path);
    std::string line;
    std::set<std::string> ids;
    while (std::getline(mf, line)) ids.insert(nlohmann::json::parse(line)["id"].get<std::string>());
    CHECK(ids == std::set<std::string>{"000000", "000001", "000003", "000004"});
}

TEST_CASE("depth/image size mismatch is a skip, not a crash") {
    const auto dir = testutil::temp_dir("mismatch");
    RngStream rng(62, 0);
    save_image((dir / "c.png").string(), testutil::textured_background(16, 16, rng), 16);
    save_depth_pfm((dir / "d.pfm").string(), DepthMap(8, 8, 1.0f));

    DatasetOptions opts;
    opts.pairs = {{(dir / "c.png").string(), (dir / "d.pfm").string()}};
    opts.out_dir = (dir / "out").string();
    opts.count = 2;
    const DatasetResult res = generate_dataset(opts);
    CHECK(res.written == 0);
    CHECK(res.skipped == 2);
    CHECK(fs::exists(res.manifest_path));  // empty manifest still lands
}

}  // TEST_SUITE
