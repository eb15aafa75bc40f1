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

// Command-line surface: dataset generation, single-sample rendering,
// frequency decomposition, deraining and evaluation. Machine-readable
// results go to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 validation error, 2 partial generation failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "rainkit/dataset.hpp"
#include "rainkit/decompose.hpp"
#include "rainkit/estimate.hpp"
#include "rainkit/image_io.hpp"
#include "rainkit/metrics.hpp"

namespace {

using namespace rainkit;

void apply_workers(int workers) {
#ifdef _OPENMP
    if (workers > 0) omp_set_num_threads(workers);
#else
    (void)workers;
#endif
}

GuidanceImage make_guide(const ImageF& img, const std::string& mode) {
    if (mode == "residue") return residue_channel(img);
    if (mode == "colored-residue") return colored_residue(img);
    if (mode == "input") return GuidanceImage{img};
    throw std::runtime_error("unknown guide mode: " + mode);
}

std::vector<int> parse_kernel_list(const std::string& csv) {
    std::vector<int> sizes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) sizes.push_back(std::stoi(item));
    }
    return sizes;
}

std::string format6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

int cmd_dataset(const std::string& pairs_file, const std::string& out_dir, int count,
                std::uint64_t seed, int workers, const std::string& split, double depth_scale) {
    apply_workers(workers);
    DatasetOptions opts;
    opts.pairs = load_pair_list(pairs_file);
    opts.out_dir = out_dir;
    opts.count = count;
    opts.seed = seed;
    opts.split = split;
    if (depth_scale > 0.0) opts.depth_scale = depth_scale;

    const DatasetResult res = generate_dataset(opts);
    std::cerr << "wrote " << res.written << " samples (" << res.skipped << " skipped) to "
              << out_dir << "\n";
    std::cout << "{\"written\": " << res.written << ", \"skipped\": " << res.skipped
              << ", \"manifest\": \"" << res.manifest_path << "\"}\n";
    return res.skipped > 0 ? 2 : 0;
}

int cmd_render(const std::string& clean_path, const std::string& depth_path,
               const std::string& out_dir, const std::string& id, std::uint64_t seed, int workers,
               double depth_scale) {
    apply_workers(workers);
    const ImageF clean = load_image(clean_path);
    std::optional<double> scale;
    if (depth_scale > 0.0) scale = depth_scale;
    DepthMap depth = load_depth(depth_path, scale);
    if (depth.height != clean.height || depth.width != clean.width) {
        throw std::runtime_error("depth dimensions do not match clean image");
    }
    const DepthMap normalized = normalize_depth(depth);

    RngStream rng = split_stream(RngStream(seed, 0), 0);
    const RainParams params = sample_params(rng);
    const RainSample sample = render(clean, normalized, params);

    std::filesystem::create_directories(out_dir);
    const std::string record = write_sample(out_dir, id, sample, "single", clean_path, depth_path);
    std::cout << record << "\n";
    return 0;
}

int cmd_decompose(const std::string& input, const std::string& out_dir, const std::string& guide,
                  const std::string& kernel_csv, double eps, int workers) {
    apply_workers(workers);
    const ImageF img = load_image(input);
    const FrequencyPair fp = decompose(img, make_guide(img, guide), parse_kernel_list(kernel_csv), eps);

    // Additivity self-check before anything is written.
    double maxerr = 0.0;
    for (std::size_t i = 0; i < img.data.size(); ++i) {
        maxerr = std::max(maxerr, std::abs(static_cast<double>(fp.low.data[i]) + fp.high.data[i] -
                                           img.data[i]));
    }
    if (maxerr > 1e-6) {
        throw std::runtime_error("decomposition additivity check failed");
    }

    std::filesystem::create_directories(out_dir);
    save_image(out_dir + "/lo.png", fp.low, 16);

    // hi holds signed values; encode as 0.5 + 0.5 * v (see README).
    ImageF encoded(fp.high.height, fp.high.width, fp.high.channels);
    for (std::size_t i = 0; i < fp.high.data.size(); ++i) {
        encoded.data[i] = 0.5f + 0.5f * fp.high.data[i];
    }
    save_image(out_dir + "/hi.png", encoded, 16);

    std::cout << "{\"lo\": \"lo.png\", \"hi\": \"hi.png\", \"additivity_max_err\": "
              << format6(maxerr) << "}\n";
    return 0;
}

int cmd_derain(const std::string& input, const std::string& out_path, const std::string& params_dir,
               double t_min, const std::string& guide, const std::string& kernel_csv, double eps,
               double omega, int dark_window, int workers) {
    apply_workers(workers);
    const ImageF rain = load_image(input);

    ParamEstimate est;
    if (!params_dir.empty()) {
        est = load_external_params(params_dir);
        if (!est.trans.map.same_extent(rain)) {
            throw std::runtime_error("external parameter maps do not match the input size");
        }
    } else {
        const FrequencyPair fp =
            decompose(rain, make_guide(rain, guide), parse_kernel_list(kernel_csv), eps);
        est.atm = estimate_atmospheric_light(fp.low);
        est.trans = estimate_transmission(fp.low, est.atm, omega, dark_window,
                                          static_cast<float>(t_min));
        est.streaks = estimate_streaks(fp.high);
        est.source = ParamSource::baseline;
    }

    const ImageF out = derain(rain, est, static_cast<float>(t_min));
    const auto parent = std::filesystem::path(out_path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    save_image(out_path, out, 16);
    std::cout << "{\"output\": \"" << out_path << "\", \"source\": \""
              << (est.source == ParamSource::external ? "external" : "baseline") << "\"}\n";
    return 0;
}

int cmd_eval(const std::string& a_path, const std::string& b_path, const std::string& atm_a,
             const std::string& atm_b) {
    const ImageF a = load_image(a_path);
    const ImageF b = load_image(b_path);
    const EvalReport r = evaluate(a, b);

    std::string out = "{\"psnr\": ";
    out += std::isinf(r.psnr) ? std::string("\"inf\"") : format6(r.psnr);
    out += ", \"ssim\": " + format6(r.ssim);
    out += ", \"mse\": " + format6(r.mse);
    if (!atm_a.empty() && !atm_b.empty()) {
        const auto load_atm = [](const std::string& p) {
            std::ifstream f(p);
            if (!f) throw std::runtime_error("cannot open " + p);
            nlohmann::json j;
            f >> j;
            AtmosphericLight al;
            for (int c = 0; c < 3; ++c) {
                al.rgb[static_cast<std::size_t>(c)] = j.at("a").at(static_cast<std::size_t>(c)).get<float>();
            }
            return al;
        };
        out += ", \"atm_error\": " + format6(atm_light_error(load_atm(atm_a), load_atm(atm_b)));
    }
    out += "}";
    std::cout << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainkit: physics-based rain rendering, decomposition and evaluation"};
    app.require_subcommand(1);

    std::uint64_t seed = kDefaultSeed;
    int workers = 0;
    double depth_scale = 0.0;

    // dataset
    auto* ds = app.add_subcommand("dataset", "Render a batch with ground-truth sidecars");
    std::string ds_pairs, ds_out, ds_split = "train";
    int ds_count = 100;
    ds->add_option("--pairs", ds_pairs, "File of 'clean depth' path pairs, one per line")->required();
    ds->add_option("--out", ds_out, "Output directory")->required();
    ds->add_option("--count", ds_count, "Number of samples")->check(CLI::PositiveNumber);
    ds->add_option("--seed", seed, "Root seed (default 142857)");
    ds->add_option("--workers", workers, "Worker threads (0 = all cores)");
    ds->add_option("--split", ds_split, "Split recorded in the manifest")
        ->check(CLI::IsMember({"train", "val"}));
    ds->add_option("--depth-scale", depth_scale, "Meters per unit for 16-bit PNG depth");

    // render
    auto* rd = app.add_subcommand("render", "Render one sample");
    std::string rd_clean, rd_depth, rd_out, rd_id = "000000";
    rd->add_option("--clean", rd_clean, "Clean background PNG")->required();
    rd->add_option("--depth", rd_depth, "Depth map (.pfm or 16-bit .png)")->required();
    rd->add_option("--out", rd_out, "Output directory")->required();
    rd->add_option("--id", rd_id, "Sample id prefix");
    rd->add_option("--seed", seed, "Root seed");
    rd->add_option("--workers", workers, "Worker threads");
    rd->add_option("--depth-scale", depth_scale, "Meters per unit for 16-bit PNG depth");

    // decompose
    auto* dc = app.add_subcommand("decompose", "Split an image into low/high frequency channels");
    std::string dc_in, dc_out, dc_guide = "residue", dc_kernel = "64";
    double eps = kDefaultGuidedEps;
    dc->add_option("--input", dc_in, "Input PNG")->required();
    dc->add_option("--out", dc_out, "Output directory (lo.png, hi.png)")->required();
    dc->add_option("--guide", dc_guide, "Guidance image")
        ->check(CLI::IsMember({"residue", "colored-residue", "input"}));
    dc->add_option("--kernel", dc_kernel, "Kernel size(s), comma separated powers of two");
    dc->add_option("--eps", eps, "Guided filter regularization");
    dc->add_option("--workers", workers, "Worker threads");

    // derain
    auto* dr = app.add_subcommand("derain", "Reconstruct the clean scene from a rain image");
    std::string dr_in, dr_out, dr_params, dr_guide = "residue", dr_kernel = "64";
    double t_min = kDefaultTransmissionFloor;
    double omega = kDarkChannelOmega;
    int dark_window = kDarkChannelWindow;
    dr->add_option("--input", dr_in, "Rain image PNG")->required();
    dr->add_option("--out", dr_out, "Output PNG")->required();
    dr->add_option("--params", dr_params,
                   "Directory with streaks.png / trans.png / atm.json (default: baseline estimators)");
    dr->add_option("--t-min", t_min, "Transmission floor for the inversion");
    dr->add_option("--guide", dr_guide, "Guidance image for the baseline path")
        ->check(CLI::IsMember({"residue", "colored-residue", "input"}));
    dr->add_option("--kernel", dr_kernel, "Kernel size(s) for the baseline path");
    dr->add_option("--eps", eps, "Guided filter regularization");
    dr->add_option("--omega", omega, "Dark-channel strength");
    dr->add_option("--dark-window", dark_window, "Dark-channel window side");
    dr->add_option("--workers", workers, "Worker threads");

    // eval
    auto* ev = app.add_subcommand("eval", "PSNR / SSIM / MSE between two images");
    std::string ev_a, ev_b, ev_atm_a, ev_atm_b;
    ev->add_option("--input", ev_a, "Image under test")->required();
    ev->add_option("--reference", ev_b, "Reference image")->required();
    ev->add_option("--atm-input", ev_atm_a, "atm.json under test (adds atm_error)");
    ev->add_option("--atm-reference", ev_atm_b, "Reference atm.json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ds->parsed()) {
            return cmd_dataset(ds_pairs, ds_out, ds_count, seed, workers, ds_split, depth_scale);
        }
        if (rd->parsed()) {
            return cmd_render(rd_clean, rd_depth, rd_out, rd_id, seed, workers, depth_scale);
        }
        if (dc->parsed()) return cmd_decompose(dc_in, dc_out, dc_guide, dc_kernel, eps, workers);
        if (dr->parsed()) {
            return cmd_derain(dr_in, dr_out, dr_params, t_min, dr_guide, dr_kernel, eps, omega,
                              dark_window, workers);
        }
        if (ev->parsed()) return cmd_eval(ev_a, ev_b, ev_atm_a, ev_atm_b);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
