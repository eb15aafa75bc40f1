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

#include "rainkit/image_io.hpp"

#include <png.h>

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

namespace rainkit {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void fail(const std::string& what, const std::string& path) {
    throw std::runtime_error(what + ": " + path);
}

std::string lower_ext(const std::string& path) {
    const std::size_t dot = path.find_last_of('.');
    const std::size_t slash = path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return {};
    }
    std::string ext = path.substr(dot);
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext;
}

struct PngPixels {
    int height = 0;
    int width = 0;
    int channels = 0;
    int bit_depth = 0;
    std::vector<std::uint16_t> samples;  // one entry per sample regardless of depth
};

PngPixels read_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) fail("cannot open PNG file", path);

    png_byte sig[8];
    if (std::fread(sig, 1, 8, fp.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
        fail("not a PNG file", path);
    }

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) fail("libpng init failed", path);
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        fail("libpng init failed", path);
    }
    std::vector<png_byte> raw;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail("corrupt or unreadable PNG", path);
    }
    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);

    if (bit_depth != 8 && bit_depth != 16) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail("unsupported PNG bit depth " + std::to_string(bit_depth) + " (expected 8 or 16)", path);
    }
    if (color_type != PNG_COLOR_TYPE_GRAY && color_type != PNG_COLOR_TYPE_RGB) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail("unsupported PNG color type (expected grayscale or RGB without alpha)", path);
    }
    if (bit_depth == 16 && std::endian::native == std::endian::little) {
        png_set_swap(png);
    }
    png_read_update_info(png, info);

    const int channels = (color_type == PNG_COLOR_TYPE_GRAY) ? 1 : 3;
    const std::size_t row_bytes = png_get_rowbytes(png, info);
    raw.resize(row_bytes * h);
    rows.resize(h);
    for (png_uint_32 y = 0; y < h; ++y) {
        rows[y] = raw.data() + static_cast<std::size_t>(y) * row_bytes;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    PngPixels out;
    out.height = static_cast<int>(h);
    out.width = static_cast<int>(w);
    out.channels = channels;
    out.bit_depth = bit_depth;
    const std::size_t n = static_cast<std::size_t>(h) * w * channels;
    out.samples.resize(n);
    if (bit_depth == 8) {
        for (std::size_t i = 0; i < n; ++i) out.samples[i] = raw[i];
    } else {
        std::memcpy(out.samples.data(), raw.data(), n * 2);
    }
    return out;
}

void write_png(const std::string& path, int height, int width, int channels, int bit_depth,
               const std::uint16_t* samples) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) fail("cannot open PNG file for writing", path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) fail("libpng init failed", path);
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        fail("libpng init failed", path);
    }
    std::vector<png_byte> raw;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail("PNG write failed", path);
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, width, height, bit_depth,
                 channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    const std::size_t n = static_cast<std::size_t>(height) * width * channels;
    const std::size_t row_bytes = static_cast<std::size_t>(width) * channels * (bit_depth / 8);
    raw.resize(row_bytes * height);
    if (bit_depth == 8) {
        for (std::size_t i = 0; i < n; ++i) raw[i] = static_cast<png_byte>(samples[i]);
    } else {
        std::memcpy(raw.data(), samples, n * 2);
        if (std::endian::native == std::endian::little) {
            png_set_swap(png);
        }
    }
    rows.resize(height);
    for (int y = 0; y < height; ++y) {
        rows[y] = raw.data() + static_cast<std::size_t>(y) * row_bytes;
    }
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

// PFM: "Pf" (gray) / "PF" (color) header, "w h", scale line whose sign gives
// endianness, then float32 rows stored bottom-to-top.
DepthMap load_depth_pfm(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail("cannot open PFM file", path);

    std::string magic;
    f >> magic;
    if (magic == "PF") fail("color PFM not supported, expected grayscale \"Pf\"", path);
    if (magic != "Pf") fail("malformed PFM header (missing \"Pf\")", path);

    long long w = 0, h = 0;
    double scale = 0.0;
    if (!(f >> w >> h >> scale) || w <= 0 || h <= 0 || scale == 0.0) {
        fail("malformed PFM header", path);
    }
    f.get();  // single whitespace byte before the raster

    DepthMap d(static_cast<int>(h), static_cast<int>(w));
    const bool file_little = scale < 0.0;
    std::vector<std::uint32_t> row(static_cast<std::size_t>(w));
    for (long long y = h - 1; y >= 0; --y) {
        if (!f.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(w * 4))) {
            fail("truncated PFM raster", path);
        }
        for (long long x = 0; x < w; ++x) {
            std::uint32_t bits = row[static_cast<std::size_t>(x)];
            if (file_little != (std::endian::native == std::endian::little)) {
                bits = __builtin_bswap32(bits);
            }
            float v;
            std::memcpy(&v, &bits, 4);
            if (!std::isfinite(v)) fail("non-finite depth value", path);
            if (v < 0.0f) fail("negative depth", path);
            d.at(static_cast<int>(y), static_cast<int>(x)) = v;
        }
    }
    return d;
}

}  // namespace

ImageF load_image(const std::string& path) {
    PngPixels px = read_png(path);
    ImageF img(px.height, px.width, px.channels);
    const float denom = (px.bit_depth == 8) ? 255.0f : 65535.0f;
    const std::size_t n = img.data.size();
    for (std::size_t i = 0; i < n; ++i) {
        img.data[i] = static_cast<float>(px.samples[i]) / denom;
    }
    return img;
}

void save_image(const std::string& path, const ImageF& img, int bit_depth) {
    if (bit_depth != 8 && bit_depth != 16) {
        throw std::invalid_argument("save_image: bit depth must be 8 or 16");
    }
    const float maxval = (bit_depth == 8) ? 255.0f : 65535.0f;
    std::vector<std::uint16_t> samples(img.data.size());
    for (std::size_t i = 0; i < img.data.size(); ++i) {
        samples[i] = static_cast<std::uint16_t>(std::lround(clamp01(img.data[i]) * maxval));
    }
    write_png(path, img.height, img.width, img.channels, bit_depth, samples.data());
}

DepthMap load_depth(const std::string& path, std::optional<double> png_scale) {
    const std::string ext = lower_ext(path);
    if (ext == ".pfm") {
        return load_depth_pfm(path);
    }
    if (ext == ".png") {
        if (!png_scale || *png_scale <= 0.0) {
            fail("PNG depth input requires a positive --depth-scale", path);
        }
        PngPixels px = read_png(path);
        if (px.channels != 1 || px.bit_depth != 16) {
            fail("PNG depth must be 16-bit grayscale", path);
        }
        DepthMap d(px.height, px.width);
        for (std::size_t i = 0; i < px.samples.size(); ++i) {
            d.data[i] = static_cast<float>(px.samples[i] * *png_scale);
        }
        return d;
    }
    fail("unsupported depth format (expected .pfm or .png)", path);
}

void save_depth_pfm(const std::string& path, const DepthMap& d) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail("cannot open PFM file for writing", path);
    f << "Pf\n" << d.width << " " << d.height << "\n-1.0\n";
    for (int y = d.height - 1; y >= 0; --y) {
        f.write(reinterpret_cast<const char*>(&d.data[static_cast<std::size_t>(y) * d.width]),
                static_cast<std::streamsize>(d.width) * 4);
    }
    if (!f) fail("PFM write failed", path);
}

}  // namespace rainkit
