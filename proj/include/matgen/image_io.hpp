// Copyright 2026 The matgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zlib.h>

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "matgen/errors.hpp"
#include "matgen/image.hpp"

namespace matgen {

// ---------------------------------------------------------------------------
// sRGB transfer. Applied only to albedo and lit renders at 8-bit boundaries;
// everything else stays linear.

inline float linear_to_srgb(float v) {
    v = clampf(v, 0.f, 1.f);
    return v <= 0.0031308f ? 12.92f * v : 1.055f * std::pow(v, 1.f / 2.4f) - 0.055f;
}

inline float srgb_to_linear(float v) {
    v = clampf(v, 0.f, 1.f);
    return v <= 0.04045f ? v / 12.92f : std::pow((v + 0.055f) / 1.055f, 2.4f);
}

// ---------------------------------------------------------------------------
// PFM (portable float map). "PF" = 3 channel, "Pf" = 1 channel; negative
// scale marks little-endian. PFM stores rows bottom-to-top; ImageF is
// top-down, so rows flip on both paths. 2-channel grids are stored as 3ch
// with a zero B plane by callers.

inline void write_pfm(const std::string& path, const ImageF& img) {
    if (img.channels != 1 && img.channels != 3)
        throw IoError("write_pfm: " + path + ": PFM supports 1 or 3 channels, got " +
                      std::to_string(img.channels));
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("write_pfm: cannot open " + path);
    f << (img.channels == 3 ? "PF" : "Pf") << "\n"
      << img.width << " " << img.height << "\n"
      << "-1.0\n";
    for (int y = img.height - 1; y >= 0; --y)
        f.write(reinterpret_cast<const char*>(img.pixel(0, y)),
                static_cast<std::streamsize>(sizeof(float)) * img.width * img.channels);
    if (!f) throw IoError("write_pfm: write failed for " + path);
}

inline ImageF read_pfm(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("read_pfm: cannot open " + path);
    std::string magic;
    f >> magic;
    int channels = 0;
    if (magic == "PF") channels = 3;
    else if (magic == "Pf") channels = 1;
    else throw IoError("read_pfm: " + path + ": bad magic '" + magic + "'");
    int w = 0, h = 0;
    double scale = 0.0;
    f >> w >> h >> scale;
    if (!f || w <= 0 || h <= 0) throw IoError("read_pfm: " + path + ": bad header");
    f.get();  // single whitespace after the scale line
    ImageF img(w, h, channels);
    for (int y = h - 1; y >= 0; --y)
        f.read(reinterpret_cast<char*>(img.pixel(0, y)),
               static_cast<std::streamsize>(sizeof(float)) * w * channels);
    if (!f) throw IoError("read_pfm: " + path + ": truncated data");
    if (scale > 0) {  // big-endian file
        for (float& v : img.data) {
            uint32_t u;
            std::memcpy(&u, &v, 4);
            u = __builtin_bswap32(u);
            std::memcpy(&v, &u, 4);
        }
    }
    return img;
}

// ---------------------------------------------------------------------------
// Minimal PNG codec over zlib: 8-bit gray / RGB / RGBA, no interlacing.

namespace detail {

inline void png_put_u32(std::vector<uint8_t>& v, uint32_t x) {
    v.push_back(uint8_t(x >> 24));
    v.push_back(uint8_t(x >> 16));
    v.push_back(uint8_t(x >> 8));
    v.push_back(uint8_t(x));
}

inline void png_chunk(std::vector<uint8_t>& out, const char* type,
                      const uint8_t* data, size_t len) {
    png_put_u32(out, static_cast<uint32_t>(len));
    size_t start = out.size();
    out.insert(out.end(), type, type + 4);
    if (len) out.insert(out.end(), data, data + len);
    uint32_t crc = static_cast<uint32_t>(
        crc32(0, out.data() + start, static_cast<uInt>(4 + len)));
    png_put_u32(out, crc);
}

inline int png_paeth(int a, int b, int c) {
    int p = a + b - c;
    int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    return pb <= pc ? b : c;
}

}  // namespace detail

inline void write_png(const std::string& path, const std::vector<uint8_t>& pixels,
                      int width, int height, int channels) {
    if (channels != 1 && channels != 3 && channels != 4)
        throw IoError("write_png: unsupported channel count " + std::to_string(channels));
    // filter byte 0 per scanline
    std::vector<uint8_t> raw;
    raw.reserve(static_cast<size_t>(height) * (1 + static_cast<size_t>(width) * channels));
    for (int y = 0; y < height; ++y) {
        raw.push_back(0);
        const uint8_t* row = &pixels[static_cast<size_t>(y) * width * channels];
        raw.insert(raw.end(), row, row + static_cast<size_t>(width) * channels);
    }
    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::vector<uint8_t> compressed(bound);
    if (compress2(compressed.data(), &bound, raw.data(), static_cast<uLong>(raw.size()), 6) !=
        Z_OK)
        throw IoError("write_png: deflate failed for " + path);
    compressed.resize(bound);

    std::vector<uint8_t> out;
    static const uint8_t sig[8] = {137, 80, 78, 71, 13, 10, 26, 10};
    out.insert(out.end(), sig, sig + 8);
    uint8_t ihdr[13];
    ihdr[0] = uint8_t(width >> 24); ihdr[1] = uint8_t(width >> 16);
    ihdr[2] = uint8_t(width >> 8); ihdr[3] = uint8_t(width);
    ihdr[4] = uint8_t(height >> 24); ihdr[5] = uint8_t(height >> 16);
    ihdr[6] = uint8_t(height >> 8); ihdr[7] = uint8_t(height);
    ihdr[8] = 8;  // bit depth
    ihdr[9] = channels == 1 ? 0 : (channels == 3 ? 2 : 6);
    ihdr[10] = ihdr[11] = ihdr[12] = 0;
    detail::png_chunk(out, "IHDR", ihdr, 13);
    detail::png_chunk(out, "IDAT", compressed.data(), compressed.size());
    detail::png_chunk(out, "IEND", nullptr, 0);

    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("write_png: cannot open " + path);
    f.write(reinterpret_cast<const char*>(out.data()),
            static_cast<std::streamsize>(out.size()));
    if (!f) throw IoError("write_png: write failed for " + path);
}

struct PngImage {
    int width = 0, height = 0, channels = 0;
    std::vector<uint8_t> pixels;
};

inline PngImage read_png(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("read_png: cannot open " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                               std::istreambuf_iterator<char>());
    static const uint8_t sig[8] = {137, 80, 78, 71, 13, 10, 26, 10};
    if (bytes.size() < 8 || std::memcmp(bytes.data(), sig, 8) != 0)
        throw IoError("read_png: " + path + ": not a PNG");
    auto rd_u32 = [&](size_t at) {
        return (uint32_t(bytes[at]) << 24) | (uint32_t(bytes[at + 1]) << 16) |
               (uint32_t(bytes[at + 2]) << 8) | uint32_t(bytes[at + 3]);
    };
    PngImage img;
    std::vector<uint8_t> idat;
    size_t pos = 8;
    int bit_depth = 0, color_type = 0;
    while (pos + 8 <= bytes.size()) {
        uint32_t len = rd_u32(pos);
        std::string type(reinterpret_cast<const char*>(&bytes[pos + 4]), 4);
        size_t body = pos + 8;
        if (body + len + 4 > bytes.size()) throw IoError("read_png: " + path + ": truncated");
        if (type == "IHDR") {
            img.width = static_cast<int>(rd_u32(body));
            img.height = static_cast<int>(rd_u32(body + 4));
            bit_depth = bytes[body + 8];
            color_type = bytes[body + 9];
            if (bit_depth != 8 || bytes[body + 12] != 0)
                throw IoError("read_png: " + path + ": only 8-bit non-interlaced supported");
            img.channels = color_type == 0 ? 1 : (color_type == 2 ? 3 : (color_type == 6 ? 4 : -1));
            if (img.channels < 0)
                throw IoError("read_png: " + path + ": unsupported color type");
        } else if (type == "IDAT") {
            idat.insert(idat.end(), &bytes[body], &bytes[body + len]);
        } else if (type == "IEND") {
            break;
        }
        pos = body + len + 4;
    }
    if (img.width <= 0 || img.channels <= 0) throw IoError("read_png: " + path + ": no IHDR");
    size_t stride = static_cast<size_t>(img.width) * img.channels;
    std::vector<uint8_t> raw(static_cast<size_t>(img.height) * (stride + 1));
    uLongf raw_len = static_cast<uLongf>(raw.size());
    if (uncompress(raw.data(), &raw_len, idat.data(), static_cast<uLong>(idat.size())) != Z_OK ||
        raw_len != raw.size())
        throw IoError("read_png: " + path + ": inflate failed");
    img.pixels.resize(static_cast<size_t>(img.height) * stride);
    int bpp = img.channels;
    for (int y = 0; y < img.height; ++y) {
        uint8_t filter = raw[static_cast<size_t>(y) * (stride + 1)];
        const uint8_t* src = &raw[static_cast<size_t>(y) * (stride + 1) + 1];
        uint8_t* dst = &img.pixels[static_cast<size_t>(y) * stride];
        const uint8_t* prev = y > 0 ? &img.pixels[static_cast<size_t>(y - 1) * stride] : nullptr;
        for (size_t i = 0; i < stride; ++i) {
            int a = i >= static_cast<size_t>(bpp) ? dst[i - bpp] : 0;
            int b = prev ? prev[i] : 0;
            int c = (prev && i >= static_cast<size_t>(bpp)) ? prev[i - bpp] : 0;
            int x = src[i];
            switch (filter) {
                case 0: dst[i] = uint8_t(x); break;
                case 1: dst[i] = uint8_t(x + a); break;
                case 2: dst[i] = uint8_t(x + b); break;
                case 3: dst[i] = uint8_t(x + (a + b) / 2); break;
                case 4: dst[i] = uint8_t(x + detail::png_paeth(a, b, c)); break;
                default: throw IoError("read_png: " + path + ": bad filter type");
            }
        }
    }
    return img;
}

// ---------------------------------------------------------------------------
// 8-bit preview helpers.

// Quantize a linear image to 8-bit PNG. srgb=true applies the transfer
// (albedo / lit renders); exposure clamps first.
inline void write_png_preview(const std::string& path, const ImageF& img, bool srgb) {
    std::vector<uint8_t> px(img.data.size());
    for (size_t i = 0; i < img.data.size(); ++i) {
        float v = srgb ? linear_to_srgb(img.data[i]) : clampf(img.data[i], 0.f, 1.f);
        px[i] = static_cast<uint8_t>(v * 255.f + 0.5f);
    }
    write_png(path, px, img.width, img.height, img.channels);
}

inline ImageF read_png_linear(const std::string& path, bool srgb) {
    PngImage p = read_png(path);
    ImageF img(p.width, p.height, p.channels);
    for (size_t i = 0; i < img.data.size(); ++i) {
        float v = static_cast<float>(p.pixels[i]) / 255.f;
        img.data[i] = srgb ? srgb_to_linear(v) : v;
    }
    return img;
}

}  // namespace matgen
