// Copyright 2026 The matgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "matgen/errors.hpp"
#include "matgen/vec.hpp"

namespace matgen {

// Row-major interleaved float image. Pixel (x,y) channel c lives at
// ((y*width + x)*channels + c). Row 0 is the top row everywhere in this
// library; file formats that disagree (PFM) flip on I/O.
struct ImageF {
    int width = 0, height = 0, channels = 0;
    std::vector<float> data;

    ImageF() = default;
    ImageF(int w, int h, int c, float fill = 0.f)
        : width(w), height(h), channels(c),
          data(static_cast<size_t>(w) * h * c, fill) {}

    bool empty() const { return data.empty(); }
    size_t pixel_count() const { return static_cast<size_t>(width) * height; }

    float& at(int x, int y, int c) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    float at(int x, int y, int c) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }

    float* pixel(int x, int y) { return &data[(static_cast<size_t>(y) * width + x) * channels]; }
    const float* pixel(int x, int y) const {
        return &data[(static_cast<size_t>(y) * width + x) * channels];
    }

    bool same_shape(const ImageF& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }

    void fill(float v) { std::fill(data.begin(), data.end(), v); }

    Vec3 rgb(int x, int y) const {
        const float* p = pixel(x, y);
        return {p[0], p[1], p[2]};
    }
    void set_rgb(int x, int y, const Vec3& v) {
        float* p = pixel(x, y);
        p[0] = v.x;
        p[1] = v.y;
        p[2] = v.z;
    }
};

inline void require_same_shape(const ImageF& a, const ImageF& b, const std::string& what) {
    if (!a.same_shape(b))
        throw DimensionError(what + ": shape mismatch (" + std::to_string(a.width) + "x" +
                             std::to_string(a.height) + "x" + std::to_string(a.channels) +
                             " vs " + std::to_string(b.width) + "x" + std::to_string(b.height) +
                             "x" + std::to_string(b.channels) + ")");
}

// Bilinear sample at continuous pixel coordinates (px,py), where integer
// coordinates land on pixel centers. Clamped at borders.
inline void sample_bilinear(const ImageF& img, float px, float py, float* out) {
    float fx = clampf(px, 0.f, static_cast<float>(img.width - 1));
    float fy = clampf(py, 0.f, static_cast<float>(img.height - 1));
    int x0 = static_cast<int>(fx);
    int y0 = static_cast<int>(fy);
    int x1 = std::min(x0 + 1, img.width - 1);
    int y1 = std::min(y0 + 1, img.height - 1);
    float tx = fx - static_cast<float>(x0);
    float ty = fy - static_cast<float>(y0);
    const float* p00 = img.pixel(x0, y0);
    const float* p10 = img.pixel(x1, y0);
    const float* p01 = img.pixel(x0, y1);
    const float* p11 = img.pixel(x1, y1);
    for (int c = 0; c < img.channels; ++c) {
        float a = p00[c] + (p10[c] - p00[c]) * tx;
        float b = p01[c] + (p11[c] - p01[c]) * tx;
        out[c] = a + (b - a) * ty;
    }
}

// 2x box downsample; odd trailing row/column folds into the last cell.
inline ImageF downsample2(const ImageF& img) {
    int w2 = std::max(1, img.width / 2);
    int h2 = std::max(1, img.height / 2);
    ImageF out(w2, h2, img.channels);
    for (int y = 0; y < h2; ++y) {
        for (int x = 0; x < w2; ++x) {
            int x0 = x * 2, y0 = y * 2;
            int x1 = std::min(x0 + 1, img.width - 1);
            int y1 = std::min(y0 + 1, img.height - 1);
            for (int c = 0; c < img.channels; ++c) {
                out.at(x, y, c) = 0.25f * (img.at(x0, y0, c) + img.at(x1, y0, c) +
                                           img.at(x0, y1, c) + img.at(x1, y1, c));
            }
        }
    }
    return out;
}

inline void clamp01(ImageF& img) {
    for (float& v : img.data) v = clampf(v, 0.f, 1.f);
}

inline double mean_abs_diff(const ImageF& a, const ImageF& b) {
    require_same_shape(a, b, "mean_abs_diff");
    double acc = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) acc += std::abs(double(a.data[i]) - b.data[i]);
    return a.data.empty() ? 0.0 : acc / double(a.data.size());
}

inline double rmse(const ImageF& a, const ImageF& b) {
    require_same_shape(a, b, "rmse");
    double acc = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) {
        double d = double(a.data[i]) - b.data[i];
        acc += d * d;
    }
    return a.data.empty() ? 0.0 : std::sqrt(acc / double(a.data.size()));
}

}  // namespace matgen
