// Copyright 2026 The matgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "matgen/errors.hpp"
#include "matgen/image.hpp"

namespace matgen {

// The 8-channel per-pixel material payload every stage produces and
// consumes: albedo (3, linear RGB), roughness (1), metallic (1), bump (3,
// tangent-space normal map with flat = (0.5, 0.5, 1.0)). All values in
// [0,1].
struct MaterialSet {
    ImageF albedo;     // 3ch
    ImageF roughness;  // 1ch
    ImageF metallic;   // 1ch
    ImageF bump;       // 3ch

    MaterialSet() = default;
    MaterialSet(int w, int h)
        : albedo(w, h, 3), roughness(w, h, 1), metallic(w, h, 1), bump(w, h, 3) {
        for (size_t i = 0; i < bump.data.size(); i += 3) {
            bump.data[i] = 0.5f;
            bump.data[i + 1] = 0.5f;
            bump.data[i + 2] = 1.f;
        }
    }

    int width() const { return albedo.width; }
    int height() const { return albedo.height; }
    static constexpr int kChannelCount = 8;
};

// Roughness-metallic packed as RGB with R identically 1.0, G = roughness,
// B = metallic.
struct PackedRM {
    ImageF rgb;  // 3ch
};

// Binary illumination-confidence grid: 1 = lighting cues trustworthy for
// estimation, 0 = ignore lighting, generate instead.
struct ConfidenceMask {
    ImageF mask;  // 1ch, values restricted to {0,1}
};

enum class LightingScenario { Realistic, LightFree, Generated };

inline const char* to_string(LightingScenario s) {
    switch (s) {
        case LightingScenario::Realistic: return "realistic";
        case LightingScenario::LightFree: return "lightfree";
        case LightingScenario::Generated: return "generated";
    }
    return "?";
}

inline LightingScenario scenario_from_string(const std::string& s) {
    if (s == "realistic") return LightingScenario::Realistic;
    if (s == "lightfree") return LightingScenario::LightFree;
    if (s == "generated") return LightingScenario::Generated;
    throw ArgumentError("unknown lighting scenario: " + s);
}

inline PackedRM pack_rm(const ImageF& roughness, const ImageF& metallic) {
    require_same_shape(roughness, metallic, "pack_rm");
    if (roughness.channels != 1)
        throw DimensionError("pack_rm: expected single-channel grids");
    for (float v : roughness.data)
        if (!(v >= 0.f && v <= 1.f)) throw DomainError("pack_rm: roughness outside [0,1]");
    for (float v : metallic.data)
        if (!(v >= 0.f && v <= 1.f)) throw DomainError("pack_rm: metallic outside [0,1]");
    PackedRM out;
    out.rgb = ImageF(roughness.width, roughness.height, 3);
    for (size_t i = 0; i < roughness.data.size(); ++i) {
        out.rgb.data[i * 3 + 0] = 1.f;
        out.rgb.data[i * 3 + 1] = roughness.data[i];
        out.rgb.data[i * 3 + 2] = metallic.data[i];
    }
    return out;
}

// Strict inverse of pack_rm; rejects grids whose R channel strays from 1.
inline std::pair<ImageF, ImageF> unpack_rm(const PackedRM& packed, float r_tolerance = 1e-3f) {
    const ImageF& rgb = packed.rgb;
    if (rgb.channels != 3) throw DimensionError("unpack_rm: expected 3-channel grid");
    ImageF rough(rgb.width, rgb.height, 1), metal(rgb.width, rgb.height, 1);
    for (size_t i = 0; i < rough.data.size(); ++i) {
        float r = rgb.data[i * 3 + 0];
        if (std::abs(r - 1.f) > r_tolerance)
            throw FormatError("unpack_rm: R channel " + std::to_string(r) +
                              " deviates from 1.0 beyond tolerance " +
                              std::to_string(r_tolerance));
        rough.data[i] = rgb.data[i * 3 + 1];
        metal.data[i] = rgb.data[i * 3 + 2];
    }
    return {std::move(rough), std::move(metal)};
}

// Lenient variant for decoded model outputs, where the predicted R plane is
// informative but not authoritative. Never throws.
inline std::pair<ImageF, ImageF> unpack_rm_lenient(const ImageF& rgb) {
    ImageF rough(rgb.width, rgb.height, 1), metal(rgb.width, rgb.height, 1);
    for (size_t i = 0; i < rough.data.size(); ++i) {
        rough.data[i] = rgb.data[i * 3 + 1];
        metal.data[i] = rgb.data[i * 3 + 2];
    }
    return {std::move(rough), std::move(metal)};
}

// Scenario rule: Realistic -> all 1, LightFree -> all 0, Generated -> the
// known-region mask (1 where materials are already determined).
inline ConfidenceMask assign_confidence(LightingScenario scenario,
                                        const ImageF* known_mask, int width, int height) {
    ConfidenceMask out;
    switch (scenario) {
        case LightingScenario::Realistic:
            out.mask = ImageF(width, height, 1, 1.f);
            break;
        case LightingScenario::LightFree:
            out.mask = ImageF(width, height, 1, 0.f);
            break;
        case LightingScenario::Generated: {
            if (!known_mask)
                throw ArgumentError("assign_confidence: Generated scenario requires known_mask");
            if (known_mask->width != width || known_mask->height != height ||
                known_mask->channels != 1)
                throw ArgumentError("assign_confidence: known_mask shape mismatch");
            out.mask = *known_mask;
            for (float& v : out.mask.data) v = v > 0.5f ? 1.f : 0.f;
            break;
        }
    }
    return out;
}

struct MaterialViolation {
    std::string grid;  // "albedo" | "roughness" | "metallic" | "bump" | "set"
    int x = -1, y = -1, channel = -1;
    std::string message;
};

// Reports every shape/range invariant violation; empty iff valid.
inline std::vector<MaterialViolation> validate_material_set(const MaterialSet& m) {
    std::vector<MaterialViolation> out;
    auto check_shape = [&](const ImageF& g, const char* name, int ch) {
        if (g.channels != ch)
            out.push_back({name, -1, -1, -1,
                           std::string(name) + " has " + std::to_string(g.channels) +
                               " channels, expected " + std::to_string(ch)});
        if (g.width != m.albedo.width || g.height != m.albedo.height)
            out.push_back({name, -1, -1, -1,
                           std::string(name) + " is " + std::to_string(g.width) + "x" +
                               std::to_string(g.height) + ", albedo is " +
                               std::to_string(m.albedo.width) + "x" +
                               std::to_string(m.albedo.height)});
    };
    check_shape(m.albedo, "albedo", 3);
    check_shape(m.roughness, "roughness", 1);
    check_shape(m.metallic, "metallic", 1);
    check_shape(m.bump, "bump", 3);
    auto check_range = [&](const ImageF& g, const char* name) {
        for (int y = 0; y < g.height; ++y)
            for (int x = 0; x < g.width; ++x)
                for (int c = 0; c < g.channels; ++c) {
                    float v = g.at(x, y, c);
                    if (!(v >= 0.f && v <= 1.f) || std::isnan(v))
                        out.push_back({name, x, y, c,
                                       std::string(name) + "(" + std::to_string(x) + "," +
                                           std::to_string(y) + ")[" + std::to_string(c) +
                                           "] = " + std::to_string(v) + " outside [0,1]"});
                }
    };
    check_range(m.albedo, "albedo");
    check_range(m.roughness, "roughness");
    check_range(m.metallic, "metallic");
    check_range(m.bump, "bump");
    return out;
}

inline void clamp_materials(MaterialSet& m) {
    clamp01(m.albedo);
    clamp01(m.roughness);
    clamp01(m.metallic);
    clamp01(m.bump);
}

}  // namespace matgen
