// Copyright 2026 The matgen Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "matgen/material.hpp"
#include "matgen/rng.hpp"

using namespace matgen;

TEST_CASE("pack_rm lays out channels as (1, roughness, metallic)") {
    ImageF rough(2, 2, 1, 0.5f), metal(2, 2, 1, 0.2f);
    PackedRM packed = pack_rm(rough, metal);
    for (int y = 0; y < 2; ++y)
        for (int x = 0; x < 2; ++x) {
            CHECK(packed.rgb.at(x, y, 0) == 1.f);
            CHECK(packed.rgb.at(x, y, 1) == 0.5f);
            CHECK(packed.rgb.at(x, y, 2) == 0.2f);
        }

    ImageF zero(2, 2, 1, 0.f);
    PackedRM z = pack_rm(zero, zero);
    CHECK(z.rgb.at(1, 1, 0) == 1.f);
    CHECK(z.rgb.at(1, 1, 1) == 0.f);
    CHECK(z.rgb.at(1, 1, 2) == 0.f);
}

TEST_CASE("pack_rm rejects mismatched or out-of-range grids") {
    ImageF a(2, 2, 1, 0.5f), b(3, 2, 1, 0.5f);
    CHECK_THROWS_AS(pack_rm(a, b), DimensionError);
    ImageF hot(2, 2, 1, 1.5f);
    CHECK_THROWS_AS(pack_rm(hot, a), DomainError);
}

TEST_CASE("unpack_rm projects G and B and rejects bad R") {
    ImageF rgb(1, 1, 3);
    rgb.at(0, 0, 0) = 1.f;
    rgb.at(0, 0, 1) = 0.7f;
    rgb.at(0, 0, 2) = 0.1f;
    auto [r, m] = unpack_rm({rgb});
    CHECK(r.at(0, 0, 0) == 0.7f);
    CHECK(m.at(0, 0, 0) == 0.1f);

    rgb.at(0, 0, 0) = 0.2f;
    CHECK_THROWS_AS(unpack_rm({rgb}), FormatError);
}

TEST_CASE("pack/unpack round-trip is exact for random grids") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int w = rng.range_int(1, 8), h = rng.range_int(1, 8);
        ImageF rough(w, h, 1), metal(w, h, 1);
        for (auto& v : rough.data) v = rng.uniform_f();
        for (auto& v : metal.data) v = rng.uniform_f();
        auto [r, m] = unpack_rm(pack_rm(rough, metal));
        CHECK(r.data == rough.data);
        CHECK(m.data == metal.data);
    }
}

TEST_CASE("assign_confidence follows the scenario rule") {
    auto realistic = assign_confidence(LightingScenario::Realistic, nullptr, 64, 64);
    for (float v : realistic.mask.data) REQUIRE(v == 1.f);

    auto lightfree = assign_confidence(LightingScenario::LightFree, nullptr, 64, 64);
    for (float v : lightfree.mask.data) REQUIRE(v == 0.f);

    ImageF known(64, 64, 1, 0.f);
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 32; ++x) known.at(x, y, 0) = 1.f;
    auto gen = assign_confidence(LightingScenario::Generated, &known, 64, 64);
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 64; ++x)
            REQUIRE(gen.mask.at(x, y, 0) == (x < 32 ? 1.f : 0.f));

    CHECK_THROWS_AS(assign_confidence(LightingScenario::Generated, nullptr, 8, 8),
                    ArgumentError);
}

TEST_CASE("assign_confidence output is binary and deterministic") {
    Rng rng(3);
    ImageF soft(16, 16, 1);
    for (auto& v : soft.data) v = rng.uniform_f();
    auto a = assign_confidence(LightingScenario::Generated, &soft, 16, 16);
    auto b = assign_confidence(LightingScenario::Generated, &soft, 16, 16);
    CHECK(a.mask.data == b.mask.data);
    for (float v : a.mask.data) CHECK((v == 0.f || v == 1.f));
}

TEST_CASE("validate_material_set reports shape and range violations") {
    MaterialSet ok(4, 4);
    CHECK(validate_material_set(ok).empty());
    CHECK(MaterialSet::kChannelCount == 8);

    MaterialSet hot(4, 4);
    hot.albedo.at(2, 1, 0) = 1.5f;
    auto report = validate_material_set(hot);
    REQUIRE(report.size() == 1);
    CHECK(report[0].grid == "albedo");
    CHECK(report[0].x == 2);
    CHECK(report[0].y == 1);

    MaterialSet bad(8, 8);
    bad.bump = ImageF(4, 4, 3);
    auto shapes = validate_material_set(bad);
    REQUIRE_FALSE(shapes.empty());
    CHECK(shapes[0].grid == "bump");
}
