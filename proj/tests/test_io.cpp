// Copyright 2026 The matgen Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <filesystem>

#include "matgen/image_io.hpp"
#include "matgen/rng.hpp"

using namespace matgen;
namespace fs = std::filesystem;

static fs::path tmpdir() {
    auto p = fs::temp_directory_path() / "matgen_io_test";
    fs::create_directories(p);
    return p;
}

TEST_CASE("PFM round-trips 1- and 3-channel float data bit-exactly") {
    Rng rng(11);
    for (int channels : {1, 3}) {
        ImageF img(13, 7, channels);
        for (auto& v : img.data) v = rng.uniform_f(-4.f, 4.f);
        auto path = (tmpdir() / ("rt" + std::to_string(channels) + ".pfm")).string();
        write_pfm(path, img);
        ImageF back = read_pfm(path);
        REQUIRE(back.width == img.width);
        REQUIRE(back.height == img.height);
        REQUIRE(back.channels == channels);
        CHECK(back.data == img.data);
    }
}

TEST_CASE("PFM rejects unsupported channel counts and missing files") {
    CHECK_THROWS_AS(write_pfm((tmpdir() / "bad.pfm").string(), ImageF(2, 2, 2)), IoError);
    CHECK_THROWS_AS(read_pfm((tmpdir() / "does_not_exist.pfm").string()), IoError);
}

TEST_CASE("PNG round-trips 8-bit data") {
    Rng rng(5);
    for (int channels : {1, 3, 4}) {
        int w = 17, h = 9;
        std::vector<uint8_t> px(static_cast<size_t>(w) * h * channels);
        for (auto& v : px) v = static_cast<uint8_t>(rng.below(256));
        auto path = (tmpdir() / ("rt" + std::to_string(channels) + ".png")).string();
        write_png(path, px, w, h, channels);
        PngImage back = read_png(path);
        REQUIRE(back.width == w);
        REQUIRE(back.height == h);
        REQUIRE(back.channels == channels);
        CHECK(back.pixels == px);
    }
}

TEST_CASE("sRGB transfer is inverse-consistent and pinned at endpoints") {
    CHECK(linear_to_srgb(0.f) == 0.f);
    CHECK(linear_to_srgb(1.f) == Catch::Approx(1.f));
    for (float v = 0.f; v <= 1.f; v += 0.01f)
        CHECK(srgb_to_linear(linear_to_srgb(v)) == Catch::Approx(v).margin(1e-5));
}

TEST_CASE("bilinear sampling interpolates and clamps") {
    ImageF img(2, 2, 1);
    img.at(0, 0, 0) = 0.f;
    img.at(1, 0, 0) = 1.f;
    img.at(0, 1, 0) = 0.f;
    img.at(1, 1, 0) = 1.f;
    float out;
    sample_bilinear(img, 0.5f, 0.5f, &out);
    CHECK(out == Catch::Approx(0.5f));
    sample_bilinear(img, -3.f, 0.f, &out);
    CHECK(out == 0.f);
    sample_bilinear(img, 10.f, 10.f, &out);
    CHECK(out == 1.f);
}
