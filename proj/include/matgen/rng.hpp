// Copyright 2026 The matgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace matgen {

// Deterministic RNG with explicit algorithms (no std::*_distribution, whose
// output is implementation-defined). xoshiro256** core, SplitMix64 seeding,
// hash-derived child streams so subsystems stay reproducible independently
// of call order elsewhere.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) {
        uint64_t x = seed;
        for (auto& si : s_) si = splitmix64(x);
        has_gauss_ = false;
    }

    // Independent child stream identified by a label and index.
    Rng child(std::string_view label, uint64_t index = 0) const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ s_[0];
        for (char c : label) h = (h ^ static_cast<uint64_t>(c)) * 0x100000001b3ull;
        h ^= index + 0x632be59bd9b4e019ull + (h << 6) + (h >> 2);
        return Rng(h);
    }

    uint64_t next_u64() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0,1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    float uniform_f() { return static_cast<float>(uniform()); }

    float uniform_f(float lo, float hi) { return static_cast<float>(uniform(lo, hi)); }

    // Integer in [0, n).
    uint64_t below(uint64_t n) { return n ? next_u64() % n : 0; }

    int range_int(int lo, int hi_inclusive) {
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi_inclusive - lo + 1)));
    }

    // Standard normal, Box-Muller.
    double normal() {
        if (has_gauss_) {
            has_gauss_ = false;
            return gauss_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        gauss_ = r * std::sin(a);
        has_gauss_ = true;
        return r * std::cos(a);
    }

    float normal_f() { return static_cast<float>(normal()); }

private:
    static uint64_t splitmix64(uint64_t& x) {
        x += 0x9e3779b97f4a7c15ull;
        uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    static uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    uint64_t s_[4];
    double gauss_ = 0.0;
    bool has_gauss_ = false;
};

}  // namespace matgen
