// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace authorid {

// SplitMix64 (Steele, Lea, Flood; as published in the xoshiro reference
// material). Every randomized operation in this library draws from this
// generator so that results are reproducible bit-for-bit across platforms
// and standard-library implementations. std::shuffle and the std
// distributions are deliberately not used: their output is
// implementation-defined.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) via rejection sampling. bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

// Derives an independent child seed from (seed, tag). The tag is hashed with
// FNV-1a 64 and the result is pushed through one SplitMix64 step, so streams
// for different tags (operation names, author ids) do not overlap in
// practice. The mapping is part of the library's determinism contract.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return SplitMix64(seed ^ h).next();
}

// In-place Fisher-Yates shuffle driven by the given generator.
template <typename T>
void fisher_yates_shuffle(std::vector<T>& values, SplitMix64& rng) {
    if (values.size() < 2) return;
    for (std::size_t i = values.size() - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
        using std::swap;
        swap(values[i], values[j]);
    }
}

// First k elements of a Fisher-Yates pass: a uniform sample without
// replacement, in draw order.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> values, std::size_t k, SplitMix64& rng) {
    if (k > values.size()) {
        throw std::invalid_argument("sample_without_replacement: k exceeds population size");
    }
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(values.size() - i));
        using std::swap;
        swap(values[i], values[j]);
    }
    values.resize(k);
    return values;
}

}  // namespace authorid
