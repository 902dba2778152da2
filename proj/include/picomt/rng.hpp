#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "picomt/common.hpp"

namespace picomt {

// Deterministic random stream used for every stochastic operation in the
// repository. The generator is splitmix64; the exact draw sequence is part
// of the project contract so that tests can replay it:
//
//   next_u64():   state += 0x9E3779B97F4A7C15
//                 z = state
//                 z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//                 z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//                 return z ^ (z >> 31)
//   next_double(): (next_u64() >> 11) * 2^-53            (one draw, in [0,1))
//   next_below(n): next_u64() % n                        (one draw)
//   shuffle(v):    for i = n-1 .. 1: j = next_below(i+1); swap(v[i], v[j])
//
// Named streams derive their initial state from a master seed:
//   state0 = mix(master_seed) ^ fnv1a64(name)
// where mix() is one splitmix64 scramble of the master seed. Distinct names
// give statistically independent streams under one master seed.
class RngStream {
  public:
    RngStream() : state_(0) {}
    explicit RngStream(std::uint64_t state) : state_(state) {}

    static RngStream from_named(std::uint64_t master_seed, std::string_view name) {
        return RngStream(scramble(master_seed) ^ fnv1a64(name));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 significant bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n). n must be positive. Modulo bias is negligible for
    // the desk-scale ranges used here and keeps the sequence replayable.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    // Uniform in [lo, hi).
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::uint64_t state() const { return state_; }
    void set_state(std::uint64_t s) { state_ = s; }

  private:
    static std::uint64_t scramble(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::uint64_t state_;
};

}  // namespace picomt
