#pragma once

#include "frs/field.hpp"

#include <cstdint>
#include <random>

namespace frs {

/// Deterministic random source. Every experiment derives all randomness from
/// a single 64-bit seed; independent streams are split off with child(), so
/// trial i sees the same values no matter how many trials run or in what
/// order. The engine is std::mt19937_64 (its output sequence is pinned by
/// the standard) and bounded draws use plain modulo reduction, which keeps
/// results bit-identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish draw in [0, n). Modulo bias is ~n/2^64, irrelevant here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    Fe element(const PrimeField& field) { return static_cast<Fe>(below(field.q())); }

    Fe nonzero_element(const PrimeField& field) { return static_cast<Fe>(1 + below(field.q() - 1)); }

    /// A stream independent of this one and of any other child, derived from
    /// the original seed only (not from consumption state).
    Rng child(std::uint64_t stream) const { return Rng(mix(seed_ ^ mix(stream + 0x9e3779b97f4a7c15ull))); }

  private:
    // splitmix64 finalizer; decorrelates related seeds.
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace frs
