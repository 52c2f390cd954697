#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace lsrmt {

/// SplitMix64 finaliser. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives a stream key from a master seed and a path of counters, e.g.
/// (master, grid point, trial). Every distinct path gives an unrelated
/// stream, so results do not depend on which worker runs which trial.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::initializer_list<std::uint64_t> path) noexcept {
    std::uint64_t h = mix64(master);
    for (std::uint64_t c : path) h = mix64(h ^ mix64(c + 0x632be59bd9b4e019ULL));
    return h;
}

/// Engine for one keyed stream.
inline std::mt19937_64 make_engine(std::uint64_t key) {
    std::seed_seq seq{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32),
                      static_cast<std::uint32_t>(mix64(key)),
                      static_cast<std::uint32_t>(mix64(key) >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace lsrmt
