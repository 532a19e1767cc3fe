#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace preacq {

// Stream purposes for derived seeds. Every stochastic operation draws from an
// engine seeded by (experiment seed, purpose, indices...), so results never
// depend on execution order and resuming from a checkpoint needs no engine
// state beyond the base seed.
namespace stream {
inline constexpr std::uint64_t pool = 0x706f6f6c;       // candidate generation
inline constexpr std::uint64_t init = 0x696e6974;       // initial training pick
inline constexpr std::uint64_t select = 0x73656c63;     // per-round selection
inline constexpr std::uint64_t fit = 0x666974;          // surrogate training
} // namespace stream

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Mix a base seed with a path of indices into a fresh stream seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = splitmix64(base);
    for (std::uint64_t p : path) {
        h = splitmix64(h ^ splitmix64(p));
    }
    return h;
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

/// Standard Gumbel(0, 1) draw.
inline double gumbel_draw(std::mt19937_64& eng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double u = unif(eng);
    while (u <= 0.0) { // open interval; u == 0 would give -log(inf)
        u = unif(eng);
    }
    return -std::log(-std::log(u));
}

/// Uniform sample of k items without replacement (partial Fisher-Yates).
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> items, int k, std::mt19937_64& eng) {
    const int n = static_cast<int>(items.size());
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k && i < n; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(items[static_cast<std::size_t>(i)], items[static_cast<std::size_t>(pick(eng))]);
        out.push_back(items[static_cast<std::size_t>(i)]);
    }
    return out;
}

} // namespace preacq
