#pragma once

#include <cstdint>
#include <random>

namespace covertsim::rng {

// Sub-stream tags. Every consumer of randomness inside a trial gets its own
// engine so that enabling one consumer (say, a police observer) never shifts
// the draws seen by another (say, receiver noise).
enum class Stream : std::uint64_t {
    Graph = 1,     // topology construction
    Roles = 2,     // rebel/obedient/undercover assignment
    Receiver = 3,  // channel noise on signals delivered to neighbors
    Police = 4,    // channel noise on signals delivered to the wiretap
    Coins = 5,     // protocol-internal coin flips (e.g. randomized broadcasts)
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    // hash-combine then avalanche; good enough to decorrelate engine seeds
    return splitmix64(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
}

// Engine for (master seed, trial, stream). Trials are independent of each
// other and of execution order, which is what makes the trial loop safe to
// parallelize and the outputs independent of the thread count.
inline std::mt19937_64 engine(std::uint64_t seed, std::uint64_t trial, Stream stream) {
    return std::mt19937_64(mix(mix(seed, trial), static_cast<std::uint64_t>(stream)));
}

}  // namespace covertsim::rng
