#ifndef PRICING_RNG_HPP
#define PRICING_RNG_HPP

#include <cstdint>
#include <random>

namespace pricing {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Decorrelated per-stream seed so seller and adversary randomness never
/// share a sequence (stream 0 = seller, stream 1 = adversary).
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ull * (stream + 1));
    return splitmix64(s);
}

/// mt19937_64 wrapper with a platform-stable uniform double; avoids
/// std::bernoulli_distribution, whose draw sequence is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace pricing

#endif  // PRICING_RNG_HPP
