// rng.hpp - seedable pseudo-random generator with portable output
#ifndef HYPE_RNG_HPP
#define HYPE_RNG_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace hype {

// splitmix64. Chosen over <random> engines + distributions because the
// standard distributions are implementation-defined, and identical seeds
// must produce identical partitions on every platform. One Rng instance
// per run: a partitioning call, a generator call, or a stream shuffle.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound); bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

    // Uniform in [0, 1), 53 bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[next_below(i)]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace hype

#endif  // HYPE_RNG_HPP
