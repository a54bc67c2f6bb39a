#ifndef LEELAT_RNG_HPP
#define LEELAT_RNG_HPP

#include <cstdint>

namespace leelat {

// Counter-based generator: output i of stream `seed` is splitmix64(seed, i).
// Deterministic, cheap to fork into independent streams.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed ^ (stream * 0x9e3779b97f4a7c15ULL)) {}

    std::uint64_t next() {
        std::uint64_t z = seed_ + (++counter_) * 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    Rng fork(std::uint64_t stream) const { return Rng(seed_, stream + 1); }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace leelat

#endif
