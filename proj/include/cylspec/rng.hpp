#pragma once

#include <cstdint>

namespace cylspec {

// splitmix64: tiny, fully portable generator. We avoid <random> distributions
// so that seeded test families are bit-identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // derive an independent stream (per family member)
    Rng split(std::uint64_t stream) {
        Rng r(state_ ^ (0x9e3779b97f4a7c15ull * (stream + 0x632be59bd9b4e019ull)));
        r.next_u64();
        return r;
    }

  private:
    std::uint64_t state_;
};

} // namespace cylspec
