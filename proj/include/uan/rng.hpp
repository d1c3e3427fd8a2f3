#ifndef UAN_RNG_HPP
#define UAN_RNG_HPP

#include <cstdint>

namespace uan {

/// splitmix64: a small splittable 64-bit generator. Used everywhere a
/// reproducible stream is needed; independent streams are derived from a
/// base seed with derive(), so runs can be replayed or fanned out across
/// threads without shared state.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Seed for an independent stream identified by (seed, stream).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 g(seed + 0x9e3779b97f4a7c15ull * (stream + 1));
        return g.next();
    }

  private:
    std::uint64_t state_;
};

} // namespace uan

#endif
