#pragma once

#include <cstdint>
#include <vector>

namespace rangekit {

// splitmix64. All randomness in the library flows through this generator so
// runs are bit-reproducible across platforms; std:: distributions are avoided
// because their output is implementation-defined.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n). Fixed-point multiply keeps it deterministic
  // and avoids the modulo-bias rejection loop.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

private:
  std::uint64_t state_;
};

// Derives an independent child seed from (seed, key). Used to split one run
// seed into per-epoch / per-species streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ull * (key + 0x632be59bd9b4e019ull)));
  g.next();
  return g.next();
}

template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(v[i - 1], v[j]);
  }
}

} // namespace rangekit
