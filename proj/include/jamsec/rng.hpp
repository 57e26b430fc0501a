#pragma once

#include <cstdint>
#include <limits>

namespace jamsec {

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// SplitMix64 engine. Satisfies UniformRandomBitGenerator so it can feed the
/// standard distributions.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit constexpr CounterRng(std::uint64_t state) noexcept : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// A keyed family of random streams. Draw `i` of a stream depends only on the
/// key chain and `i`, never on how many draws were taken before, so workers
/// can regenerate any part of a stream independently.
class RandomStream {
 public:
  explicit constexpr RandomStream(std::uint64_t seed) noexcept : key_(detail::splitmix64(seed)) {}

  [[nodiscard]] constexpr RandomStream substream(std::uint64_t id) const noexcept {
    return RandomStream(Key{detail::splitmix64(key_ ^ detail::splitmix64(id + 0x632BE59BD9B4E019ULL))});
  }

  [[nodiscard]] constexpr CounterRng draw(std::uint64_t index) const noexcept {
    return CounterRng(detail::splitmix64(key_ + detail::splitmix64(index ^ 0xD1B54A32D192ED03ULL)));
  }

  [[nodiscard]] constexpr std::uint64_t key() const noexcept { return key_; }

 private:
  struct Key {
    std::uint64_t value;
  };
  explicit constexpr RandomStream(Key k) noexcept : key_(k.value) {}

  std::uint64_t key_;
};

}  // namespace jamsec
