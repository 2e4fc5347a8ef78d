#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace ltewb::rng {

/// Algorithm identifier recorded in run manifests so results stay
/// reproducible across implementations of the same generator.
inline constexpr std::string_view kAlgorithmId = "splitmix64-boxmuller";

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// splitmix64 finalizer (Steele et al.), used both as the counter-based
/// generator core and as the seed-derivation mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

/// Seed derivation rule: derive(seed, tag) and derive(seed, index).
/// Chains of derive() calls give every block / point / subframe its own
/// independent stream from one master seed.
constexpr std::uint64_t derive(std::uint64_t seed, std::string_view tag) {
  return mix64(seed + kGolden + fnv1a64(tag));
}

constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + kGolden + index * 0xD6E8FEB86659FD93ull);
}

/// Counter-based stream: output i = mix64(key + (i+1)*golden).
/// Stateless apart from the counter, so streams are cheap to fork.
class Stream {
 public:
  explicit Stream(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

  /// Uniform in (0, 1]; never 0 so it is safe under log().
  double next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  bool next_bit() { return (next_u64() >> 63) != 0; }

  /// One Box-Muller pair; used as (re, im) of a complex Gaussian sample.
  void gaussian_pair(double& a, double& b) {
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    a = r * std::cos(t);
    b = r * std::sin(t);
  }

  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double a = 0.0;
    gaussian_pair(a, spare_);
    have_spare_ = true;
    return a;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ltewb::rng
