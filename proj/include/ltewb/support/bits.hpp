#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ltewb/support/rng.hpp"

namespace ltewb {

/// Unpacked bits, one per byte, values 0/1.
using BitVec = std::vector<std::uint8_t>;
using LlrVec = std::vector<float>;
using SampleVec = std::vector<std::complex<double>>;

inline BitVec random_bits(rng::Stream& stream, std::size_t n) {
  BitVec out(n);
  for (auto& b : out) b = stream.next_bit() ? 1 : 0;
  return out;
}

inline std::size_t count_bit_errors(const BitVec& a, const BitVec& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t errors = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  for (std::size_t i = 0; i < n; ++i) errors += a[i] != b[i];
  return errors;
}

inline std::uint64_t hash_bytes(const void* data, std::size_t size) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ull;
  }
  return h;
}

template <typename T>
std::uint64_t hash_span(std::span<const T> items) {
  return hash_bytes(items.data(), items.size() * sizeof(T));
}

std::string to_hex(std::uint64_t v);

}  // namespace ltewb
