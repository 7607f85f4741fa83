#pragma once

// Shared helpers for the test suite: deterministic RNG and random group
// values.  Test randomness is mt19937 (reproducible), never used in
// production paths.

#include <cstdint>
#include <random>

#include <gmpxx.h>

#include "aris/group.hpp"

namespace aris::test {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline bytes random_bytes(std::mt19937_64& g, std::size_t n) {
  bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(g());
  return out;
}

template <PrimeOrderGroup G>
typename G::Scalar random_scalar(const G& g, std::mt19937_64& r) {
  return g.scalar_from_wide_bytes(
      random_bytes(r, g.descriptor().wide_scalar_len));
}

template <PrimeOrderGroup G>
typename G::Element random_element(const G& g, std::mt19937_64& r) {
  return g.fixed_base_mul(random_scalar(g, r));
}

// Little-endian byte conversions for GMP cross-checks.
inline mpz_class mpz_from_le(byte_view b) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), b.size(), -1, 1, 0, 0, b.data());
  return z;
}

inline bytes mpz_to_le(const mpz_class& z, std::size_t len) {
  bytes out(len, 0);
  std::size_t count = 0;
  mpz_export(out.data(), &count, -1, 1, 0, 0, z.get_mpz_t());
  if (count > len) throw std::logic_error("mpz_to_le overflow");
  return out;
}

}  // namespace aris::test
