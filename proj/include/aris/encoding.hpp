#pragma once

// Deterministic hash/PRF layer: every use of BLAKE2b in the library runs
// through one of five domain-separated roles, each prefixing a distinct tag
// byte to its input.
//
//   0x01  prf1(z,i)  keyed by z, input le64(i), wide stream -> secret scalar
//   0x02  prf2(z,i)  keyed by z, input le64(i), wide stream -> nonce scalar
//   0x03  h1(m,z)    keyed by z, input m       -> l1-bit index stream
//   0x04  h2(R)      unkeyed, input ser(R)     -> l2-bit commitment digest
//   0x05  h3(m,h)    unkeyed, input h || m     -> l1-bit index stream
//
// Index streams are consumed most-significant-bit first in k chunks of
// log2(t) bits; surplus low bits of the final byte are ignored.

#include <sodium.h>

#include <algorithm>
#include <array>
#include <initializer_list>
#include <string>
#include <string_view>

#include "aris/group.hpp"
#include "aris/params.hpp"

namespace aris {

inline constexpr std::uint8_t kTagPrf1 = 0x01;
inline constexpr std::uint8_t kTagPrf2 = 0x02;
inline constexpr std::uint8_t kTagH1 = 0x03;
inline constexpr std::uint8_t kTagH2 = 0x04;
inline constexpr std::uint8_t kTagH3 = 0x05;

struct Seed {
  bytes b;

  static Seed random(std::size_t len) {
    if (sodium_init() < 0) throw std::runtime_error("sodium_init failed");
    Seed s;
    s.b.resize(len);
    randombytes_buf(s.b.data(), len);
    return s;
  }
};

struct Digest {
  bytes b;
};

inline bool digest_eq(const Digest& a, const Digest& b) {
  return a.b.size() == b.b.size() &&
         sodium_memcmp(a.b.data(), b.b.data(), a.b.size()) == 0;
}

using IndexList = std::vector<std::uint32_t>;

inline std::array<std::uint8_t, 8> le64(std::uint64_t x) {
  std::array<std::uint8_t, 8> out;
  for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(x >> (8 * i));
  return out;
}

// BLAKE2b over tag || parts..., optionally keyed.  outlen must be within
// BLAKE2b's 16..64-byte range.
inline bytes tagged_hash(std::uint8_t tag, byte_view key,
                         std::initializer_list<byte_view> parts,
                         std::size_t outlen) {
  crypto_generichash_state st;
  if (crypto_generichash_init(&st, key.empty() ? nullptr : key.data(),
                              key.size(), outlen) != 0)
    throw std::invalid_argument("bad hash key/output length");
  crypto_generichash_update(&st, &tag, 1);
  for (byte_view part : parts)
    crypto_generichash_update(&st, part.data(), part.size());
  bytes out(outlen);
  crypto_generichash_final(&st, out.data(), outlen);
  return out;
}

// Splits the leading l1 bits of `stream` into k indexes of log2(t) bits,
// most-significant bit first.
inline IndexList chunk_indexes(byte_view stream, std::uint32_t l1_bits,
                               std::uint32_t t, std::uint32_t k) {
  const std::uint32_t logt = log2_exact(t);
  if (l1_bits != k * logt)
    throw std::invalid_argument("l1 must equal k * log2(t)");
  if (stream.size() * 8 < l1_bits)
    throw std::invalid_argument("index stream shorter than l1 bits");

  IndexList out;
  out.reserve(k);
  std::size_t bit = 0;
  for (std::uint32_t j = 0; j < k; ++j) {
    std::uint32_t idx = 0;
    for (std::uint32_t n = 0; n < logt; ++n, ++bit)
      idx = (idx << 1) | ((stream[bit >> 3] >> (7 - (bit & 7))) & 1U);
    out.push_back(idx);
  }
  return out;
}

// The five hash/PRF roles bound to a group and parameter set.
template <PrimeOrderGroup G>
class Encoding {
 public:
  Encoding(const G& group, Params params) : g_(&group), p_(std::move(params)) {
    if (p_.seed_len() < crypto_generichash_KEYBYTES_MIN)
      throw std::invalid_argument("seed too short to key the PRF");
  }

  typename G::Scalar prf1(const Seed& z, std::uint32_t i) const {
    return prf(kTagPrf1, z, i);
  }
  typename G::Scalar prf2(const Seed& z, std::uint32_t i) const {
    return prf(kTagPrf2, z, i);
  }

  IndexList h1(byte_view m, const Seed& z) const {
    bytes stream = tagged_hash(kTagH1, z.b, {m}, index_stream_len());
    return chunk_indexes(stream, p_.l1_bits, p_.t, p_.k);
  }

  Digest h2(const typename G::Element& R) const {
    return {tagged_hash(kTagH2, {}, {g_->serialize(R)}, p_.h2_len())};
  }

  IndexList h3(byte_view m, const Digest& h) const {
    bytes stream = tagged_hash(kTagH3, {}, {h.b, m}, index_stream_len());
    return chunk_indexes(stream, p_.l1_bits, p_.t, p_.k);
  }

  const Params& params() const { return p_; }
  const G& group() const { return *g_; }

 private:
  // ceil(l1/8), raised to BLAKE2b's minimum output when tiny parameter sets
  // (tests) need fewer than 16 bytes; chunk_indexes reads only l1 bits.
  std::size_t index_stream_len() const {
    return std::max<std::size_t>((p_.l1_bits + 7) / 8,
                                 crypto_generichash_BYTES_MIN);
  }

  typename G::Scalar prf(std::uint8_t tag, const Seed& z,
                         std::uint32_t i) const {
    const auto ib = le64(i);
    bytes stream =
        tagged_hash(tag, z.b, {byte_view(ib)}, g_->descriptor().wide_scalar_len);
    return g_->scalar_from_wide_bytes(stream);
  }

  const G* g_;
  Params p_;
};

inline std::string to_hex(byte_view b) {
  std::string out(b.size() * 2 + 1, '\0');
  sodium_bin2hex(out.data(), out.size(), b.data(), b.size());
  out.resize(b.size() * 2);
  return out;
}

// Strict hex decode (whitespace tolerated); nullopt on any other character
// or an odd digit count.
inline std::optional<bytes> from_hex(std::string_view s) {
  bytes out(s.size() / 2 + 1);
  std::size_t got = 0;
  if (sodium_hex2bin(out.data(), out.size(), s.data(), s.size(), " \t\r\n",
                     &got, nullptr) != 0)
    return std::nullopt;
  out.resize(got);
  return out;
}

}  // namespace aris
