#pragma once

// Parameter sets for the index-encoding signature scheme: t secret values
// per key (a power of two), k indexes per signature, l1 = k*log2(t) bits of
// index-derivation output, l2 digest bits, kappa seed bits.
//
// The effective few-time security level is floor(log2 C(t,k)) — the work
// needed to find a message whose index set falls inside a set already
// revealed.  Both built-in sets land slightly below their 128-bit target
// (127 and 123 bits); security_bits reports the achieved value and callers
// are expected to surface below_target(), not to reject.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace aris {

inline std::uint32_t log2_exact(std::uint32_t t) {
  if (t < 2 || !std::has_single_bit(t))
    throw std::invalid_argument("t must be a power of two >= 2");
  return static_cast<std::uint32_t>(std::countr_zero(t));
}

// floor(log2 C(t,k)), computed exactly.
inline int security_bits(std::uint32_t t, std::uint32_t k) {
  if (k == 0 || k > t) throw std::invalid_argument("require 1 <= k <= t");
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), t, k);
  return static_cast<int>(mpz_sizeinbase(c.get_mpz_t(), 2)) - 1;
}

struct Params {
  std::string name;
  std::uint32_t t = 0;
  std::uint32_t k = 0;
  std::uint32_t l1_bits = 0;
  std::uint32_t l2_bits = 0;
  std::uint32_t kappa_bits = 0;
  int sec_bits = 0;

  bool below_target() const { return sec_bits < static_cast<int>(kappa_bits); }
  std::size_t seed_len() const { return kappa_bits / 8; }
  std::size_t h2_len() const { return l2_bits / 8; }

  static Params create(std::string name, std::uint32_t t, std::uint32_t k,
                       std::uint32_t l1_bits, std::uint32_t l2_bits,
                       std::uint32_t kappa_bits) {
    const std::uint32_t logt = log2_exact(t);
    if (k == 0 || k > t) throw std::invalid_argument("require 1 <= k <= t");
    if (l1_bits != k * logt)
      throw std::invalid_argument("l1 must equal k * log2(t)");
    if (l1_bits > 512)
      throw std::invalid_argument("l1 must fit one 64-byte digest");
    if (l2_bits < 128 || l2_bits > 512 || l2_bits % 8 != 0)
      throw std::invalid_argument("l2 must be 128..512 and a multiple of 8");
    if (kappa_bits < 128 || kappa_bits % 8 != 0)
      throw std::invalid_argument("kappa must be >= 128 and a multiple of 8");
    Params p;
    p.name = std::move(name);
    p.t = t;
    p.k = k;
    p.l1_bits = l1_bits;
    p.l2_bits = l2_bits;
    p.kappa_bits = kappa_bits;
    p.sec_bits = security_bits(t, k);
    return p;
  }
};

inline bool operator==(const Params& a, const Params& b) {
  return a.t == b.t && a.k == b.k && a.l1_bits == b.l1_bits &&
         a.l2_bits == b.l2_bits && a.kappa_bits == b.kappa_bits;
}

// "commodity": large key table, few indexes — tuned for machines where
// 32 KB public keys are cheap.  "embedded": smaller tables, more indexes —
// tuned for flash-constrained targets.
inline Params builtin_params(std::string_view name) {
  if (name == "commodity")
    return Params::create("commodity", 1024, 18, 180, 256, 128);
  if (name == "embedded")
    return Params::create("embedded", 256, 28, 224, 256, 128);
  throw std::invalid_argument("unknown parameter set (want commodity|embedded)");
}

}  // namespace aris
