#pragma once

// Baseline signatures over the same group abstraction: standard Schnorr
// (s = r + e*x) with deterministic nonces.  Kept deliberately plain — the
// verifier recomputes s*P and e*X separately, with no multi-scalar or
// fixed-base shortcuts — so its instrumentation counts are the honest
// reference costs: sign = 1 scalar multiplication, verify = 2 scalar
// multiplications + 1 addition.

#include "aris/encoding.hpp"
#include "aris/group.hpp"

namespace aris {

inline constexpr std::uint8_t kTagSchnorrKey = 0x06;
inline constexpr std::uint8_t kTagSchnorrNonce = 0x07;
inline constexpr std::uint8_t kTagSchnorrChallenge = 0x08;

template <PrimeOrderGroup G>
struct SchnorrKeyPair {
  typename G::Scalar x;
  typename G::Element pub;
};

template <PrimeOrderGroup G>
struct SchnorrSignature {
  typename G::Scalar s;
  typename G::Scalar e;
};

template <PrimeOrderGroup G>
typename G::Scalar schnorr_challenge(const G& g, const typename G::Element& r,
                                     byte_view m) {
  bytes rb = g.serialize(r);
  return g.scalar_from_wide_bytes(tagged_hash(kTagSchnorrChallenge, {}, {rb, m},
                                              g.descriptor().wide_scalar_len));
}

template <PrimeOrderGroup G>
SchnorrKeyPair<G> schnorr_keygen(const G& g, const Seed& entropy) {
  if (entropy.b.size() < crypto_generichash_KEYBYTES_MIN)
    throw std::invalid_argument("entropy seed too short");
  auto x = g.scalar_from_wide_bytes(tagged_hash(kTagSchnorrKey, entropy.b, {},
                                                g.descriptor().wide_scalar_len));
  return {x, g.fixed_base_mul(x)};
}

template <PrimeOrderGroup G>
SchnorrSignature<G> schnorr_sign(const G& g, byte_view m,
                                 const SchnorrKeyPair<G>& kp) {
  // nonce bound to the secret and the message, so signing is deterministic
  bytes xb = g.scalar_to_bytes(kp.x);
  auto r = g.scalar_from_wide_bytes(
      tagged_hash(kTagSchnorrNonce, xb, {m}, g.descriptor().wide_scalar_len));
  auto big_r = g.scalar_mul(r, g.generator());
  auto e = schnorr_challenge(g, big_r, m);
  return {g.scalar_add(r, g.scalar_mul_mod(e, kp.x)), e};
}

template <PrimeOrderGroup G>
bool schnorr_verify(const G& g, byte_view m, const SchnorrSignature<G>& sig,
                    const typename G::Element& pub) {
  auto r_prime = g.add(g.scalar_mul(sig.s, g.generator()),
                       g.scalar_mul(g.scalar_neg(sig.e), pub));
  return g.scalar_eq(schnorr_challenge(g, r_prime, m), sig.e);
}

}  // namespace aris
