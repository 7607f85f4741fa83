#pragma once

// Field arithmetic in GF(2^255 - 19): five 51-bit limbs, 128-bit
// intermediates, reduction by folding 2^255 ≡ 19.  Arithmetic keeps limbs
// "loosely reduced" (< 2^52); fe_tobytes produces the unique canonical
// little-endian form.  Not hardened against timing side channels — see
// docs/SECURITY.md.

#include <cstdint>
#include <cstring>

namespace aris::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u64 kMask51 = (u64{1} << 51) - 1;

struct Fe {
  u64 v[5] = {0, 0, 0, 0, 0};
};

inline Fe fe_zero() { return {}; }
inline Fe fe_one() { return {{1, 0, 0, 0, 0}}; }
inline Fe fe_from_u64(u64 x) {
  Fe f;
  f.v[0] = x & kMask51;
  f.v[1] = x >> 51;
  return f;
}

// One carry sweep; valid while limbs < 2^63, leaves them < 2^52.
inline void fe_carry(Fe& f) {
  u64 c;
  c = f.v[0] >> 51; f.v[0] &= kMask51; f.v[1] += c;
  c = f.v[1] >> 51; f.v[1] &= kMask51; f.v[2] += c;
  c = f.v[2] >> 51; f.v[2] &= kMask51; f.v[3] += c;
  c = f.v[3] >> 51; f.v[3] &= kMask51; f.v[4] += c;
  c = f.v[4] >> 51; f.v[4] &= kMask51; f.v[0] += 19 * c;
  c = f.v[0] >> 51; f.v[0] &= kMask51; f.v[1] += c;
}

inline Fe fe_add(const Fe& a, const Fe& b) {
  Fe r;
  for (int i = 0; i < 5; ++i) r.v[i] = a.v[i] + b.v[i];
  fe_carry(r);
  return r;
}

// a - b, computed as a + 2p - b so limbs never go negative.
inline Fe fe_sub(const Fe& a, const Fe& b) {
  Fe r;
  r.v[0] = a.v[0] + 0xFFFFFFFFFFFDAULL - b.v[0];
  r.v[1] = a.v[1] + 0xFFFFFFFFFFFFEULL - b.v[1];
  r.v[2] = a.v[2] + 0xFFFFFFFFFFFFEULL - b.v[2];
  r.v[3] = a.v[3] + 0xFFFFFFFFFFFFEULL - b.v[3];
  r.v[4] = a.v[4] + 0xFFFFFFFFFFFFEULL - b.v[4];
  fe_carry(r);
  return r;
}

inline Fe fe_neg(const Fe& a) { return fe_sub(fe_zero(), a); }

inline Fe fe_mul(const Fe& a, const Fe& b) {
  const u128 a0 = a.v[0], a1 = a.v[1], a2 = a.v[2], a3 = a.v[3], a4 = a.v[4];
  const u64 b0 = b.v[0], b1 = b.v[1], b2 = b.v[2], b3 = b.v[3], b4 = b.v[4];
  const u64 b1_19 = 19 * b1, b2_19 = 19 * b2, b3_19 = 19 * b3, b4_19 = 19 * b4;

  u128 t0 = a0 * b0 + a1 * b4_19 + a2 * b3_19 + a3 * b2_19 + a4 * b1_19;
  u128 t1 = a0 * b1 + a1 * b0 + a2 * b4_19 + a3 * b3_19 + a4 * b2_19;
  u128 t2 = a0 * b2 + a1 * b1 + a2 * b0 + a3 * b4_19 + a4 * b3_19;
  u128 t3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0 + a4 * b4_19;
  u128 t4 = a0 * b4 + a1 * b3 + a2 * b2 + a3 * b1 + a4 * b0;

  Fe r;
  u64 c;
  t1 += static_cast<u64>(t0 >> 51); r.v[0] = static_cast<u64>(t0) & kMask51;
  t2 += static_cast<u64>(t1 >> 51); r.v[1] = static_cast<u64>(t1) & kMask51;
  t3 += static_cast<u64>(t2 >> 51); r.v[2] = static_cast<u64>(t2) & kMask51;
  t4 += static_cast<u64>(t3 >> 51); r.v[3] = static_cast<u64>(t3) & kMask51;
  c = static_cast<u64>(t4 >> 51);   r.v[4] = static_cast<u64>(t4) & kMask51;
  r.v[0] += 19 * c;
  c = r.v[0] >> 51; r.v[0] &= kMask51;
  r.v[1] += c;
  c = r.v[1] >> 51; r.v[1] &= kMask51;
  r.v[2] += c;
  return r;
}

inline Fe fe_sq(const Fe& a) {
  const u64 a0 = a.v[0], a1 = a.v[1], a2 = a.v[2], a3 = a.v[3], a4 = a.v[4];
  const u64 d0 = 2 * a0, d1 = 2 * a1, d2 = 2 * a2, d3 = 2 * a3;
  const u64 a3_19 = 19 * a3, a4_19 = 19 * a4;

  u128 t0 = (u128)a0 * a0 + (u128)d1 * a4_19 + (u128)d2 * a3_19;
  u128 t1 = (u128)d0 * a1 + (u128)d2 * a4_19 + (u128)a3 * a3_19;
  u128 t2 = (u128)d0 * a2 + (u128)a1 * a1 + (u128)d3 * a4_19;
  u128 t3 = (u128)d0 * a3 + (u128)d1 * a2 + (u128)a4 * a4_19;
  u128 t4 = (u128)d0 * a4 + (u128)d1 * a3 + (u128)a2 * a2;

  Fe r;
  u64 c;
  t1 += static_cast<u64>(t0 >> 51); r.v[0] = static_cast<u64>(t0) & kMask51;
  t2 += static_cast<u64>(t1 >> 51); r.v[1] = static_cast<u64>(t1) & kMask51;
  t3 += static_cast<u64>(t2 >> 51); r.v[2] = static_cast<u64>(t2) & kMask51;
  t4 += static_cast<u64>(t3 >> 51); r.v[3] = static_cast<u64>(t3) & kMask51;
  c = static_cast<u64>(t4 >> 51);   r.v[4] = static_cast<u64>(t4) & kMask51;
  r.v[0] += 19 * c;
  c = r.v[0] >> 51; r.v[0] &= kMask51;
  r.v[1] += c;
  c = r.v[1] >> 51; r.v[1] &= kMask51;
  r.v[2] += c;
  return r;
}

inline Fe fe_pow2k(Fe f, unsigned k) {
  while (k--) f = fe_sq(f);
  return f;
}

namespace fe_impl {
// z^(2^250 - 1): the shared prefix of the p-2 and (p-5)/8 addition chains.
inline Fe pow_two250m1(const Fe& z, Fe& z11_out) {
  Fe z2 = fe_sq(z);
  Fe z9 = fe_mul(z, fe_sq(fe_sq(z2)));
  Fe z11 = fe_mul(z2, z9);
  z11_out = z11;
  Fe z_5_0 = fe_mul(z9, fe_sq(z11));                      // 2^5 - 1
  Fe z_10_0 = fe_mul(fe_pow2k(z_5_0, 5), z_5_0);          // 2^10 - 1
  Fe z_20_0 = fe_mul(fe_pow2k(z_10_0, 10), z_10_0);       // 2^20 - 1
  Fe z_40_0 = fe_mul(fe_pow2k(z_20_0, 20), z_20_0);       // 2^40 - 1
  Fe z_50_0 = fe_mul(fe_pow2k(z_40_0, 10), z_10_0);       // 2^50 - 1
  Fe z_100_0 = fe_mul(fe_pow2k(z_50_0, 50), z_50_0);      // 2^100 - 1
  Fe z_200_0 = fe_mul(fe_pow2k(z_100_0, 100), z_100_0);   // 2^200 - 1
  return fe_mul(fe_pow2k(z_200_0, 50), z_50_0);           // 2^250 - 1
}
}  // namespace fe_impl

inline Fe fe_invert(const Fe& z) {
  Fe z11;
  Fe t = fe_impl::pow_two250m1(z, z11);
  return fe_mul(fe_pow2k(t, 5), z11);  // 2^255 - 21 = p - 2
}

// z^((p-5)/8) = z^(2^252 - 3); used by the square-root-ratio routine.
inline Fe fe_pow_p58(const Fe& z) {
  Fe z11;
  Fe t = fe_impl::pow_two250m1(z, z11);
  return fe_mul(fe_pow2k(t, 2), z);
}

inline void fe_tobytes(std::uint8_t out[32], const Fe& f) {
  u64 t[5] = {f.v[0], f.v[1], f.v[2], f.v[3], f.v[4]};

  for (int pass = 0; pass < 2; ++pass) {
    t[1] += t[0] >> 51; t[0] &= kMask51;
    t[2] += t[1] >> 51; t[1] &= kMask51;
    t[3] += t[2] >> 51; t[2] &= kMask51;
    t[4] += t[3] >> 51; t[3] &= kMask51;
    t[0] += 19 * (t[4] >> 51); t[4] &= kMask51;
  }
  t[1] += t[0] >> 51; t[0] &= kMask51;

  // Now 0 <= t < 2^255.  Add 19 and propagate: the carry out of limb 4
  // tells whether t >= p.
  t[0] += 19;
  t[1] += t[0] >> 51; t[0] &= kMask51;
  t[2] += t[1] >> 51; t[1] &= kMask51;
  t[3] += t[2] >> 51; t[2] &= kMask51;
  t[4] += t[3] >> 51; t[3] &= kMask51;
  t[0] += 19 * (t[4] >> 51); t[4] &= kMask51;

  // Undo the offset: add 2^255 - 19 and drop the 2^255 bit, i.e. subtract
  // 19 mod 2^255, leaving exactly t mod p.
  t[0] += kMask51 + 1 - 19;
  t[1] += kMask51;
  t[2] += kMask51;
  t[3] += kMask51;
  t[4] += kMask51;
  t[1] += t[0] >> 51; t[0] &= kMask51;
  t[2] += t[1] >> 51; t[1] &= kMask51;
  t[3] += t[2] >> 51; t[2] &= kMask51;
  t[4] += t[3] >> 51; t[3] &= kMask51;
  t[4] &= kMask51;

  const u64 o0 = t[0] | (t[1] << 51);
  const u64 o1 = (t[1] >> 13) | (t[2] << 38);
  const u64 o2 = (t[2] >> 26) | (t[3] << 25);
  const u64 o3 = (t[3] >> 39) | (t[4] << 12);
  std::memcpy(out + 0, &o0, 8);
  std::memcpy(out + 8, &o1, 8);
  std::memcpy(out + 16, &o2, 8);
  std::memcpy(out + 24, &o3, 8);
}

// Loads 255 bits little-endian (the top bit of byte 31 is ignored).
inline Fe fe_frombytes(const std::uint8_t in[32]) {
  u64 x0, x1, x2, x3;
  std::memcpy(&x0, in + 0, 8);
  std::memcpy(&x1, in + 8, 8);
  std::memcpy(&x2, in + 16, 8);
  std::memcpy(&x3, in + 24, 8);
  Fe f;
  f.v[0] = x0 & kMask51;
  f.v[1] = ((x0 >> 51) | (x1 << 13)) & kMask51;
  f.v[2] = ((x1 >> 38) | (x2 << 26)) & kMask51;
  f.v[3] = ((x2 >> 25) | (x3 << 39)) & kMask51;
  f.v[4] = (x3 >> 12) & kMask51;
  return f;
}

inline bool fe_eq(const Fe& a, const Fe& b) {
  std::uint8_t ab[32], bb[32];
  fe_tobytes(ab, a);
  fe_tobytes(bb, b);
  return std::memcmp(ab, bb, 32) == 0;
}

inline bool fe_iszero(const Fe& a) {
  std::uint8_t ab[32];
  fe_tobytes(ab, a);
  std::uint8_t acc = 0;
  for (int i = 0; i < 32; ++i) acc |= ab[i];
  return acc == 0;
}

// "Negative" means the canonical encoding is odd (RFC 8032 sign convention).
inline bool fe_isneg(const Fe& a) {
  std::uint8_t ab[32];
  fe_tobytes(ab, a);
  return (ab[0] & 1) != 0;
}

inline void fe_cmov(Fe& f, const Fe& g, bool cond) {
  const u64 mask = cond ? ~u64{0} : 0;
  for (int i = 0; i < 5; ++i) f.v[i] ^= mask & (f.v[i] ^ g.v[i]);
}

inline Fe fe_abs(const Fe& a) {
  Fe r = a;
  fe_cmov(r, fe_neg(a), fe_isneg(a));
  return r;
}

}  // namespace aris::detail
