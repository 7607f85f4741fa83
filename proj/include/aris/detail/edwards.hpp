#pragma once

// Prime-order group layer over edwards25519: extended twisted-Edwards
// coordinates (X:Y:Z:T with x = X/Z, y = Y/Z, T = XY/Z), the unified
// complete addition law, and the ristretto255 encoding that quotients away
// the cofactor so the exposed group has prime order.
//
// Curve constants (d, sqrt(-1), 1/sqrt(a-d), the base point) are derived
// arithmetically at startup and self-checked; nothing numeric is trusted
// from source text except the curve equation itself.  The test suite
// additionally cross-checks every operation against an independent
// implementation.

#include <cstdint>
#include <cstring>
#include <optional>
#include <stdexcept>

#include "aris/detail/fe25519.hpp"

namespace aris::detail {

struct Point {
  Fe X, Y, Z, T;
};

struct CurveConstants {
  Fe d;                  // -121665/121666
  Fe d2;                 // 2d
  Fe sqrt_m1;            // sqrt(-1), even root
  Fe invsqrt_a_minus_d;  // 1/sqrt(a - d), a = -1
  Point base;            // generator: y = 4/5, x even
};

struct SqrtRatio {
  bool was_square = false;
  Fe root;
};

// sqrt(u/v) when u/v is square, else sqrt(sqrt(-1)*u/v); root is the
// non-negative choice.  Matches the ristretto255 SQRT_RATIO_M1 routine.
inline SqrtRatio sqrt_ratio_m1(const Fe& u, const Fe& v, const Fe& sqrt_m1) {
  Fe v3 = fe_mul(fe_sq(v), v);
  Fe v7 = fe_mul(fe_sq(v3), v);
  Fe r = fe_mul(fe_mul(u, v3), fe_pow_p58(fe_mul(u, v7)));
  Fe check = fe_mul(v, fe_sq(r));

  Fe neg_u = fe_neg(u);
  const bool correct = fe_eq(check, u);
  const bool flipped = fe_eq(check, neg_u);
  const bool flipped_i = fe_eq(check, fe_mul(neg_u, sqrt_m1));
  if (flipped || flipped_i) r = fe_mul(r, sqrt_m1);
  return {correct || flipped, fe_abs(r)};
}

inline CurveConstants derive_curve_constants() {
  CurveConstants c;
  c.d = fe_neg(fe_mul(fe_from_u64(121665), fe_invert(fe_from_u64(121666))));
  c.d2 = fe_add(c.d, c.d);

  // sqrt(-1) = 2^((p-1)/4) = 2^(2^253 - 5); check the square before use.
  {
    const Fe two = fe_from_u64(2);
    Fe t = fe_pow2k(two, 253);                       // 2^(2^253)
    Fe two5 = fe_mul(fe_sq(fe_sq(two)), two);        // 2^5
    c.sqrt_m1 = fe_mul(t, fe_invert(two5));
    if (!fe_eq(fe_sq(c.sqrt_m1), fe_neg(fe_one())))
      throw std::logic_error("curve constant derivation: sqrt(-1) check failed");
  }

  {
    Fe a_minus_d = fe_sub(fe_neg(fe_one()), c.d);
    SqrtRatio sr = sqrt_ratio_m1(fe_one(), a_minus_d, c.sqrt_m1);
    if (!sr.was_square)
      throw std::logic_error("curve constant derivation: a-d is not 1/square");
    c.invsqrt_a_minus_d = sr.root;
  }

  // Base point: y = 4/5 and the even root of x^2 = (y^2-1)/(d*y^2+1).
  {
    Fe y = fe_mul(fe_from_u64(4), fe_invert(fe_from_u64(5)));
    Fe yy = fe_sq(y);
    SqrtRatio sr = sqrt_ratio_m1(fe_sub(yy, fe_one()),
                                 fe_add(fe_mul(c.d, yy), fe_one()), c.sqrt_m1);
    if (!sr.was_square)
      throw std::logic_error("curve constant derivation: base x not square");
    Fe x = sr.root;
    c.base = Point{x, y, fe_one(), fe_mul(x, y)};

    // On-curve check: -x^2 + y^2 = 1 + d x^2 y^2.
    Fe lhs = fe_sub(yy, fe_sq(x));
    Fe rhs = fe_add(fe_one(), fe_mul(c.d, fe_mul(fe_sq(x), yy)));
    if (!fe_eq(lhs, rhs))
      throw std::logic_error("curve constant derivation: base point off curve");
  }
  return c;
}

inline const CurveConstants& curve() {
  static const CurveConstants c = derive_curve_constants();
  return c;
}

inline SqrtRatio sqrt_ratio(const Fe& u, const Fe& v) {
  return sqrt_ratio_m1(u, v, curve().sqrt_m1);
}

inline Point point_identity() {
  return {fe_zero(), fe_one(), fe_one(), fe_zero()};
}

// Unified addition (complete on this curve: handles P+P and identity).
inline Point point_add(const Point& p, const Point& q) {
  Fe a = fe_mul(fe_sub(p.Y, p.X), fe_sub(q.Y, q.X));
  Fe b = fe_mul(fe_add(p.Y, p.X), fe_add(q.Y, q.X));
  Fe c = fe_mul(fe_mul(p.T, curve().d2), q.T);
  Fe d = fe_mul(fe_add(p.Z, p.Z), q.Z);
  Fe e = fe_sub(b, a);
  Fe f = fe_sub(d, c);
  Fe g = fe_add(d, c);
  Fe h = fe_add(b, a);
  return {fe_mul(e, f), fe_mul(g, h), fe_mul(f, g), fe_mul(e, h)};
}

inline Point point_dbl(const Point& p) {
  Fe a = fe_sq(p.X);
  Fe b = fe_sq(p.Y);
  Fe zz = fe_sq(p.Z);
  Fe c = fe_add(zz, zz);
  Fe d = fe_neg(a);
  Fe e = fe_sub(fe_sub(fe_sq(fe_add(p.X, p.Y)), a), b);
  Fe g = fe_add(d, b);
  Fe f = fe_sub(g, c);
  Fe h = fe_sub(d, b);
  return {fe_mul(e, f), fe_mul(g, h), fe_mul(f, g), fe_mul(e, h)};
}

inline Point point_neg(const Point& p) {
  return {fe_neg(p.X), p.Y, p.Z, fe_neg(p.T)};
}

// Equality in the ristretto quotient group (torsion components ignored).
inline bool point_eq(const Point& p, const Point& q) {
  return fe_eq(fe_mul(p.X, q.Y), fe_mul(p.Y, q.X)) ||
         fe_eq(fe_mul(p.Y, q.Y), fe_mul(p.X, q.X));
}

inline bool point_on_curve(const Point& p) {
  Fe xx = fe_sq(p.X), yy = fe_sq(p.Y), zz = fe_sq(p.Z);
  Fe lhs = fe_mul(fe_sub(yy, xx), zz);
  Fe rhs = fe_add(fe_sq(zz), fe_mul(curve().d, fe_mul(xx, yy)));
  return fe_eq(lhs, rhs) && fe_eq(fe_mul(p.T, p.Z), fe_mul(p.X, p.Y));
}

// ristretto255 canonical 32-byte encoding.
inline void ristretto_encode(std::uint8_t out[32], const Point& p) {
  const CurveConstants& cc = curve();
  Fe u1 = fe_mul(fe_add(p.Z, p.Y), fe_sub(p.Z, p.Y));
  Fe u2 = fe_mul(p.X, p.Y);
  Fe invsqrt = sqrt_ratio(fe_one(), fe_mul(u1, fe_sq(u2))).root;
  Fe den1 = fe_mul(invsqrt, u1);
  Fe den2 = fe_mul(invsqrt, u2);
  Fe z_inv = fe_mul(fe_mul(den1, den2), p.T);

  Fe x = p.X;
  Fe y = p.Y;
  Fe den_inv = den2;
  if (fe_isneg(fe_mul(p.T, z_inv))) {
    x = fe_mul(p.Y, cc.sqrt_m1);
    y = fe_mul(p.X, cc.sqrt_m1);
    den_inv = fe_mul(den1, cc.invsqrt_a_minus_d);
  }
  if (fe_isneg(fe_mul(x, z_inv))) y = fe_neg(y);
  Fe s = fe_abs(fe_mul(den_inv, fe_sub(p.Z, y)));
  fe_tobytes(out, s);
}

// Decode; rejects non-canonical field encodings, negative s, and encodings
// that do not correspond to a group element.
inline std::optional<Point> ristretto_decode(const std::uint8_t in[32]) {
  const CurveConstants& cc = curve();
  Fe s = fe_frombytes(in);
  std::uint8_t canon[32];
  fe_tobytes(canon, s);
  if (std::memcmp(canon, in, 32) != 0) return std::nullopt;
  if (in[0] & 1) return std::nullopt;

  Fe ss = fe_sq(s);
  Fe u1 = fe_sub(fe_one(), ss);
  Fe u2 = fe_add(fe_one(), ss);
  Fe u2_sqr = fe_sq(u2);
  Fe v = fe_sub(fe_neg(fe_mul(cc.d, fe_sq(u1))), u2_sqr);
  SqrtRatio sr = sqrt_ratio(fe_one(), fe_mul(v, u2_sqr));
  if (!sr.was_square) return std::nullopt;

  Fe den_x = fe_mul(sr.root, u2);
  Fe den_y = fe_mul(fe_mul(sr.root, den_x), v);
  Fe x = fe_abs(fe_mul(fe_add(s, s), den_x));
  Fe y = fe_mul(u1, den_y);
  Fe t = fe_mul(x, y);
  if (fe_isneg(t) || fe_iszero(y)) return std::nullopt;
  return Point{x, y, fe_one(), t};
}

// Variable-base scalar multiplication: 4-bit fixed windows, high-to-low.
// Scalar is 32 bytes little-endian, already reduced mod the group order.
inline Point point_scalar_mul(const Point& e, const std::uint8_t sc[32]) {
  Point table[16];
  table[0] = point_identity();
  table[1] = e;
  for (int i = 2; i < 16; ++i) table[i] = point_add(table[i - 1], e);

  Point acc = point_identity();
  for (int i = 31; i >= 0; --i) {
    for (int half = 1; half >= 0; --half) {
      for (int k = 0; k < 4; ++k) acc = point_dbl(acc);
      const unsigned nib = half ? (sc[i] >> 4) : (sc[i] & 0x0F);
      if (nib) acc = point_add(acc, table[nib]);
    }
  }
  return acc;
}

// Fixed-base precomputation: for each byte position i of the scalar, all
// 255 nonzero multiples of 2^(8i)*B.  A fixed-base multiplication is then
// at most 32 additions.  Built once, shared, immutable afterwards.
class BaseMulTable {
 public:
  BaseMulTable() {
    Point row_base = curve().base;
    for (int i = 0; i < 32; ++i) {
      Point cur = row_base;
      rows_[i][0] = cur;
      for (int v = 2; v <= 255; ++v) {
        cur = point_add(cur, row_base);
        rows_[i][v - 1] = cur;
      }
      for (int k = 0; k < 8; ++k) row_base = point_dbl(row_base);
    }
  }

  Point mul(const std::uint8_t sc[32]) const {
    Point acc = point_identity();
    for (int i = 0; i < 32; ++i)
      if (sc[i]) acc = point_add(acc, rows_[i][sc[i] - 1]);
    return acc;
  }

 private:
  Point rows_[32][255];
};

inline const BaseMulTable& base_mul_table() {
  static const BaseMulTable t;
  return t;
}

}  // namespace aris::detail
