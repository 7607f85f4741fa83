#pragma once

// Production backend: the ristretto255 prime-order group.  Elements are
// held decoded (extended coordinates) so additions stay cheap; encoding
// happens only at serialization boundaries.  Scalar arithmetic modulo the
// group order is delegated to libsodium's constant-time routines.

#include <sodium.h>

#include <array>
#include <cstring>

#include "aris/detail/edwards.hpp"
#include "aris/group.hpp"

namespace aris {

class Ristretto255Group {
 public:
  struct Element {
    detail::Point p;
  };
  // Canonical little-endian value, always reduced mod the group order.
  struct Scalar {
    std::array<std::uint8_t, 32> b{};
  };

  Ristretto255Group() {
    if (sodium_init() < 0) throw std::runtime_error("sodium_init failed");
    desc_.group_id = "ristretto255";
    desc_.order_p = mpz_class(
        "1000000000000000000000000000000014def9dea2f79cd65812631a5cf5d3ed",
        16);
    desc_.element_len = 32;
    desc_.scalar_len = 32;
    desc_.wide_scalar_len = 64;
    validate_descriptor(desc_);
    check_order_matches_scalar_backend();
  }

  const GroupDescriptor& descriptor() const { return desc_; }
  Element generator() const { return {detail::curve().base}; }
  Element identity() const { return {detail::point_identity()}; }

  Element add(const Element& a, const Element& b) const {
    counters_.count_add();
    return {detail::point_add(a.p, b.p)};
  }
  Element neg(const Element& a) const { return {detail::point_neg(a.p)}; }
  Element scalar_mul(const Scalar& x, const Element& e) const {
    counters_.count_scalar_mul();
    return {detail::point_scalar_mul(e.p, x.b.data())};
  }
  Element fixed_base_mul(const Scalar& x) const {
    counters_.count_scalar_mul();
    return {detail::base_mul_table().mul(x.b.data())};
  }
  bool element_eq(const Element& a, const Element& b) const {
    return detail::point_eq(a.p, b.p);
  }

  bytes serialize(const Element& e) const {
    bytes out(32);
    detail::ristretto_encode(out.data(), e.p);
    return out;
  }
  std::optional<Element> deserialize(byte_view b) const {
    if (b.size() != 32) return std::nullopt;
    auto p = detail::ristretto_decode(b.data());
    if (!p) return std::nullopt;
    return Element{*p};
  }

  Scalar scalar_zero() const { return {}; }
  Scalar scalar_add(const Scalar& a, const Scalar& b) const {
    Scalar r;
    crypto_core_ed25519_scalar_add(r.b.data(), a.b.data(), b.b.data());
    return r;
  }
  Scalar scalar_sub(const Scalar& a, const Scalar& b) const {
    Scalar r;
    crypto_core_ed25519_scalar_sub(r.b.data(), a.b.data(), b.b.data());
    return r;
  }
  Scalar scalar_mul_mod(const Scalar& a, const Scalar& b) const {
    Scalar r;
    crypto_core_ed25519_scalar_mul(r.b.data(), a.b.data(), b.b.data());
    return r;
  }
  Scalar scalar_neg(const Scalar& a) const {
    Scalar r;
    crypto_core_ed25519_scalar_negate(r.b.data(), a.b.data());
    return r;
  }
  bool scalar_eq(const Scalar& a, const Scalar& b) const {
    return sodium_memcmp(a.b.data(), b.b.data(), 32) == 0;
  }

  Scalar scalar_from_wide_bytes(byte_view b) const {
    if (b.size() < 32 || b.size() > 64)
      throw std::invalid_argument("wide scalar stream must be 32..64 bytes");
    std::uint8_t wide[64] = {0};
    std::memcpy(wide, b.data(), b.size());
    Scalar r;
    crypto_core_ed25519_scalar_reduce(r.b.data(), wide);
    return r;
  }
  bytes scalar_to_bytes(const Scalar& s) const {
    return bytes(s.b.begin(), s.b.end());
  }
  std::optional<Scalar> scalar_from_bytes(byte_view b) const {
    if (b.size() != 32) return std::nullopt;
    std::uint8_t wide[64] = {0};
    std::memcpy(wide, b.data(), 32);
    Scalar r;
    crypto_core_ed25519_scalar_reduce(r.b.data(), wide);
    if (std::memcmp(r.b.data(), b.data(), 32) != 0) return std::nullopt;
    return r;
  }

  OpCounters instrumentation_snapshot() const { return counters_.snapshot(); }
  void reset_instrumentation() const { counters_.reset(); }

 private:
  // The descriptor's order must be the same integer the scalar backend
  // reduces by: exporting it little-endian and reducing must give zero
  // (and, being prime and < 2^253, equality follows from divisibility).
  void check_order_matches_scalar_backend() const {
    std::uint8_t wide[64] = {0};
    std::size_t count = 0;
    mpz_export(wide, &count, -1, 1, 0, 0, desc_.order_p.get_mpz_t());
    if (count > 33) throw std::logic_error("group order export overflow");
    std::uint8_t reduced[32];
    crypto_core_ed25519_scalar_reduce(reduced, wide);
    std::uint8_t acc = 0;
    for (unsigned char i : reduced) acc |= i;
    if (acc != 0)
      throw std::logic_error("descriptor order disagrees with scalar backend");
  }

  GroupDescriptor desc_;
  CounterBlock counters_;
};

static_assert(PrimeOrderGroup<Ristretto255Group>);

}  // namespace aris
