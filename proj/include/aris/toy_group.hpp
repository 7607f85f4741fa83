#pragma once

// Tiny transparent backend: the additive group of integers modulo the prime
// 101, with generator 1.  Here scalar_mul(x, E) is plain modular
// multiplication, so every scheme-level identity can be checked against
// ordinary integer arithmetic.  Exists for tests and worked examples; it has
// no security whatsoever.

#include <cstdint>

#include "aris/group.hpp"

namespace aris {

class ToyGroup {
 public:
  static constexpr std::uint32_t kModulus = 101;

  struct Element {
    std::uint8_t v = 0;
  };
  struct Scalar {
    std::uint8_t v = 0;
  };

  ToyGroup() : desc_{"toy101", mpz_class(101), 1, 1, 32} {
    validate_descriptor(desc_);
  }

  const GroupDescriptor& descriptor() const { return desc_; }
  Element generator() const { return {1}; }
  Element identity() const { return {0}; }

  Element add(const Element& a, const Element& b) const {
    counters_.count_add();
    return {reduce(a.v + b.v)};
  }
  Element neg(const Element& a) const {
    return {reduce(kModulus - a.v)};
  }
  Element scalar_mul(const Scalar& x, const Element& e) const {
    counters_.count_scalar_mul();
    return {reduce(static_cast<std::uint32_t>(x.v) * e.v)};
  }
  Element fixed_base_mul(const Scalar& x) const {
    counters_.count_scalar_mul();
    return {x.v};  // generator is 1
  }
  bool element_eq(const Element& a, const Element& b) const { return a.v == b.v; }

  bytes serialize(const Element& e) const { return bytes{e.v}; }
  std::optional<Element> deserialize(byte_view b) const {
    if (b.size() != 1 || b[0] >= kModulus) return std::nullopt;
    return Element{b[0]};
  }

  Scalar scalar_zero() const { return {0}; }
  Scalar scalar_add(const Scalar& a, const Scalar& b) const {
    return {reduce(a.v + b.v)};
  }
  Scalar scalar_sub(const Scalar& a, const Scalar& b) const {
    return {reduce(kModulus + a.v - b.v)};
  }
  Scalar scalar_mul_mod(const Scalar& a, const Scalar& b) const {
    return {reduce(static_cast<std::uint32_t>(a.v) * b.v)};
  }
  Scalar scalar_neg(const Scalar& a) const { return {reduce(kModulus - a.v)}; }
  bool scalar_eq(const Scalar& a, const Scalar& b) const { return a.v == b.v; }

  // Little-endian interpretation of the stream, reduced mod 101.
  Scalar scalar_from_wide_bytes(byte_view b) const {
    std::uint32_t acc = 0;
    for (std::size_t i = b.size(); i-- > 0;)
      acc = (acc * 256 + b[i]) % kModulus;
    return {static_cast<std::uint8_t>(acc)};
  }
  bytes scalar_to_bytes(const Scalar& s) const { return bytes{s.v}; }
  std::optional<Scalar> scalar_from_bytes(byte_view b) const {
    if (b.size() != 1 || b[0] >= kModulus) return std::nullopt;
    return Scalar{b[0]};
  }

  OpCounters instrumentation_snapshot() const { return counters_.snapshot(); }
  void reset_instrumentation() const { counters_.reset(); }

 private:
  static std::uint8_t reduce(std::uint32_t x) {
    return static_cast<std::uint8_t>(x % kModulus);
  }

  GroupDescriptor desc_;
  CounterBlock counters_;
};

static_assert(PrimeOrderGroup<ToyGroup>);

}  // namespace aris
