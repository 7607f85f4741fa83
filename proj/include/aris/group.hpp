#pragma once

// Abstract prime-order group contract shared by every backend.
//
// A backend supplies two value types (Element, Scalar), the group law,
// scalar arithmetic modulo the group order, canonical fixed-length
// serialization, and instrumentation counters for the two operations whose
// counts the schemes in this library care about: scalar multiplications and
// group additions.  Counters are per-instance and atomic; benchmarks use one
// backend instance per thread.

#include <atomic>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace aris {

using bytes = std::vector<std::uint8_t>;
using byte_view = std::span<const std::uint8_t>;

// Static description of a group backend.  element_len / scalar_len are the
// canonical wire sizes; wide_scalar_len is the width of the PRF stream fed
// to scalar_from_wide_bytes, chosen per backend so that reduction modulo
// order_p leaves negligible bias (at least order bits + 128).
struct GroupDescriptor {
  std::string group_id;
  mpz_class order_p;
  std::size_t element_len = 0;
  std::size_t scalar_len = 0;
  std::size_t wide_scalar_len = 0;
};

// Checked once when a backend instance is constructed.
inline void validate_descriptor(const GroupDescriptor& d) {
  if (d.group_id.empty() || d.group_id.size() > 255)
    throw std::invalid_argument("group_id must be 1..255 bytes");
  if (mpz_probab_prime_p(d.order_p.get_mpz_t(), 32) == 0)
    throw std::invalid_argument("group order_p is not prime");
  if (d.element_len == 0 || d.scalar_len == 0)
    throw std::invalid_argument("element_len/scalar_len must be nonzero");
  const std::size_t order_bits = mpz_sizeinbase(d.order_p.get_mpz_t(), 2);
  if (8 * d.wide_scalar_len < order_bits + 128)
    throw std::invalid_argument(
        "wide_scalar_len too small for unbiased scalar derivation");
}

struct OpCounters {
  std::uint64_t scalar_muls = 0;
  std::uint64_t adds = 0;
};

// Thread-safe mutable counter pair embedded in each backend instance.
class CounterBlock {
 public:
  void count_scalar_mul() const { muls_.fetch_add(1, std::memory_order_relaxed); }
  void count_add() const { adds_.fetch_add(1, std::memory_order_relaxed); }
  OpCounters snapshot() const {
    return {muls_.load(std::memory_order_relaxed),
            adds_.load(std::memory_order_relaxed)};
  }
  void reset() const {
    muls_.store(0, std::memory_order_relaxed);
    adds_.store(0, std::memory_order_relaxed);
  }

 private:
  mutable std::atomic<std::uint64_t> muls_{0};
  mutable std::atomic<std::uint64_t> adds_{0};
};

template <class G>
concept PrimeOrderGroup = requires(const G& g, const typename G::Element& e,
                                   const typename G::Scalar& s, byte_view b) {
  typename G::Element;
  typename G::Scalar;
  { g.descriptor() } -> std::convertible_to<const GroupDescriptor&>;
  { g.generator() } -> std::convertible_to<typename G::Element>;
  { g.identity() } -> std::convertible_to<typename G::Element>;

  // Group law.  scalar_mul is the generic (variable-base) path;
  // fixed_base_mul multiplies the generator and may use precomputation.
  // Both count as one scalar multiplication; add/neg count one addition
  // and nothing, respectively.
  { g.add(e, e) } -> std::convertible_to<typename G::Element>;
  { g.neg(e) } -> std::convertible_to<typename G::Element>;
  { g.scalar_mul(s, e) } -> std::convertible_to<typename G::Element>;
  { g.fixed_base_mul(s) } -> std::convertible_to<typename G::Element>;
  { g.element_eq(e, e) } -> std::convertible_to<bool>;

  // Canonical fixed-length wire forms; deserialize rejects non-canonical
  // or off-group encodings.
  { g.serialize(e) } -> std::convertible_to<bytes>;
  { g.deserialize(b) } -> std::convertible_to<std::optional<typename G::Element>>;

  // Scalar ring modulo order_p.
  { g.scalar_zero() } -> std::convertible_to<typename G::Scalar>;
  { g.scalar_add(s, s) } -> std::convertible_to<typename G::Scalar>;
  { g.scalar_sub(s, s) } -> std::convertible_to<typename G::Scalar>;
  { g.scalar_mul_mod(s, s) } -> std::convertible_to<typename G::Scalar>;
  { g.scalar_neg(s) } -> std::convertible_to<typename G::Scalar>;
  { g.scalar_eq(s, s) } -> std::convertible_to<bool>;
  { g.scalar_from_wide_bytes(b) } -> std::convertible_to<typename G::Scalar>;
  { g.scalar_to_bytes(s) } -> std::convertible_to<bytes>;
  { g.scalar_from_bytes(b) } -> std::convertible_to<std::optional<typename G::Scalar>>;

  { g.instrumentation_snapshot() } -> std::convertible_to<OpCounters>;
  { g.reset_instrumentation() };
};

}  // namespace aris
