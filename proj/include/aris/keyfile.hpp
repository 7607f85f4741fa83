#pragma once

// Self-describing binary container for keys.  Layout, all integers
// little-endian:
//
//   "ARIS"            4-byte magic
//   version           u8, currently 1
//   kind              u8: 1 = secret key, 2 = public key
//   flags             u8: bit 0 = secret key carries expanded scalar tables
//   group_id          u8 length + that many bytes (backend identifier)
//   t, k, l1, l2, kappa   five u32 parameter fields
//   payload_len       u64, exact byte count of what follows
//   payload           kind-specific tables
//
// Secret payload:  seed (kappa/8 bytes) || R table (t elements)
//                  [ || x table || r table (t scalars each) when expanded ]
// Public payload:  Y table (t elements)
//
// Parsing is strict: every field is validated, every element and scalar is
// re-checked through the group's canonical decoder, and any surplus or
// missing byte is an error.  Signatures use no container — they are the raw
// s || h concatenation handled by the scheme itself.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "aris/group.hpp"
#include "aris/params.hpp"
#include "aris/scheme.hpp"

namespace aris {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::array<std::uint8_t, 4> kKeyMagic{'A', 'R', 'I', 'S'};
inline constexpr std::uint8_t kKeyVersion = 1;
inline constexpr std::uint8_t kKindSecret = 1;
inline constexpr std::uint8_t kKindPublic = 2;
inline constexpr std::uint8_t kFlagExpanded = 0x01;

// Table sizes implied by a parameter set on a given backend; the numbers a
// deployment actually budgets for.
template <PrimeOrderGroup G>
std::size_t public_table_bytes(const G& g, const Params& p) {
  return static_cast<std::size_t>(p.t) * g.descriptor().element_len;
}

template <PrimeOrderGroup G>
std::size_t expanded_scalar_table_bytes(const G& g, const Params& p) {
  return 2 * static_cast<std::size_t>(p.t) * g.descriptor().scalar_len;
}

namespace detail {

inline void put_u32le(bytes& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i)
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline void put_u64le(bytes& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i)
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class ByteReader {
 public:
  explicit ByteReader(byte_view b) : b_(b) {}

  std::uint8_t u8() { return take(1)[0]; }

  std::uint32_t u32le() {
    byte_view v = take(4);
    std::uint32_t out = 0;
    for (int i = 3; i >= 0; --i) out = (out << 8) | v[i];
    return out;
  }

  std::uint64_t u64le() {
    byte_view v = take(8);
    std::uint64_t out = 0;
    for (int i = 7; i >= 0; --i) out = (out << 8) | v[i];
    return out;
  }

  byte_view take(std::size_t n) {
    if (b_.size() - pos_ < n) throw FormatError("key file truncated");
    byte_view v = b_.subspan(pos_, n);
    pos_ += n;
    return v;
  }

  std::size_t remaining() const { return b_.size() - pos_; }

 private:
  byte_view b_;
  std::size_t pos_ = 0;
};

template <PrimeOrderGroup G>
void put_header(bytes& out, const G& g, const Params& p, std::uint8_t kind,
                std::uint8_t flags, std::uint64_t payload_len) {
  out.insert(out.end(), kKeyMagic.begin(), kKeyMagic.end());
  out.push_back(kKeyVersion);
  out.push_back(kind);
  out.push_back(flags);
  const std::string& gid = g.descriptor().group_id;
  out.push_back(static_cast<std::uint8_t>(gid.size()));
  out.insert(out.end(), gid.begin(), gid.end());
  put_u32le(out, p.t);
  put_u32le(out, p.k);
  put_u32le(out, p.l1_bits);
  put_u32le(out, p.l2_bits);
  put_u32le(out, p.kappa_bits);
  put_u64le(out, payload_len);
}

// Reads and cross-checks everything up to the payload; returns (params,
// flags) with the reader positioned at the payload's first byte.
template <PrimeOrderGroup G>
std::pair<Params, std::uint8_t> read_header(ByteReader& r, const G& g,
                                            std::uint8_t want_kind) {
  byte_view magic = r.take(4);
  if (!std::equal(magic.begin(), magic.end(), kKeyMagic.begin()))
    throw FormatError("not a key file (bad magic)");
  if (r.u8() != kKeyVersion) throw FormatError("unsupported key file version");

  const std::uint8_t kind = r.u8();
  if (kind != kKindSecret && kind != kKindPublic)
    throw FormatError("unknown key kind");
  if (kind != want_kind)
    throw FormatError(want_kind == kKindSecret
                          ? "expected a secret key, found a public key"
                          : "expected a public key, found a secret key");

  const std::uint8_t flags = r.u8();
  const std::uint8_t known = (kind == kKindSecret) ? kFlagExpanded : 0;
  if (flags & ~known) throw FormatError("unknown key flags");

  byte_view gid = r.take(r.u8());
  const std::string& expect_gid = g.descriptor().group_id;
  if (std::string(gid.begin(), gid.end()) != expect_gid)
    throw FormatError("key belongs to group '" +
                      std::string(gid.begin(), gid.end()) + "', not '" +
                      expect_gid + "'");

  const std::uint32_t t = r.u32le(), k = r.u32le(), l1 = r.u32le(),
                      l2 = r.u32le(), kappa = r.u32le();
  Params p;
  try {
    p = Params::create("custom", t, k, l1, l2, kappa);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid parameters in key file: ") +
                      e.what());
  }
  for (const char* builtin : {"commodity", "embedded"}) {
    Params b = builtin_params(builtin);
    if (b == p) p.name = b.name;
  }

  if (r.u64le() != r.remaining())
    throw FormatError("payload length does not match file size");
  return {std::move(p), flags};
}

template <PrimeOrderGroup G>
std::vector<typename G::Element> read_elements(ByteReader& r, const G& g,
                                               std::uint32_t count) {
  std::vector<typename G::Element> out;
  out.reserve(count);
  const std::size_t len = g.descriptor().element_len;
  for (std::uint32_t i = 0; i < count; ++i) {
    auto e = g.deserialize(r.take(len));
    if (!e) throw FormatError("invalid group element in key table");
    out.push_back(*e);
  }
  return out;
}

template <PrimeOrderGroup G>
std::vector<typename G::Scalar> read_scalars(ByteReader& r, const G& g,
                                             std::uint32_t count) {
  std::vector<typename G::Scalar> out;
  out.reserve(count);
  const std::size_t len = g.descriptor().scalar_len;
  for (std::uint32_t i = 0; i < count; ++i) {
    auto s = g.scalar_from_bytes(r.take(len));
    if (!s) throw FormatError("non-canonical scalar in key table");
    out.push_back(*s);
  }
  return out;
}

}  // namespace detail

// Raw header fields of a key file, for inspection tools.  Validates only
// the container framing (magic, version, known kind, length bookkeeping) —
// not the parameters and not the group, so files for other backends can
// still be described.
struct KeyFileInfo {
  std::uint8_t kind = 0;
  std::uint8_t flags = 0;
  std::string group_id;
  std::uint32_t t = 0, k = 0, l1_bits = 0, l2_bits = 0, kappa_bits = 0;
  std::uint64_t payload_len = 0;

  bool expanded() const { return flags & kFlagExpanded; }
};

inline KeyFileInfo peek_key_info(byte_view in) {
  detail::ByteReader r(in);
  byte_view magic = r.take(4);
  if (!std::equal(magic.begin(), magic.end(), kKeyMagic.begin()))
    throw FormatError("not a key file (bad magic)");
  if (r.u8() != kKeyVersion) throw FormatError("unsupported key file version");
  KeyFileInfo info;
  info.kind = r.u8();
  if (info.kind != kKindSecret && info.kind != kKindPublic)
    throw FormatError("unknown key kind");
  info.flags = r.u8();
  byte_view gid = r.take(r.u8());
  info.group_id.assign(gid.begin(), gid.end());
  info.t = r.u32le();
  info.k = r.u32le();
  info.l1_bits = r.u32le();
  info.l2_bits = r.u32le();
  info.kappa_bits = r.u32le();
  info.payload_len = r.u64le();
  if (info.payload_len != r.remaining())
    throw FormatError("payload length does not match file size");
  return info;
}

template <PrimeOrderGroup G>
bytes serialize_public_key(const G& g, const PublicKey<G>& pk) {
  if (pk.y_table.size() != pk.params.t)
    throw std::invalid_argument("public key table does not match parameters");
  bytes out;
  out.reserve(64 + public_table_bytes(g, pk.params));
  detail::put_header(out, g, pk.params, kKindPublic, 0,
                     public_table_bytes(g, pk.params));
  for (const auto& y : pk.y_table) {
    bytes e = g.serialize(y);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

template <PrimeOrderGroup G>
bytes serialize_secret_key(const G& g, const SecretKey<G>& sk) {
  const Params& p = sk.params;
  if (sk.r_points.size() != p.t || sk.seed.b.size() != p.seed_len() ||
      (sk.expanded() &&
       (sk.x_table.size() != p.t || sk.r_table.size() != p.t)))
    throw std::invalid_argument("secret key tables do not match parameters");

  std::uint64_t payload = p.seed_len() + public_table_bytes(g, p);
  if (sk.expanded()) payload += expanded_scalar_table_bytes(g, p);

  bytes out;
  out.reserve(64 + payload);
  detail::put_header(out, g, p, kKindSecret,
                     sk.expanded() ? kFlagExpanded : 0, payload);
  out.insert(out.end(), sk.seed.b.begin(), sk.seed.b.end());
  for (const auto& r : sk.r_points) {
    bytes e = g.serialize(r);
    out.insert(out.end(), e.begin(), e.end());
  }
  if (sk.expanded()) {
    for (const auto& x : sk.x_table) {
      bytes s = g.scalar_to_bytes(x);
      out.insert(out.end(), s.begin(), s.end());
    }
    for (const auto& r : sk.r_table) {
      bytes s = g.scalar_to_bytes(r);
      out.insert(out.end(), s.begin(), s.end());
    }
  }
  return out;
}

template <PrimeOrderGroup G>
PublicKey<G> parse_public_key(const G& g, byte_view in) {
  detail::ByteReader r(in);
  auto [p, flags] = detail::read_header(r, g, kKindPublic);
  (void)flags;
  if (r.remaining() != public_table_bytes(g, p))
    throw FormatError("public key payload has the wrong size");
  PublicKey<G> pk;
  pk.params = std::move(p);
  pk.y_table = detail::read_elements(r, g, pk.params.t);
  return pk;
}

template <PrimeOrderGroup G>
SecretKey<G> parse_secret_key(const G& g, byte_view in) {
  detail::ByteReader r(in);
  auto [p, flags] = detail::read_header(r, g, kKindSecret);

  std::size_t expect = p.seed_len() + public_table_bytes(g, p);
  if (flags & kFlagExpanded) expect += expanded_scalar_table_bytes(g, p);
  if (r.remaining() != expect)
    throw FormatError("secret key payload has the wrong size");

  SecretKey<G> sk;
  sk.params = p;
  byte_view seed = r.take(p.seed_len());
  sk.seed.b.assign(seed.begin(), seed.end());
  sk.r_points = detail::read_elements(r, g, p.t);
  if (flags & kFlagExpanded) {
    sk.x_table = detail::read_scalars(r, g, p.t);
    sk.r_table = detail::read_scalars(r, g, p.t);
  }
  return sk;
}

}  // namespace aris
