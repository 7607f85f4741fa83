#pragma once

// Multiple-time signatures built from index encoding plus an additively
// homomorphic one-way function, with the signing-side scalar multiplications
// precomputed away.
//
// Key material, all derived from a kappa-bit seed z:
//   x_i = prf1(z,i)   secret scalars          Y_i = x_i * P   (public table)
//   r_i = prf2(z,i)   nonce scalars           R_i = r_i * P   (secret table)
//
// Sign(m):   (i'_1..i'_k) = h1(m,z);  r = sum r_{i'_j};  R = sum R_{i'_j}
//            h = h2(R);  (i_1..i_k) = h3(m,h);  s = r - sum x_{i_j}
//            signature = (s, h).  Group cost: k-1 additions, no scalar mul.
// Verify:    (i_1..i_k) = h3(m,h);  R' = s*P + sum Y_{i_j}
//            accept iff h2(R') = h.  Group cost: 1 scalar mul, k additions.
//
// Correctness: s*P + sum Y_i = (r - sum x_i)*P + sum x_i*P = r*P = R.
//
// Secret keys default to "seeded" layout (z plus the R table); expand()
// additionally materializes the x and r scalar tables to trade memory for
// per-signature PRF calls, compress() drops them again.  Keys are immutable
// during sign/verify and safe to share across threads.

#include <cstdint>
#include <utility>
#include <vector>

#include "aris/encoding.hpp"
#include "aris/group.hpp"
#include "aris/params.hpp"

namespace aris {

template <PrimeOrderGroup G>
struct SecretKey {
  Seed seed;
  std::vector<typename G::Element> r_points;  // R_i, always present
  std::vector<typename G::Scalar> x_table;    // expanded mode only
  std::vector<typename G::Scalar> r_table;    // expanded mode only
  Params params;

  bool expanded() const { return !x_table.empty(); }
};

template <PrimeOrderGroup G>
struct PublicKey {
  std::vector<typename G::Element> y_table;
  Params params;
};

template <PrimeOrderGroup G>
struct Signature {
  typename G::Scalar s;
  Digest h;
};

// The encoding policy is a template parameter so tests can pin index
// derivation to known values; production code uses Encoding<G>.
template <PrimeOrderGroup G, class Enc = Encoding<G>>
class Scheme {
 public:
  Scheme(const G& group, Params params)
      : g_(&group), enc_(group, std::move(params)) {}
  Scheme(const G& group, Enc enc) : g_(&group), enc_(std::move(enc)) {}

  const Params& params() const { return enc_.params(); }
  const Enc& encoding() const { return enc_; }

  std::pair<SecretKey<G>, PublicKey<G>> keygen(const Seed& entropy) const {
    const Params& p = enc_.params();
    if (entropy.b.size() != p.seed_len())
      throw std::invalid_argument("entropy must be exactly kappa bits");
    SecretKey<G> sk;
    PublicKey<G> pk;
    sk.seed = entropy;
    sk.params = p;
    pk.params = p;
    sk.r_points.reserve(p.t);
    pk.y_table.reserve(p.t);
    for (std::uint32_t i = 0; i < p.t; ++i) {
      pk.y_table.push_back(g_->fixed_base_mul(enc_.prf1(sk.seed, i)));
      sk.r_points.push_back(g_->fixed_base_mul(enc_.prf2(sk.seed, i)));
    }
    return {std::move(sk), std::move(pk)};
  }

  Signature<G> sign(byte_view m, const SecretKey<G>& sk) const {
    check(sk);
    const IndexList nonce_idx = enc_.h1(m, sk.seed);

    typename G::Scalar r = nonce_scalar(sk, nonce_idx[0]);
    typename G::Element big_r = sk.r_points[nonce_idx[0]];
    for (std::size_t j = 1; j < nonce_idx.size(); ++j) {
      r = g_->scalar_add(r, nonce_scalar(sk, nonce_idx[j]));
      big_r = g_->add(big_r, sk.r_points[nonce_idx[j]]);
    }

    Digest h = enc_.h2(big_r);
    typename G::Scalar s = r;
    for (std::uint32_t i : enc_.h3(m, h))
      s = g_->scalar_sub(s, secret_scalar(sk, i));
    return {s, h};
  }

  bool verify(byte_view m, const Signature<G>& sig,
              const PublicKey<G>& pk) const {
    check(pk);
    if (sig.h.b.size() != enc_.params().h2_len()) return false;
    const IndexList idx = enc_.h3(m, sig.h);

    typename G::Element y = pk.y_table[idx[0]];
    for (std::size_t j = 1; j < idx.size(); ++j)
      y = g_->add(y, pk.y_table[idx[j]]);
    typename G::Element r_prime =
        g_->add(g_->scalar_mul(sig.s, g_->generator()), y);
    return digest_eq(enc_.h2(r_prime), sig.h);
  }

  void expand(SecretKey<G>& sk) const {
    check(sk);
    if (sk.expanded()) return;
    const Params& p = enc_.params();
    sk.x_table.reserve(p.t);
    sk.r_table.reserve(p.t);
    for (std::uint32_t i = 0; i < p.t; ++i) {
      sk.x_table.push_back(enc_.prf1(sk.seed, i));
      sk.r_table.push_back(enc_.prf2(sk.seed, i));
    }
  }

  void compress(SecretKey<G>& sk) const {
    sk.x_table.clear();
    sk.r_table.clear();
  }

  // Wire form: s (scalar_len bytes) || h (l2/8 bytes), no framing.
  bytes signature_bytes(const Signature<G>& sig) const {
    bytes out = g_->scalar_to_bytes(sig.s);
    out.insert(out.end(), sig.h.b.begin(), sig.h.b.end());
    return out;
  }

  std::optional<Signature<G>> parse_signature(byte_view b) const {
    const std::size_t slen = g_->descriptor().scalar_len;
    if (b.size() != slen + enc_.params().h2_len()) return std::nullopt;
    auto s = g_->scalar_from_bytes(b.first(slen));
    if (!s) return std::nullopt;
    return Signature<G>{*s, Digest{bytes(b.begin() + slen, b.end())}};
  }

  bool verify_bytes(byte_view m, byte_view sig_bytes,
                    const PublicKey<G>& pk) const {
    auto sig = parse_signature(sig_bytes);
    return sig.has_value() && verify(m, *sig, pk);
  }

 private:
  typename G::Scalar nonce_scalar(const SecretKey<G>& sk,
                                  std::uint32_t i) const {
    return sk.expanded() ? sk.r_table[i] : enc_.prf2(sk.seed, i);
  }
  typename G::Scalar secret_scalar(const SecretKey<G>& sk,
                                   std::uint32_t i) const {
    return sk.expanded() ? sk.x_table[i] : enc_.prf1(sk.seed, i);
  }

  void check(const SecretKey<G>& sk) const {
    const Params& p = enc_.params();
    if (!(sk.params == p) || sk.r_points.size() != p.t ||
        (sk.expanded() &&
         (sk.x_table.size() != p.t || sk.r_table.size() != p.t)))
      throw std::invalid_argument("secret key does not match scheme parameters");
  }
  void check(const PublicKey<G>& pk) const {
    if (!(pk.params == enc_.params()) || pk.y_table.size() != enc_.params().t)
      throw std::invalid_argument("public key does not match scheme parameters");
  }

  const G* g_;
  Enc enc_;
};

}  // namespace aris
