// Command-line front end: key generation, signing, verification, test-vector
// emission, and key-file inspection over the curve backend.
//
// Exit codes everywhere: 0 success/valid, 1 invalid signature, 2 any error
// (bad flags, unreadable or malformed files, group mismatch).
//
// Key and signature files are binary by default; --hex writes them as hex
// text instead, and readers accept either form automatically.  Message files
// are always taken verbatim.

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "aris/aris.hpp"

namespace {

using aris::bytes;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitError = 2;

// Tool-level hash tags for the vectors command, disjoint from the library's
// 0x01..0x08 range.
constexpr std::uint8_t kTagVectorSeed = 0x10;
constexpr std::uint8_t kTagVectorMessage = 0x11;
constexpr std::uint8_t kTagKeyDigest = 0x12;

bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("failed reading '" + path + "'");
  return data;
}

void write_file(const std::string& path, aris::byte_view data, bool as_hex) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  if (as_hex) {
    std::string hex = aris::to_hex(data);
    out.write(hex.data(), static_cast<std::streamsize>(hex.size()));
    out.put('\n');
  } else {
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
  }
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

// Reads a key/signature file written either raw or as hex text.  Hex is
// recognized when the whole file is hex digits plus whitespace; binary key
// files can never satisfy that (the magic contains non-hex letters), and a
// random binary signature satisfying it is vanishingly unlikely.
bytes load_auto(const std::string& path) {
  bytes raw = read_file(path);
  bool hexish = !raw.empty();
  std::size_t digits = 0;
  for (std::uint8_t c : raw) {
    if (std::isxdigit(c)) {
      ++digits;
    } else if (c != ' ' && c != '\t' && c != '\r' && c != '\n') {
      hexish = false;
      break;
    }
  }
  if (hexish && digits > 0 && digits % 2 == 0) {
    auto decoded = aris::from_hex(
        std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
    if (decoded) return *decoded;
  }
  return raw;
}

aris::Seed seed_from_hex(const std::string& hex, std::size_t want_len) {
  auto b = aris::from_hex(hex);
  if (!b) throw std::runtime_error("--seed-hex is not valid hex");
  if (b->size() != want_len)
    throw std::runtime_error("--seed-hex must decode to exactly " +
                             std::to_string(want_len) + " bytes");
  return aris::Seed{std::move(*b)};
}

std::string describe_security(const aris::Params& p) {
  std::ostringstream out;
  out << p.sec_bits << " bits";
  if (p.below_target())
    out << " (below the " << p.kappa_bits << "-bit seed level)";
  return out.str();
}

int cmd_keygen(const std::string& params_name, const std::string& prefix,
               const std::string& seed_hex, bool hex, bool expanded) {
  aris::Ristretto255Group g;
  aris::Params p = aris::builtin_params(params_name);
  aris::Scheme<aris::Ristretto255Group> scheme(g, p);

  aris::Seed z = seed_hex.empty() ? aris::Seed::random(p.seed_len())
                                  : seed_from_hex(seed_hex, p.seed_len());
  auto [sk, pk] = scheme.keygen(z);
  if (expanded) scheme.expand(sk);

  bytes sk_bytes = aris::serialize_secret_key(g, sk);
  bytes pk_bytes = aris::serialize_public_key(g, pk);
  write_file(prefix + ".sk", sk_bytes, hex);
  write_file(prefix + ".pk", pk_bytes, hex);

  std::cout << "parameter set : " << p.name << " (t=" << p.t << ", k=" << p.k
            << ", l1=" << p.l1_bits << ", l2=" << p.l2_bits << ")\n"
            << "security      : " << describe_security(p) << "\n"
            << "wrote " << prefix << ".sk : " << sk_bytes.size() << " bytes ("
            << (sk.expanded() ? "expanded" : "seeded") << ")\n"
            << "wrote " << prefix << ".pk : " << pk_bytes.size()
            << " bytes (public table "
            << aris::public_table_bytes(g, p) << " bytes)\n";
  if (p.below_target())
    std::cout << "warning: achieved few-time security is " << p.sec_bits
              << " bits, below the " << p.kappa_bits << "-bit target\n";
  return kExitValid;
}

int cmd_sign(const std::string& key_path, const std::string& msg_path,
             const std::string& out_path, bool hex) {
  aris::Ristretto255Group g;
  auto sk = aris::parse_secret_key(g, load_auto(key_path));
  aris::Scheme<aris::Ristretto255Group> scheme(g, sk.params);
  bytes m = read_file(msg_path);
  bytes sig = scheme.signature_bytes(scheme.sign(m, sk));
  write_file(out_path, sig, hex);
  std::cout << "wrote " << out_path << " : " << sig.size() << " bytes\n";
  return kExitValid;
}

int cmd_verify(const std::string& pub_path, const std::string& msg_path,
               const std::string& sig_path) {
  aris::Ristretto255Group g;
  auto pk = aris::parse_public_key(g, load_auto(pub_path));
  aris::Scheme<aris::Ristretto255Group> scheme(g, pk.params);
  bytes m = read_file(msg_path);
  bytes sig = load_auto(sig_path);

  // A wrong-sized file is malformed input (exit 2); a right-sized signature
  // that fails — including a non-canonical scalar — is INVALID (exit 1).
  const std::size_t want =
      g.descriptor().scalar_len + pk.params.h2_len();
  if (sig.size() != want)
    throw std::runtime_error("signature file must be " + std::to_string(want) +
                             " bytes, got " + std::to_string(sig.size()));

  if (scheme.verify_bytes(m, sig, pk)) {
    std::cout << "VALID\n";
    return kExitValid;
  }
  std::cout << "INVALID\n";
  return kExitInvalid;
}

int cmd_inspect(const std::string& path) {
  aris::KeyFileInfo info = aris::peek_key_info(load_auto(path));
  std::cout << "kind        : "
            << (info.kind == aris::kKindSecret
                    ? (info.expanded() ? "secret key (expanded)"
                                       : "secret key (seeded)")
                    : "public key")
            << "\n"
            << "group       : " << info.group_id << "\n"
            << "parameters  : t=" << info.t << ", k=" << info.k
            << ", l1=" << info.l1_bits << ", l2=" << info.l2_bits
            << ", kappa=" << info.kappa_bits << "\n";
  try {
    std::cout << "security    : " << aris::security_bits(info.t, info.k)
              << " bits (seed level " << info.kappa_bits << ")\n";
  } catch (const std::invalid_argument&) {
    std::cout << "security    : undefined for these parameters\n";
  }
  std::cout << "payload     : " << info.payload_len << " bytes\n";
  return kExitValid;
}

int cmd_vectors(const std::string& params_name, std::uint32_t count,
                std::uint64_t seed, const std::string& out_path) {
  aris::Ristretto255Group g;
  aris::Params p = aris::builtin_params(params_name);
  aris::Scheme<aris::Ristretto255Group> scheme(g, p);

  std::ostringstream lines;
  const auto seed8 = aris::le64(seed);
  for (std::uint32_t n = 0; n < count; ++n) {
    const auto n8 = aris::le64(n);
    aris::Seed z{aris::tagged_hash(kTagVectorSeed, {},
                                   {aris::byte_view(seed8), aris::byte_view(n8)},
                                   p.seed_len())};
    bytes m = aris::tagged_hash(kTagVectorMessage, {},
                                {aris::byte_view(seed8), aris::byte_view(n8)},
                                32 + n % 33);
    auto [sk, pk] = scheme.keygen(z);
    bytes sig = scheme.signature_bytes(scheme.sign(m, sk));
    bytes pk_digest = aris::tagged_hash(
        kTagKeyDigest, {}, {aris::serialize_public_key(g, pk)}, 32);

    // Fixed field order, one object per line, for byte-stable diffing.
    lines << "{\"params\":\"" << p.name << "\",\"seed_hex\":\""
          << aris::to_hex(z.b) << "\",\"msg_hex\":\"" << aris::to_hex(m)
          << "\",\"sig_hex\":\"" << aris::to_hex(sig)
          << "\",\"pk_digest_hex\":\"" << aris::to_hex(pk_digest) << "\"}\n";
  }

  const std::string text = lines.str();
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "'");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + out_path + "'");
  }
  return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple-time signatures with precomputed signing"};
  app.require_subcommand(1);

  std::string params_name = "commodity", prefix, seed_hex;
  bool hex = false, expanded = false;
  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--params", params_name,
                     "Parameter set: commodity or embedded");
  keygen->add_option("--out-prefix", prefix, "Write <prefix>.sk and <prefix>.pk")
      ->required();
  keygen->add_option("--seed-hex", seed_hex,
                     "Deterministic seed (hex, exactly kappa bits)");
  keygen->add_flag("--hex", hex, "Write files as hex text");
  keygen->add_flag("--expanded", expanded,
                   "Store expanded scalar tables in the secret key");

  std::string key_path, in_path, out_path;
  auto* sign = app.add_subcommand("sign", "Sign a message file");
  sign->add_option("--key", key_path, "Secret key file")->required();
  sign->add_option("--in", in_path, "Message file (read verbatim)")->required();
  sign->add_option("--out", out_path, "Signature output file")->required();
  sign->add_flag("--hex", hex, "Write the signature as hex text");

  std::string pub_path, sig_path;
  auto* verify = app.add_subcommand("verify", "Verify a signature file");
  verify->add_option("--pub", pub_path, "Public key file")->required();
  verify->add_option("--in", in_path, "Message file (read verbatim)")
      ->required();
  verify->add_option("--sig", sig_path, "Signature file")->required();

  auto* inspect = app.add_subcommand("inspect", "Describe a key file header");
  inspect->add_option("--key", key_path, "Key file (secret or public)")
      ->required();

  std::uint32_t count = 8;
  std::uint64_t seed = 1;
  auto* vectors = app.add_subcommand(
      "vectors", "Emit deterministic JSON-lines test vectors");
  vectors->add_option("--params", params_name,
                      "Parameter set: commodity or embedded");
  vectors->add_option("--count", count, "Number of vectors");
  vectors->add_option("--seed", seed, "Master seed (integer)");
  vectors->add_option("--out", out_path, "Output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (app.got_subcommand(keygen))
      return cmd_keygen(params_name, prefix, seed_hex, hex, expanded);
    if (app.got_subcommand(sign))
      return cmd_sign(key_path, in_path, out_path, hex);
    if (app.got_subcommand(verify))
      return cmd_verify(pub_path, in_path, sig_path);
    if (app.got_subcommand(inspect)) return cmd_inspect(key_path);
    if (app.got_subcommand(vectors))
      return cmd_vectors(params_name, count, seed, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;  // unreachable with require_subcommand(1)
}
