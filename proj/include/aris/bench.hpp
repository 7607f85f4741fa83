#pragma once

// Benchmark harness: times keygen/sign/verify for the index-encoding scheme
// and the baseline over any backend, reports medians and 95th percentiles,
// captures the exact per-operation group-op counts, and renders CSV or a
// markdown comparison table.  Message corpora are generated from a fixed
// seed with a standard PRNG so runs are reproducible; nothing here feeds key
// material.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aris/keyfile.hpp"
#include "aris/scheme.hpp"
#include "aris/schnorr.hpp"

namespace aris {

struct LatencyStats {
  double median_us = 0;
  double p95_us = 0;
};

struct BenchReport {
  std::string scheme;
  std::string params;  // "-" for the parameterless baseline
  LatencyStats keygen, sign, verify;
  double end_to_end_us = 0;  // defined as sign median + verify median
  double ops_per_sec = 0;    // sign+verify round-trips per second, 1e6/e2e
  OpCounters per_sign, per_verify;  // group ops in one operation
  std::size_t pk_bytes = 0;
  std::size_t sig_bytes = 0;
};

struct BenchConfig {
  std::uint32_t iterations = 1000;
  std::uint32_t warmup = 100;
  std::uint32_t keygen_iterations = 5;
  std::uint64_t seed = 1;  // corpus/key seed, for reproducible runs
};

// Simple physical model for relating measured latency to an energy budget:
// a device drawing `amps` at `volts` for t seconds spends V*I*t joules.
struct EnergyModel {
  double volts;
  double amps;
};

inline double energy_joules(const EnergyModel& m, double seconds) {
  if (!(m.volts >= 0) || !(m.amps >= 0) || !(seconds >= 0))
    throw std::invalid_argument("energy model values must be non-negative");
  return m.volts * m.amps * seconds;
}

namespace detail {

inline LatencyStats summarize(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  LatencyStats s;
  s.median_us = (n % 2) ? samples[n / 2]
                        : (samples[n / 2 - 1] + samples[n / 2]) / 2.0;
  std::size_t idx = static_cast<std::size_t>(std::ceil(0.95 * n));
  s.p95_us = samples[(idx ? idx : 1) - 1];
  return s;
}

inline std::vector<bytes> message_corpus(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::vector<bytes> out(n);
  for (auto& m : out) {
    m.resize(32 + rng() % 65);
    for (auto& b : m) b = static_cast<std::uint8_t>(rng());
  }
  return out;
}

inline Seed derived_seed(std::uint64_t seed, std::uint64_t n,
                         std::size_t len) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
  Seed z;
  z.b.resize(len);
  for (auto& b : z.b) b = static_cast<std::uint8_t>(rng());
  return z;
}

inline double elapsed_us(std::chrono::steady_clock::time_point a,
                         std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::micro>(b - a).count();
}

inline void check_config(const BenchConfig& c) {
  if (c.iterations < 100)
    throw std::invalid_argument("need at least 100 measured iterations");
  if (c.keygen_iterations == 0)
    throw std::invalid_argument("keygen iteration count must be positive");
}

inline void finish_latency(BenchReport& rep, std::vector<double> sign_us,
                           std::vector<double> verify_us) {
  rep.sign = summarize(std::move(sign_us));
  rep.verify = summarize(std::move(verify_us));
  rep.end_to_end_us = rep.sign.median_us + rep.verify.median_us;
  rep.ops_per_sec = rep.end_to_end_us > 0 ? 1e6 / rep.end_to_end_us : 0;
}

}  // namespace detail

// Times the index-encoding scheme with a seeded (non-expanded) secret key,
// the deployment mode whose signing cost the scheme is designed around.
template <PrimeOrderGroup G>
BenchReport bench_scheme(const G& g, const Params& p,
                         const BenchConfig& cfg) {
  detail::check_config(cfg);
  using clock = std::chrono::steady_clock;
  Scheme<G> scheme(g, p);
  BenchReport rep;
  rep.scheme = "aris";
  rep.params = p.name;

  std::vector<double> kg;
  for (std::uint32_t i = 0; i < cfg.keygen_iterations; ++i) {
    Seed z = detail::derived_seed(cfg.seed, i, p.seed_len());
    auto t0 = clock::now();
    auto kp = scheme.keygen(z);
    auto t1 = clock::now();
    kg.push_back(detail::elapsed_us(t0, t1));
    (void)kp;
  }
  rep.keygen = detail::summarize(kg);

  auto [sk, pk] = scheme.keygen(detail::derived_seed(cfg.seed, 0, p.seed_len()));
  auto corpus = detail::message_corpus(cfg.seed, 256);

  for (std::uint32_t i = 0; i < cfg.warmup; ++i) {
    const bytes& m = corpus[i % corpus.size()];
    if (!scheme.verify(m, scheme.sign(m, sk), pk))
      throw std::runtime_error("benchmark warmup produced an invalid signature");
  }

  std::vector<double> sign_us, verify_us;
  for (std::uint32_t i = 0; i < cfg.iterations; ++i) {
    const bytes& m = corpus[i % corpus.size()];
    auto t0 = clock::now();
    auto sig = scheme.sign(m, sk);
    auto t1 = clock::now();
    bool ok = scheme.verify(m, sig, pk);
    auto t2 = clock::now();
    if (!ok) throw std::runtime_error("benchmark produced an invalid signature");
    sign_us.push_back(detail::elapsed_us(t0, t1));
    verify_us.push_back(detail::elapsed_us(t1, t2));
  }
  detail::finish_latency(rep, std::move(sign_us), std::move(verify_us));

  auto sig = scheme.sign(corpus[0], sk);
  g.reset_instrumentation();
  (void)scheme.sign(corpus[0], sk);
  rep.per_sign = g.instrumentation_snapshot();
  g.reset_instrumentation();
  (void)scheme.verify(corpus[0], sig, pk);
  rep.per_verify = g.instrumentation_snapshot();
  g.reset_instrumentation();

  rep.pk_bytes = public_table_bytes(g, p);
  rep.sig_bytes = scheme.signature_bytes(sig).size();
  return rep;
}

template <PrimeOrderGroup G>
BenchReport bench_baseline(const G& g, const BenchConfig& cfg) {
  detail::check_config(cfg);
  using clock = std::chrono::steady_clock;
  BenchReport rep;
  rep.scheme = "schnorr";
  rep.params = "-";

  std::vector<double> kg;
  for (std::uint32_t i = 0; i < cfg.keygen_iterations; ++i) {
    Seed z = detail::derived_seed(cfg.seed, i, 32);
    auto t0 = clock::now();
    auto kp = schnorr_keygen(g, z);
    auto t1 = clock::now();
    kg.push_back(detail::elapsed_us(t0, t1));
    (void)kp;
  }
  rep.keygen = detail::summarize(kg);

  auto kp = schnorr_keygen(g, detail::derived_seed(cfg.seed, 0, 32));
  auto corpus = detail::message_corpus(cfg.seed, 256);

  for (std::uint32_t i = 0; i < cfg.warmup; ++i) {
    const bytes& m = corpus[i % corpus.size()];
    if (!schnorr_verify(g, m, schnorr_sign(g, m, kp), kp.pub))
      throw std::runtime_error("benchmark warmup produced an invalid signature");
  }

  std::vector<double> sign_us, verify_us;
  for (std::uint32_t i = 0; i < cfg.iterations; ++i) {
    const bytes& m = corpus[i % corpus.size()];
    auto t0 = clock::now();
    auto sig = schnorr_sign(g, m, kp);
    auto t1 = clock::now();
    bool ok = schnorr_verify(g, m, sig, kp.pub);
    auto t2 = clock::now();
    if (!ok) throw std::runtime_error("benchmark produced an invalid signature");
    sign_us.push_back(detail::elapsed_us(t0, t1));
    verify_us.push_back(detail::elapsed_us(t1, t2));
  }
  detail::finish_latency(rep, std::move(sign_us), std::move(verify_us));

  auto sig = schnorr_sign(g, corpus[0], kp);
  g.reset_instrumentation();
  (void)schnorr_sign(g, corpus[0], kp);
  rep.per_sign = g.instrumentation_snapshot();
  g.reset_instrumentation();
  (void)schnorr_verify(g, corpus[0], sig, kp.pub);
  rep.per_verify = g.instrumentation_snapshot();
  g.reset_instrumentation();

  rep.pk_bytes = g.descriptor().element_len;
  rep.sig_bytes = 2 * g.descriptor().scalar_len;
  return rep;
}

// One row per report: medians in microseconds, then the per-operation
// group-op counts.
inline std::string bench_csv(const std::vector<BenchReport>& reports) {
  std::ostringstream out;
  out << "scheme,params,sign_us,verify_us,keygen_us,e2e_us,"
         "scalar_muls_sign,scalar_muls_verify,adds_sign,adds_verify\n";
  out.setf(std::ios::fixed);
  out.precision(3);
  for (const auto& r : reports)
    out << r.scheme << ',' << r.params << ',' << r.sign.median_us << ','
        << r.verify.median_us << ',' << r.keygen.median_us << ','
        << r.end_to_end_us << ',' << r.per_sign.scalar_muls << ','
        << r.per_verify.scalar_muls << ',' << r.per_sign.adds << ','
        << r.per_verify.adds << '\n';
  return out.str();
}

// Side-by-side table, one scheme per row; latency cells are median (p95).
// With an energy model, adds joules per sign+verify at the median.
inline std::string bench_markdown(const std::vector<BenchReport>& reports,
                                  const EnergyModel* energy = nullptr) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out << "| scheme | params | keygen us | sign us | verify us | muls+adds "
         "sign | muls+adds verify | pk bytes | sig bytes |";
  if (energy) out << " e2e mJ |";
  out << "\n|---|---|---|---|---|---|---|---|---|";
  if (energy) out << "---|";
  out << '\n';
  for (const auto& r : reports) {
    out.precision(1);
    out << "| " << r.scheme << " | " << r.params << " | " << r.keygen.median_us
        << " | " << r.sign.median_us << " (" << r.sign.p95_us << ") | "
        << r.verify.median_us << " (" << r.verify.p95_us << ") | "
        << r.per_sign.scalar_muls << "+" << r.per_sign.adds << " | "
        << r.per_verify.scalar_muls << "+" << r.per_verify.adds << " | "
        << r.pk_bytes << " | " << r.sig_bytes << " |";
    if (energy) {
      out.precision(4);
      out << ' ' << 1e3 * energy_joules(*energy, r.end_to_end_us * 1e-6)
          << " |";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace aris
