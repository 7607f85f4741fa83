#pragma once

// Umbrella header: the whole library in one include.
//
//   group.hpp            backend contract + instrumentation counters
//   toy_group.hpp        transparent mod-101 backend (tests, examples)
//   ristretto_group.hpp  production prime-order curve backend
//   params.hpp           parameter sets and the few-time security measure
//   encoding.hpp         domain-separated PRF/hash roles, index chunking
//   scheme.hpp           keygen/sign/verify, key expansion, signature wire
//   schnorr.hpp          baseline signatures for cost comparisons
//   keyfile.hpp          self-describing key containers
//   bench.hpp            timing/op-count harness and report rendering

#include "aris/bench.hpp"
#include "aris/encoding.hpp"
#include "aris/group.hpp"
#include "aris/keyfile.hpp"
#include "aris/params.hpp"
#include "aris/ristretto_group.hpp"
#include "aris/scheme.hpp"
#include "aris/schnorr.hpp"
#include "aris/toy_group.hpp"
