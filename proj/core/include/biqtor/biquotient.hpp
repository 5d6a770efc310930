#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "biqtor/lattice.hpp"
#include "biqtor/root_datum.hpp"
#include "biqtor/torus.hpp"

namespace biqtor {

enum class BiquotientVerdict { Strict, Lax, Neither };

std::string to_string(BiquotientVerdict v);

/// Verdict of the strict/lax tests over all Weyl conjugates. For Lax and
/// Neither the witness records an offending element w together with the
/// invariant factors of Char(S1 n w(S2)).
struct PairClassification {
  BiquotientVerdict verdict = BiquotientVerdict::Neither;
  std::optional<WeylElement> witness;
  std::optional<AbelianInvariants> witness_intersection;
};

/// max over w of rank(S1 n w(S2)); finitely many Weyl conjugates suffice for
/// subtori of the maximal torus.
std::size_t intersection_rank(const RootDatum& datum, const TorusSubgroup& s1,
                              const TorusSubgroup& s2);

PairClassification classify_pair(const RootDatum& datum, const TorusSubgroup& s1,
                                 const TorusSubgroup& s2);

/// rank G - rank S1 - rank S2 + interrank(S1, S2): the largest degree in which
/// Tor may be nonzero for a strict or lax pair.
long vanishing_bound(const RootDatum& datum, const TorusSubgroup& s1, const TorusSubgroup& s2);

struct EnlargeOptions {
  std::uint64_t seed = 0;
  int retries_per_window = 64;
  int window_doublings = 10;
};

/// Enlarges S1 to an intermediate torus S1+ with the same intersection rank
/// against S2 and with rank G = rank S1+ + rank S2 - interrank. The pick is
/// randomized (seeded, counter-based) and every post-condition is re-verified
/// before returning.
TorusSubgroup enlarge_torus(const RootDatum& datum, const TorusSubgroup& s1,
                            const TorusSubgroup& s2, const EnlargeOptions& opts = {});

/// Counter-based deterministic generator used for the enlargement sampling and
/// for the randomized test suites.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next();
  /// Uniform value in [lo, hi].
  std::int64_t next_in(std::int64_t lo, std::int64_t hi);
};

}  // namespace biqtor
