#pragma once

#include <vector>

#include <doctest.h>

#include "biqtor/biquotient.hpp"
#include "biqtor/int_matrix.hpp"
#include "biqtor/lattice.hpp"

namespace biqtor::testing {

/// Deterministic random matrix with entries in [-span, span].
inline IntMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, long span) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng.next_in(-span, span));
  return m;
}

inline Sublattice random_lattice(SplitMix64& rng, std::size_t ambient, long span) {
  const std::size_t rows = static_cast<std::size_t>(rng.next_in(0, static_cast<long>(ambient)));
  return Sublattice::from_generators(ambient, random_matrix(rng, rows, ambient, span));
}

/// Random direct summand (saturated) of the given ambient rank.
inline Sublattice random_summand(SplitMix64& rng, std::size_t ambient, long span) {
  return saturate(random_lattice(rng, ambient, span));
}

}  // namespace biqtor::testing
