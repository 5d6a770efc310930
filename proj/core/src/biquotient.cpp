#include "biqtor/biquotient.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace biqtor {

std::string to_string(BiquotientVerdict v) {
  switch (v) {
    case BiquotientVerdict::Strict: return "strict";
    case BiquotientVerdict::Lax: return "lax";
    case BiquotientVerdict::Neither: return "neither";
  }
  return "?";
}

std::uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::next_in(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

namespace {

void check_subtori(const RootDatum& datum, const TorusSubgroup& s1, const TorusSubgroup& s2) {
  if (s1.ambient_rank != datum.rank || s2.ambient_rank != datum.rank)
    throw std::invalid_argument("biquotient: subgroup ambient rank differs from group rank");
  if (!s1.is_subtorus() || !s2.is_subtorus())
    throw std::invalid_argument("biquotient: inputs must be subtori of the maximal torus");
}

// Distinct Weyl images of k2, each paired with one representative element.
std::vector<std::pair<WeylElement, Sublattice>> conjugate_lattices(const RootDatum& datum,
                                                                   const Sublattice& k2) {
  std::vector<std::pair<WeylElement, Sublattice>> out;
  for_each_weyl_element(datum, [&](const WeylElement& w) {
    Sublattice img = act_on_lattice(w, k2);
    for (const auto& [_, seen] : out)
      if (seen == img) return;
    out.emplace_back(w, std::move(img));
  });
  return out;
}

}  // namespace

std::size_t intersection_rank(const RootDatum& datum, const TorusSubgroup& s1,
                              const TorusSubgroup& s2) {
  check_subtori(datum, s1, s2);
  std::size_t best = 0;
  for (const auto& [w, img] : conjugate_lattices(datum, s2.k))
    best = std::max(best, datum.rank - lattice_sum(s1.k, img).rank());
  return best;
}

PairClassification classify_pair(const RootDatum& datum, const TorusSubgroup& s1,
                                 const TorusSubgroup& s2) {
  check_subtori(datum, s1, s2);
  PairClassification out;
  out.verdict = BiquotientVerdict::Strict;
  std::optional<WeylElement> lax_witness;
  std::optional<AbelianInvariants> lax_component;
  for (const auto& [w, img] : conjugate_lattices(datum, s2.k)) {
    Sublattice sum = lattice_sum(s1.k, img);
    AbelianInvariants q = quotient_invariants(datum.rank, sum);
    if (q.is_trivial()) continue;  // intersection trivial for this conjugate
    if (!sum.contains(datum.root_lattice)) {
      // intersection not even central
      out.verdict = BiquotientVerdict::Neither;
      out.witness = w;
      out.witness_intersection = q;
      return out;
    }
    out.verdict = BiquotientVerdict::Lax;
    if (!lax_witness) {
      lax_witness = w;
      lax_component = q;
    }
  }
  if (out.verdict == BiquotientVerdict::Lax) {
    out.witness = lax_witness;
    out.witness_intersection = lax_component;
  }
  return out;
}

long vanishing_bound(const RootDatum& datum, const TorusSubgroup& s1, const TorusSubgroup& s2) {
  check_subtori(datum, s1, s2);
  return static_cast<long>(datum.rank) - static_cast<long>(s1.rank()) -
         static_cast<long>(s2.rank()) + static_cast<long>(intersection_rank(datum, s1, s2));
}

TorusSubgroup enlarge_torus(const RootDatum& datum, const TorusSubgroup& s1,
                            const TorusSubgroup& s2, const EnlargeOptions& opts) {
  check_subtori(datum, s1, s2);
  const std::size_t r = datum.rank;
  const auto conjugates = conjugate_lattices(datum, s2.k);

  const std::size_t c2 = s2.k.rank();
  std::size_t sum_rank_min = r;
  for (const auto& [w, img] : conjugates)
    sum_rank_min = std::min(sum_rank_min, lattice_sum(s1.k, img).rank());
  const std::size_t target_rank = sum_rank_min - c2;

  auto admissible = [&](const Sublattice& cand) {
    if (cand.rank() != target_rank) return false;
    for (const auto& [w, img] : conjugates)
      if (lattice_sum(cand, img).rank() != sum_rank_min) return false;
    return true;
  };

  auto verify = [&](const Sublattice& cand) -> TorusSubgroup {
    TorusSubgroup enlarged{r, cand};
    if (!s1.k.contains(cand)) throw std::logic_error("enlarge_torus: candidate not inside k(S1)");
    if (!is_direct_summand(cand)) throw std::logic_error("enlarge_torus: candidate not a summand");
    const std::size_t inter = intersection_rank(datum, enlarged, s2);
    if (inter != intersection_rank(datum, s1, s2))
      throw std::logic_error("enlarge_torus: intersection rank changed");
    if (r != enlarged.rank() + s2.rank() - inter)
      throw std::logic_error("enlarge_torus: maximal-rank equality failed");
    return enlarged;
  };

  if (s1.k.rank() == target_rank) return verify(s1.k);

  SplitMix64 rng(opts.seed);
  const IntMatrix& b1 = s1.k.basis();
  std::int64_t window = 2;
  for (int doubling = 0; doubling <= opts.window_doublings; ++doubling, window *= 2) {
    for (int attempt = 0; attempt < opts.retries_per_window; ++attempt) {
      // random integer combinations of k(S1)'s basis rows, then saturate
      IntMatrix gens(target_rank, r);
      for (std::size_t i = 0; i < target_rank; ++i)
        for (std::size_t k = 0; k < b1.rows(); ++k) {
          Int c(static_cast<long>(rng.next_in(-window, window)));
          if (c == 0) continue;
          for (std::size_t j = 0; j < r; ++j) gens(i, j) += c * b1(k, j);
        }
      Sublattice cand = saturate(Sublattice::from_generators(r, gens));
      if (admissible(cand)) return verify(cand);
    }
  }
  throw std::logic_error(
      "enlarge_torus: retry budget exhausted; a generic pick always exists, so this signals a bug");
}

}  // namespace biqtor
