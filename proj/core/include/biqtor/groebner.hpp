#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "biqtor/fields.hpp"
#include "biqtor/laurent.hpp"
#include "biqtor/poly.hpp"

namespace biqtor {

struct GroebnerBudget {
  std::uint64_t max_spairs = 1'000'000;
  std::int64_t max_degree = 60;
};

struct BudgetStats {
  std::uint64_t spairs_reduced = 0;
  std::int64_t max_degree_seen = 0;
  std::uint64_t bases_built = 0;

  void merge(const BudgetStats& other) {
    spairs_reduced += other.spairs_reduced;
    max_degree_seen = std::max(max_degree_seen, other.max_degree_seen);
    bases_built += other.bases_built;
  }
};

/// Raised when a computation would exceed the configured budgets. Never a
/// silent wrong answer: callers see either a finished basis or this error.
class BudgetError : public std::runtime_error {
public:
  BudgetError(const std::string& what, BudgetStats stats)
      : std::runtime_error(what), stats(stats) {}
  BudgetStats stats;
};

/// Computation context for the affine encoding of a Laurent ring on
/// `laurent_rank` variables: x_i maps to u_i, its inverse to v_i, and the
/// relations u_i v_i - 1 are adjoined to every ideal-level computation.
/// Variable layout: u_i at index 2i, v_i at index 2i+1.
template <class F>
struct AffineContext {
  std::size_t laurent_rank = 0;
  F field;
  MonomialOrder order = MonomialOrder::DegRevLex;
  GroebnerBudget budget{};
  bool certify = false;  // re-check every S-polynomial of each finished basis

  AffineContext()
    requires std::default_initializable<F>
      : field{} {}
  AffineContext(std::size_t rank, F f) : laurent_rank(rank), field(std::move(f)) {}

  std::size_t nvars() const { return 2 * laurent_rank; }

  Polynomial<F> zero_poly() const { return Polynomial<F>(order); }

  std::vector<Polynomial<F>> base_relations() const {
    std::vector<Polynomial<F>> rels;
    for (std::size_t i = 0; i < laurent_rank; ++i) {
      Polynomial<F> p(order);
      Monomial uv = Monomial::one(nvars());
      uv.e[2 * i] = 1;
      uv.e[2 * i + 1] = 1;
      p.add_term(uv, field.one(), field);
      p.add_term(Monomial::one(nvars()), field.neg(field.one()), field);
      rels.push_back(std::move(p));
    }
    return rels;
  }
};

/// Element of a free module: one polynomial per position. The module order is
/// position-major (lower positions dominate), which makes appended tag blocks
/// an elimination block.
template <class F>
using VecPoly = std::vector<Polynomial<F>>;

template <class F>
VecPoly<F> zero_vec(const AffineContext<F>& ctx, std::size_t rank) {
  return VecPoly<F>(rank, ctx.zero_poly());
}

template <class F>
Polynomial<F> one_poly(const AffineContext<F>& ctx) {
  return Polynomial<F>::term(ctx.order, Monomial::one(ctx.nvars()), ctx.field.one(), ctx.field);
}

template <class F>
VecPoly<F> unit_vec(const AffineContext<F>& ctx, std::size_t rank, std::size_t pos) {
  VecPoly<F> v = zero_vec(ctx, rank);
  v[pos].add_term(Monomial::one(ctx.nvars()), ctx.field.one(), ctx.field);
  return v;
}

template <class F>
bool vec_is_zero(const VecPoly<F>& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

/// (position, monomial) of the leading term; position of the first nonzero
/// component, caller guarantees v != 0.
template <class F>
std::size_t lead_position(const VecPoly<F>& v) {
  for (std::size_t p = 0; p < v.size(); ++p)
    if (!v[p].is_zero()) return p;
  throw std::logic_error("lead_position: zero vector");
}

template <class F>
std::int64_t vec_max_degree(const VecPoly<F>& v) {
  std::int64_t d = 0;
  for (const auto& p : v)
    if (!p.is_zero()) d = std::max(d, p.max_degree());
  return d;
}

/// v += c * x^m * g
template <class F>
void vec_add_multiple(const AffineContext<F>& ctx, VecPoly<F>& v, const VecPoly<F>& g,
                      const Monomial& m, const typename F::Element& c) {
  for (std::size_t p = 0; p < v.size(); ++p)
    if (!g[p].is_zero()) v[p].add_multiple(g[p], m, c, ctx.field);
}

template <class F>
void vec_scale(const AffineContext<F>& ctx, VecPoly<F>& v, const typename F::Element& c) {
  for (auto& p : v) p.scale(c, ctx.field);
}

/// Reduced Groebner basis of a submodule of R^rank (rank 1 recovers ideals).
/// Elements are monic, fully interreduced and sorted by decreasing lead term,
/// so equal submodules yield identical bases.
template <class F>
struct GroebnerBasis {
  std::size_t rank = 1;
  std::vector<VecPoly<F>> elements;
  BudgetStats stats;
};

namespace detail {

template <class F>
struct ModuleTermRef {
  std::size_t pos;
  const Monomial* mon;
  const typename F::Element* coeff;
};

// Fully reduce v against the basis; canonical when the basis is reduced.
template <class F>
VecPoly<F> reduce_vec(const AffineContext<F>& ctx, const std::vector<VecPoly<F>>& basis,
                      VecPoly<F> v) {
  VecPoly<F> remainder = zero_vec<F>(ctx, v.size());
  while (!vec_is_zero(v)) {
    const std::size_t p = lead_position(v);
    const Monomial m = v[p].lead_monomial();
    const typename F::Element c = v[p].lead_coeff();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g[p].is_zero() || lead_position(g) != p) continue;
      if (!g[p].lead_monomial().divides(m)) continue;
      const Monomial q = m / g[p].lead_monomial();
      vec_add_multiple(ctx, v, g, q, ctx.field.neg(ctx.field.div(c, g[p].lead_coeff())));
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder[p].add_term(m, c, ctx.field);
      v[p].add_term(m, ctx.field.neg(c), ctx.field);
    }
  }
  return remainder;
}

template <class F>
VecPoly<F> spair(const AffineContext<F>& ctx, const VecPoly<F>& f, const VecPoly<F>& g,
                 std::size_t pos, const Monomial& lcm) {
  VecPoly<F> s = zero_vec<F>(ctx, f.size());
  vec_add_multiple(ctx, s, f, lcm / f[pos].lead_monomial(),
                   ctx.field.div(ctx.field.one(), f[pos].lead_coeff()));
  vec_add_multiple(ctx, s, g, lcm / g[pos].lead_monomial(),
                   ctx.field.neg(ctx.field.div(ctx.field.one(), g[pos].lead_coeff())));
  return s;
}

}  // namespace detail

template <class F>
bool buchberger_certificate(const AffineContext<F>& ctx, const GroebnerBasis<F>& gb);

/// Buchberger with the coprimality criterion (ideal case only) and the chain
/// criterion, followed by a canonical interreduction.
template <class F>
GroebnerBasis<F> module_groebner(const AffineContext<F>& ctx, std::size_t rank,
                                 const std::vector<VecPoly<F>>& generators,
                                 bool adjoin_base_relations) {
  GroebnerBasis<F> out;
  out.rank = rank;
  BudgetStats& stats = out.stats;
  stats.bases_built = 1;

  std::vector<VecPoly<F>> basis;
  auto push_gen = [&](VecPoly<F> v) {
    if (vec_is_zero(v)) return;
    if (v.size() != rank) throw std::invalid_argument("module_groebner: rank mismatch");
    const std::size_t p = lead_position(v);
    vec_scale(ctx, v, ctx.field.div(ctx.field.one(), v[p].lead_coeff()));
    stats.max_degree_seen = std::max(stats.max_degree_seen, vec_max_degree(v));
    basis.push_back(std::move(v));
  };
  for (const auto& g : generators) push_gen(g);
  if (adjoin_base_relations)
    for (const auto& b : ctx.base_relations())
      for (std::size_t p = 0; p < rank; ++p) {
        VecPoly<F> v = zero_vec<F>(ctx, rank);
        v[p] = b;
        push_gen(std::move(v));
      }

  // pending S-pairs keyed for deterministic selection
  struct PairKey {
    std::int64_t degree;
    std::size_t i, j;
    bool operator<(const PairKey& o) const {
      if (degree != o.degree) return degree < o.degree;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_pairs_for = [&](std::size_t j) {
    const std::size_t pj = lead_position(basis[j]);
    for (std::size_t i = 0; i < j; ++i) {
      if (lead_position(basis[i]) != pj) continue;
      Monomial lcm = Monomial::lcm(basis[i][pj].lead_monomial(), basis[j][pj].lead_monomial());
      queue.insert(PairKey{lcm.degree(), i, j});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  while (!queue.empty()) {
    PairKey key = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({key.i, key.j});

    const std::size_t p = lead_position(basis[key.i]);
    const Monomial& lmi = basis[key.i][p].lead_monomial();
    const Monomial& lmj = basis[key.j][p].lead_monomial();
    const Monomial lcm = Monomial::lcm(lmi, lmj);

    if (rank == 1 && Monomial::coprime(lmi, lmj)) continue;

    // chain criterion: some k divides the lcm and both mixed pairs are done
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == key.i || k == key.j || lead_position(basis[k]) != p) continue;
      if (!basis[k][p].lead_monomial().divides(lcm)) continue;
      auto mixed = [&](std::size_t a, std::size_t b) {
        return pending.count({std::min(a, b), std::max(a, b)}) > 0;
      };
      if (!mixed(key.i, k) && !mixed(k, key.j)) skip = true;
    }
    if (skip) continue;

    if (lcm.degree() > ctx.budget.max_degree)
      throw BudgetError("groebner: S-pair degree exceeds the degree budget", stats);
    if (++stats.spairs_reduced > ctx.budget.max_spairs)
      throw BudgetError("groebner: S-pair budget exceeded", stats);

    VecPoly<F> h = detail::reduce_vec(ctx, basis, detail::spair(ctx, basis[key.i], basis[key.j], p, lcm));
    if (vec_is_zero(h)) continue;
    if (vec_max_degree(h) > ctx.budget.max_degree)
      throw BudgetError("groebner: remainder degree exceeds the degree budget", stats);
    push_gen(std::move(h));
    add_pairs_for(basis.size() - 1);
  }

  // minimalize: keep only elements whose lead is not divisible by another kept lead
  std::vector<std::size_t> order_idx(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    const std::size_t pa = lead_position(basis[a]), pb = lead_position(basis[b]);
    if (pa != pb) return pa < pb;
    int c = compare(basis[a][pa].lead_monomial(), basis[b][pb].lead_monomial(), ctx.order);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<VecPoly<F>> kept;
  for (std::size_t idx : order_idx) {
    const std::size_t p = lead_position(basis[idx]);
    bool divisible = false;
    for (const auto& g : kept) {
      if (lead_position(g) != p) continue;
      if (g[p].lead_monomial().divides(basis[idx][p].lead_monomial())) {
        divisible = true;
        break;
      }
    }
    if (!divisible) kept.push_back(basis[idx]);
  }

  // interreduce tails for the unique reduced basis; leads are pairwise
  // indivisible at this point, so reduction cannot kill an element
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<VecPoly<F>> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    VecPoly<F> r = detail::reduce_vec(ctx, others, kept[i]);
    const std::size_t p = lead_position(r);
    vec_scale(ctx, r, ctx.field.div(ctx.field.one(), r[p].lead_coeff()));
    kept[i] = std::move(r);
  }

  std::sort(kept.begin(), kept.end(), [&](const VecPoly<F>& a, const VecPoly<F>& b) {
    const std::size_t pa = lead_position(a), pb = lead_position(b);
    if (pa != pb) return pa < pb;
    return compare(a[pa].lead_monomial(), b[pb].lead_monomial(), ctx.order) > 0;
  });
  out.elements = std::move(kept);

  if (ctx.certify && !buchberger_certificate(ctx, out))
    throw std::logic_error("groebner: Buchberger certificate failed on a finished basis");
  return out;
}

/// Canonical normal form against a reduced basis; the zero result decides
/// membership.
template <class F>
VecPoly<F> normal_form(const AffineContext<F>& ctx, const GroebnerBasis<F>& gb, VecPoly<F> v) {
  if (v.size() != gb.rank) throw std::invalid_argument("normal_form: rank mismatch");
  return detail::reduce_vec(ctx, gb.elements, std::move(v));
}

/// All S-polynomials of the basis reduce to zero.
template <class F>
bool buchberger_certificate(const AffineContext<F>& ctx, const GroebnerBasis<F>& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
      const std::size_t pi = lead_position(gb.elements[i]);
      if (lead_position(gb.elements[j]) != pi) continue;
      Monomial lcm = Monomial::lcm(gb.elements[i][pi].lead_monomial(),
                                   gb.elements[j][pi].lead_monomial());
      VecPoly<F> s = detail::spair(ctx, gb.elements[i], gb.elements[j], pi, lcm);
      if (!vec_is_zero(detail::reduce_vec(ctx, gb.elements, std::move(s)))) return false;
    }
  return true;
}

/// Encode a Laurent polynomial: each exponent splits into u/v parts with
/// min(a, b) = 0.
template <class F>
Polynomial<F> laurent_to_affine(const AffineContext<F>& ctx, const LaurentPoly& f) {
  if (f.ambient_rank() != ctx.laurent_rank)
    throw std::invalid_argument("laurent_to_affine: rank mismatch");
  Polynomial<F> out(ctx.order);
  for (const auto& [e, c] : f.terms()) {
    Monomial m = Monomial::one(ctx.nvars());
    for (std::size_t i = 0; i < ctx.laurent_rank; ++i) {
      if (e[i] > 0)
        m.e[2 * i] = static_cast<std::int32_t>(e[i]);
      else if (e[i] < 0)
        m.e[2 * i + 1] = static_cast<std::int32_t>(-e[i]);
    }
    out.add_term(m, ctx.field.from_rational(c), ctx.field);
  }
  return out;
}

/// Decode to the Laurent ring (rational coefficients only); inverse of the
/// encoding modulo the base relations.
inline LaurentPoly affine_to_laurent(const AffineContext<RationalField>& ctx,
                                     const Polynomial<RationalField>& p) {
  LaurentPoly out(ctx.laurent_rank);
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly::Exponents e(ctx.laurent_rank, 0);
    for (std::size_t i = 0; i < ctx.laurent_rank; ++i) e[i] = m.e[2 * i] - m.e[2 * i + 1];
    out.add_term(e, c);
  }
  return out;
}

/// Reduced basis of (gens + base relations): the ideal-level entry point.
template <class F>
GroebnerBasis<F> groebner_basis(const AffineContext<F>& ctx,
                                const std::vector<Polynomial<F>>& gens) {
  std::vector<VecPoly<F>> wrapped;
  wrapped.reserve(gens.size());
  for (const auto& g : gens) wrapped.push_back(VecPoly<F>{g});
  return module_groebner(ctx, 1, wrapped, /*adjoin_base_relations=*/true);
}

/// Presentation of the cokernel of the relation matrix: R^free_rank / <relations>.
template <class F>
struct ModulePresentation {
  std::size_t free_rank = 0;
  std::vector<VecPoly<F>> relations;
};

template <class F>
bool presents_zero_module(const AffineContext<F>& ctx, const ModulePresentation<F>& mp,
                          bool adjoin_base_relations = false) {
  if (mp.free_rank == 0) return true;
  GroebnerBasis<F> gb = module_groebner(ctx, mp.free_rank, mp.relations, adjoin_base_relations);
  for (std::size_t p = 0; p < mp.free_rank; ++p)
    if (!vec_is_zero(normal_form(ctx, gb, unit_vec(ctx, mp.free_rank, p)))) return false;
  return true;
}

/// Tracked basis of the module generated by `vectors` over the Laurent ring:
/// heads form a basis of the span (with the base relations folded in), and the
/// zero-head tails generate the syzygy module. One elimination computation
/// produces both.
template <class F>
struct TrackedBasis {
  std::size_t rank = 0;   // length of the input vectors
  std::size_t count = 0;  // number of input vectors
  GroebnerBasis<F> combined;

  std::vector<VecPoly<F>> syzygies(const AffineContext<F>& ctx) const {
    std::vector<VecPoly<F>> out;
    for (const auto& el : combined.elements) {
      bool head_zero = true;
      for (std::size_t p = 0; p < rank; ++p)
        if (!el[p].is_zero()) {
          head_zero = false;
          break;
        }
      if (!head_zero) continue;
      VecPoly<F> tail = zero_vec<F>(ctx, count);
      for (std::size_t p = 0; p < count; ++p) tail[p] = el[rank + p];
      out.push_back(std::move(tail));
    }
    return out;
  }

  /// Coefficients a with v = sum a_i * vectors_i modulo the base relations;
  /// nullopt if v is not in the span.
  std::optional<VecPoly<F>> lift(const AffineContext<F>& ctx, const VecPoly<F>& v) const {
    VecPoly<F> padded = zero_vec<F>(ctx, rank + count);
    for (std::size_t p = 0; p < rank; ++p) padded[p] = v[p];
    VecPoly<F> nf = normal_form(ctx, combined, std::move(padded));
    for (std::size_t p = 0; p < rank; ++p)
      if (!nf[p].is_zero()) return std::nullopt;
    VecPoly<F> out = zero_vec<F>(ctx, count);
    for (std::size_t p = 0; p < count; ++p) {
      out[p] = nf[rank + p];
      out[p].scale(ctx.field.neg(ctx.field.one()), ctx.field);
    }
    return out;
  }
};

template <class F>
TrackedBasis<F> tracked_basis(const AffineContext<F>& ctx, std::size_t rank,
                              const std::vector<VecPoly<F>>& vectors) {
  TrackedBasis<F> out;
  out.rank = rank;
  out.count = vectors.size();
  std::vector<VecPoly<F>> combined;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != rank) throw std::invalid_argument("tracked_basis: rank mismatch");
    VecPoly<F> v = zero_vec<F>(ctx, rank + vectors.size());
    for (std::size_t p = 0; p < rank; ++p) v[p] = vectors[i][p];
    v[rank + i] = one_poly(ctx);
    combined.push_back(std::move(v));
  }
  // base relations act on the head block only, with untracked coefficients
  for (const auto& b : ctx.base_relations())
    for (std::size_t p = 0; p < rank; ++p) {
      VecPoly<F> v = zero_vec<F>(ctx, rank + vectors.size());
      v[p] = b;
      combined.push_back(std::move(v));
    }
  out.combined = module_groebner(ctx, rank + vectors.size(), combined,
                                 /*adjoin_base_relations=*/false);
  return out;
}

/// Generators of the kernel of the map sending unit vectors to `vectors`,
/// over the Laurent ring.
template <class F>
ModulePresentation<F> syzygy_module(const AffineContext<F>& ctx,
                                    const std::vector<VecPoly<F>>& vectors) {
  if (vectors.empty()) return ModulePresentation<F>{0, {}};
  const std::size_t rank = vectors.front().size();
  TrackedBasis<F> tb = tracked_basis(ctx, rank, vectors);
  ModulePresentation<F> out;
  out.free_rank = vectors.size();
  out.relations = tb.syzygies(ctx);
  return out;
}

/// syzygy_module for ring elements (free rank one).
template <class F>
ModulePresentation<F> syzygy_module(const AffineContext<F>& ctx,
                                    const std::vector<Polynomial<F>>& elements) {
  std::vector<VecPoly<F>> wrapped;
  wrapped.reserve(elements.size());
  for (const auto& e : elements) wrapped.push_back(VecPoly<F>{e});
  return syzygy_module(ctx, wrapped);
}

}  // namespace biqtor
