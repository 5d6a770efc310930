#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "biqtor/groebner.hpp"
#include "biqtor/toral_tor.hpp"

namespace biqtor {

/// H_i of a Koszul complex: decided zero, of finite coefficient-field
/// dimension, or presented as a cokernel when infinite-dimensional.
template <class F>
struct HomologyDescriptor {
  std::size_t degree = 0;
  bool is_zero = false;
  std::optional<Int> finite_dim;
  std::optional<ModulePresentation<F>> presentation;
};

template <class F>
struct KoszulHomology {
  std::vector<HomologyDescriptor<F>> degrees;
  BudgetStats stats;
};

namespace detail {

/// Subsets of {0..n-1} of size k, each as an ascending index list, in
/// lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    // advance
    std::size_t i = k;
    while (i-- > 0) {
      if (cur[i] + (k - i) < n) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

inline std::size_t subset_index(const std::vector<std::vector<std::size_t>>& level,
                                const std::vector<std::size_t>& s) {
  for (std::size_t i = 0; i < level.size(); ++i)
    if (level[i] == s) return i;
  throw std::logic_error("koszul: subset not found");
}

/// Columns of the Koszul differential d_k: Lambda^k -> Lambda^{k-1}.
template <class F>
std::vector<VecPoly<F>> koszul_columns(const AffineContext<F>& ctx,
                                       const std::vector<Polynomial<F>>& elems, std::size_t k) {
  const std::size_t n = elems.size();
  const auto level_k = subsets(n, k);
  const auto level_km1 = subsets(n, k - 1);
  std::vector<VecPoly<F>> cols;
  cols.reserve(level_k.size());
  for (const auto& s : level_k) {
    VecPoly<F> col = zero_vec<F>(ctx, level_km1.size());
    typename F::Element sign = ctx.field.one();
    for (std::size_t l = 0; l < s.size(); ++l) {
      std::vector<std::size_t> rest;
      rest.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != l) rest.push_back(s[j]);
      const std::size_t pos = subset_index(level_km1, rest);
      col[pos].add_multiple(elems[s[l]], Monomial::one(ctx.nvars()), sign, ctx.field);
      sign = ctx.field.neg(sign);
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

/// Number of standard monomials of the monomial module spanned by `leads` in
/// a free module of the given rank; nullopt when infinite.
inline std::optional<Int> staircase_count(std::size_t nvars, std::size_t rank,
                                          const std::vector<std::pair<std::size_t, Monomial>>& leads) {
  Int total = 0;
  for (std::size_t p = 0; p < rank; ++p) {
    std::vector<Monomial> gens;
    for (const auto& [pos, m] : leads)
      if (pos == p) gens.push_back(m);
    if (nvars == 0) {
      if (gens.empty()) total += 1;
      continue;
    }
    if (gens.empty()) return std::nullopt;
    // finite iff every variable has a pure power among the generators
    std::vector<std::int64_t> bound(nvars, -1);
    for (const auto& g : gens) {
      std::size_t nz = 0, var = 0;
      for (std::size_t i = 0; i < nvars; ++i)
        if (g.e[i] > 0) {
          ++nz;
          var = i;
        }
      if (nz == 1 && (bound[var] < 0 || g.e[var] < bound[var])) bound[var] = g.e[var];
      if (nz == 0) {
        bound.assign(nvars, 0);  // 1 is a generator: nothing standard
        break;
      }
    }
    for (auto b : bound)
      if (b < 0) return std::nullopt;

    // enumerate standard monomials; divisibility prunes whole subtrees
    Monomial cur = Monomial::one(nvars);
    Int count = 0;
    auto divisible = [&]() {
      for (const auto& g : gens)
        if (g.divides(cur)) return true;
      return false;
    };
    std::function<void(std::size_t)> walk = [&](std::size_t var) {
      if (divisible()) return;
      if (var == nvars) {
        ++count;
        return;
      }
      for (std::int64_t e = 0; e < bound[var]; ++e) {
        cur.e[var] = static_cast<std::int32_t>(e);
        walk(var + 1);
      }
      cur.e[var] = 0;
    };
    walk(0);
    total += count;
  }
  return total;
}

}  // namespace detail

/// Homology of the Koszul complex on `elems` over the Laurent ring, for
/// degrees 0..max_degree (max_degree <= elems.size()).
/// H_i = ker d_i / im d_{i+1}; kernels come from syzygies, the zero test from
/// membership of kernel generators in the image, and finite dimensions from
/// staircase counting on a presentation of the quotient.
template <class F>
KoszulHomology<F> koszul_homology(const AffineContext<F>& ctx,
                                  const std::vector<Polynomial<F>>& elems,
                                  std::size_t max_degree) {
  const std::size_t n = elems.size();
  if (max_degree > n)
    throw std::invalid_argument("koszul_homology: max_degree exceeds the number of elements");

  KoszulHomology<F> out;
  for (std::size_t i = 0; i <= max_degree; ++i) {
    const std::size_t rank = detail::subsets(n, i).size();  // C(n, i)

    // generators of ker d_i over the Laurent ring
    std::vector<VecPoly<F>> kernel_gens;
    if (i == 0) {
      kernel_gens.push_back(unit_vec(ctx, 1, 0));
    } else {
      auto cols = detail::koszul_columns(ctx, elems, i);
      TrackedBasis<F> ker_tb = tracked_basis(ctx, cols.front().size(), cols);
      out.stats.merge(ker_tb.combined.stats);
      kernel_gens = ker_tb.syzygies(ctx);
    }

    // image generators: columns of d_{i+1}
    std::vector<VecPoly<F>> image_gens;
    if (i < n) image_gens = detail::koszul_columns(ctx, elems, i + 1);

    GroebnerBasis<F> image_gb = module_groebner(ctx, rank, image_gens, /*adjoin_base=*/true);
    out.stats.merge(image_gb.stats);

    HomologyDescriptor<F> desc;
    desc.degree = i;
    bool zero = true;
    for (const auto& g : kernel_gens)
      if (!vec_is_zero(normal_form(ctx, image_gb, g))) {
        zero = false;
        break;
      }
    if (zero) {
      desc.is_zero = true;
      desc.finite_dim = Int(0);
      out.degrees.push_back(std::move(desc));
      continue;
    }

    // presentation of ker/im on the reduced kernel basis
    GroebnerBasis<F> kernel_gb = module_groebner(ctx, rank, kernel_gens, /*adjoin_base=*/true);
    out.stats.merge(kernel_gb.stats);
    const std::vector<VecPoly<F>>& gens = kernel_gb.elements;

    TrackedBasis<F> tracked = tracked_basis(ctx, rank, gens);
    out.stats.merge(tracked.combined.stats);

    std::vector<VecPoly<F>> relations = tracked.syzygies(ctx);
    {
      // base-relation multiples of the image positions are image generators too
      std::vector<VecPoly<F>> full_image = image_gens;
      for (const auto& b : ctx.base_relations())
        for (std::size_t p = 0; p < rank; ++p) {
          VecPoly<F> v = zero_vec<F>(ctx, rank);
          v[p] = b;
          full_image.push_back(std::move(v));
        }
      for (const auto& h : full_image) {
        if (vec_is_zero(h)) continue;
        auto lifted = tracked.lift(ctx, h);
        if (!lifted)
          throw std::logic_error("koszul_homology: image element failed to lift into the kernel");
        if (!vec_is_zero(*lifted)) relations.push_back(std::move(*lifted));
      }
    }

    GroebnerBasis<F> rel_gb = module_groebner(ctx, gens.size(), relations, /*adjoin_base=*/false);
    out.stats.merge(rel_gb.stats);

    std::vector<std::pair<std::size_t, Monomial>> leads;
    for (const auto& el : rel_gb.elements) {
      const std::size_t p = lead_position(el);
      leads.emplace_back(p, el[p].lead_monomial());
    }
    desc.is_zero = false;
    desc.finite_dim = detail::staircase_count(ctx.nvars(), gens.size(), leads);
    if (!desc.finite_dim)
      desc.presentation = ModulePresentation<F>{gens.size(), rel_gb.elements};
    out.degrees.push_back(std::move(desc));
  }
  return out;
}

}  // namespace biqtor
