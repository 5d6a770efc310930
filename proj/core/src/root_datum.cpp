#include "biqtor/root_datum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace biqtor {

std::size_t GroupFactor::rank() const {
  switch (type) {
    case Type::SU: return n - 1;
    case Type::Sp: return n;
    case Type::Torus: return n;
  }
  return 0;
}

Int GroupFactor::weyl_order() const {
  Int order = 1;
  switch (type) {
    case Type::SU:
      for (std::size_t i = 2; i <= n; ++i) order *= static_cast<long>(i);
      return order;
    case Type::Sp:
      for (std::size_t i = 2; i <= n; ++i) order *= static_cast<long>(i);
      for (std::size_t i = 0; i < n; ++i) order *= 2;
      return order;
    case Type::Torus: return 1;
  }
  return order;
}

std::string GroupFactor::to_string() const {
  std::ostringstream os;
  switch (type) {
    case Type::SU: os << "SU(" << n << ")"; break;
    case Type::Sp: os << "Sp(" << n << ")"; break;
    case Type::Torus: os << "T^" << n; break;
  }
  return os.str();
}

std::size_t GroupSpec::rank() const {
  std::size_t r = 0;
  for (const auto& f : factors) r += f.rank();
  return r;
}

bool GroupSpec::is_torus() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const GroupFactor& f) { return f.type == GroupFactor::Type::Torus; });
}

std::string GroupSpec::to_string() const {
  if (factors.empty()) return "T^0";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += factors[i].to_string();
  }
  return out;
}

GroupFactor su(std::size_t n) { return {GroupFactor::Type::SU, n}; }
GroupFactor sp(std::size_t n) { return {GroupFactor::Type::Sp, n}; }
GroupFactor torus(std::size_t rank) { return {GroupFactor::Type::Torus, rank}; }

namespace {

using Exponents = LaurentPoly::Exponents;

// Weight monomials of the defining representation, as exponent vectors in the
// factor's own coordinates. SU(n) uses n-1 coordinates with the n-th weight
// eliminated.
std::vector<Exponents> factor_weights(const GroupFactor& f) {
  std::vector<Exponents> w;
  const std::size_t r = f.rank();
  switch (f.type) {
    case GroupFactor::Type::SU: {
      for (std::size_t i = 0; i < r; ++i) {
        Exponents e(r, 0);
        e[i] = 1;
        w.push_back(e);
      }
      w.push_back(Exponents(r, -1));  // x_n = (x_1 ... x_{n-1})^{-1}
      break;
    }
    case GroupFactor::Type::Sp: {
      for (std::size_t i = 0; i < r; ++i) {
        Exponents e(r, 0);
        e[i] = 1;
        w.push_back(e);
        e[i] = -1;
        w.push_back(e);
      }
      break;
    }
    case GroupFactor::Type::Torus: break;
  }
  return w;
}

// Elementary symmetric functions e_1..e_k of the given monomials.
std::vector<LaurentPoly> elementary_symmetric(std::size_t rank, const std::vector<Exponents>& weights,
                                              std::size_t count) {
  std::vector<LaurentPoly> e(count + 1, LaurentPoly::zero(rank));
  e[0] = LaurentPoly::constant(rank, 1);
  for (const auto& w : weights) {
    LaurentPoly m = LaurentPoly::monomial(rank, w);
    for (std::size_t k = count; k >= 1; --k) e[k] = e[k] + e[k - 1] * m;
  }
  return {e.begin() + 1, e.end()};
}

std::vector<Exponents> factor_simple_roots(const GroupFactor& f) {
  std::vector<Exponents> roots;
  const std::size_t r = f.rank();
  switch (f.type) {
    case GroupFactor::Type::SU: {
      auto w = factor_weights(f);
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        Exponents a(r);
        for (std::size_t j = 0; j < r; ++j) a[j] = w[i][j] - w[i + 1][j];
        roots.push_back(a);
      }
      break;
    }
    case GroupFactor::Type::Sp: {
      for (std::size_t i = 0; i + 1 < r; ++i) {
        Exponents a(r, 0);
        a[i] = 1;
        a[i + 1] = -1;
        roots.push_back(a);
      }
      Exponents last(r, 0);
      last[r - 1] = 2;
      roots.push_back(last);
      break;
    }
    case GroupFactor::Type::Torus: break;
  }
  return roots;
}

void validate(const GroupSpec& spec) {
  for (const auto& f : spec.factors) {
    if (f.type == GroupFactor::Type::SU && f.n < 2)
      throw std::invalid_argument("build_root_datum: SU(n) requires n >= 2");
    if (f.type == GroupFactor::Type::Sp && f.n < 1)
      throw std::invalid_argument("build_root_datum: Sp(n) requires n >= 1");
  }
}

// Per-factor list of Weyl matrices in the factor's own coordinates.
std::vector<IntMatrix> factor_weyl_matrices(const GroupFactor& f) {
  std::vector<IntMatrix> out;
  const std::size_t r = f.rank();
  switch (f.type) {
    case GroupFactor::Type::SU: {
      const std::size_t n = f.n;
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      auto weights = factor_weights(f);
      do {
        // sigma permutes the n weights; rebuild the matrix columnwise by
        // pushing each basis vector through the weight coordinates
        IntMatrix m(r, r);
        for (std::size_t j = 0; j < r; ++j) {
          // image of x_j: weight j goes to slot perm[j], then the eliminated
          // n-th coordinate is subtracted off
          std::vector<long> c(n, 0);
          c[perm[j]] = 1;
          for (std::size_t i = 0; i < r; ++i) m(i, j) = c[i] - c[n - 1];
        }
        out.push_back(m);
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case GroupFactor::Type::Sp: {
      const std::size_t n = f.n;
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          IntMatrix m(r, r);
          for (std::size_t j = 0; j < n; ++j) m(perm[j], j) = (mask >> j) & 1 ? -1 : 1;
          out.push_back(m);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case GroupFactor::Type::Torus: out.push_back(IntMatrix::identity(r)); break;
  }
  return out;
}

}  // namespace

RootDatum build_root_datum(const GroupSpec& spec) {
  validate(spec);
  RootDatum d;
  d.spec = spec;
  d.rank = spec.rank();
  d.weyl_order = 1;

  std::vector<std::vector<Int>> root_rows;
  std::size_t offset = 0;
  for (const auto& f : spec.factors) {
    const std::size_t fr = f.rank();
    if (f.type == GroupFactor::Type::Torus) {
      for (std::size_t i = 0; i < fr; ++i) {
        d.fundamental_chars.push_back(LaurentPoly::variable(fr, i).embed(d.rank, offset));
        d.laurent_flags.push_back(true);
      }
    } else {
      auto chars = elementary_symmetric(fr, factor_weights(f), fr);
      for (auto& chi : chars) {
        d.fundamental_chars.push_back(chi.embed(d.rank, offset));
        d.laurent_flags.push_back(false);
      }
      for (const auto& a : factor_simple_roots(f)) {
        std::vector<Int> row(d.rank, 0);
        for (std::size_t j = 0; j < fr; ++j) row[offset + j] = static_cast<long>(a[j]);
        root_rows.push_back(row);
      }
    }
    d.weyl_order *= f.weyl_order();
    offset += fr;
  }
  d.root_lattice = Sublattice::from_generators(d.rank, IntMatrix::from_rows(d.rank, root_rows));
  return d;
}

void for_each_weyl_element(const RootDatum& datum,
                           const std::function<void(const WeylElement&)>& fn, std::uint64_t cap) {
  if (datum.weyl_order > static_cast<long>(cap))
    throw std::invalid_argument("for_each_weyl_element: Weyl order exceeds enumeration cap");

  std::vector<std::vector<IntMatrix>> per_factor;
  per_factor.reserve(datum.spec.factors.size());
  for (const auto& f : datum.spec.factors) per_factor.push_back(factor_weyl_matrices(f));

  std::vector<std::size_t> index(per_factor.size(), 0);
  const std::size_t r = datum.rank;
  for (;;) {
    IntMatrix m(r, r);
    std::size_t offset = 0;
    for (std::size_t fi = 0; fi < per_factor.size(); ++fi) {
      const IntMatrix& block = per_factor[fi][index[fi]];
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) m(offset + i, offset + j) = block(i, j);
      offset += block.rows();
    }
    fn(WeylElement{std::move(m)});

    // advance the mixed-radix counter
    std::size_t fi = 0;
    while (fi < index.size()) {
      if (++index[fi] < per_factor[fi].size()) break;
      index[fi] = 0;
      ++fi;
    }
    if (fi == index.size()) break;
  }
}

std::vector<WeylElement> weyl_elements(const RootDatum& datum, std::uint64_t cap) {
  std::vector<WeylElement> out;
  for_each_weyl_element(datum, [&](const WeylElement& w) { out.push_back(w); }, cap);
  return out;
}

Sublattice act_on_lattice(const WeylElement& w, const Sublattice& k) {
  if (w.matrix.rows() != k.ambient_rank())
    throw std::invalid_argument("act_on_lattice: rank mismatch");
  // rows transform by M^T so that column vectors transform by M
  return Sublattice::from_generators(k.ambient_rank(), k.basis() * w.matrix.transposed());
}

TorusSubgroup act_on_subgroup(const WeylElement& w, const TorusSubgroup& s) {
  return {s.ambient_rank, act_on_lattice(w, s.k)};
}

LaurentPoly act_on_character(const WeylElement& w, const LaurentPoly& chi) {
  return chi.apply_matrix(w.matrix);
}

std::vector<LaurentPoly> fundamental_restrictions(const RootDatum& datum, const TorusSubgroup& s) {
  if (s.ambient_rank != datum.rank)
    throw std::invalid_argument("fundamental_restrictions: rank mismatch");
  CharacterRestriction res(s);
  std::vector<LaurentPoly> out;
  out.reserve(datum.fundamental_chars.size());
  for (const auto& chi : datum.fundamental_chars) out.push_back(res(chi));
  return out;
}

}  // namespace biqtor
