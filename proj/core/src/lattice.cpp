#include "biqtor/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace biqtor {

Int AbelianInvariants::order() const {
  if (!is_finite()) throw std::logic_error("AbelianInvariants: order of an infinite group");
  Int n = 1;
  for (const Int& d : torsion) n *= d;
  return n;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

Sublattice Sublattice::zero(std::size_t ambient_rank) {
  Sublattice k;
  k.ambient_rank_ = ambient_rank;
  k.basis_ = IntMatrix(0, ambient_rank);
  return k;
}

Sublattice Sublattice::full(std::size_t ambient_rank) {
  Sublattice k;
  k.ambient_rank_ = ambient_rank;
  k.basis_ = IntMatrix::identity(ambient_rank);
  return k;
}

Sublattice Sublattice::from_generators(std::size_t ambient_rank, const IntMatrix& gens) {
  if (gens.cols() != ambient_rank && gens.rows() != 0)
    throw std::invalid_argument("Sublattice: generator width differs from ambient rank");
  Sublattice k;
  k.ambient_rank_ = ambient_rank;
  k.basis_ = gens.rows() == 0 ? IntMatrix(0, ambient_rank) : hermite_normal_form(gens);
  return k;
}

bool Sublattice::contains(const std::vector<Int>& v) const {
  if (v.size() != ambient_rank_) throw std::invalid_argument("Sublattice: vector length mismatch");
  std::vector<Int> w = v;
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t c = 0;
    while (c < ambient_rank_ && basis_(i, c) == 0) ++c;
    // columns left of this pivot can no longer be cleared
    for (; col < c; ++col)
      if (w[col] != 0) return false;
    if (w[c] % basis_(i, c) != 0) return false;
    Int q = w[c] / basis_(i, c);
    if (q != 0)
      for (std::size_t j = c; j < ambient_rank_; ++j) w[j] -= q * basis_(i, j);
    ++col;
  }
  for (; col < ambient_rank_; ++col)
    if (w[col] != 0) return false;
  return true;
}

bool Sublattice::contains(const Sublattice& other) const {
  if (other.ambient_rank_ != ambient_rank_)
    throw std::invalid_argument("Sublattice: ambient rank mismatch");
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::string Sublattice::to_string() const {
  std::ostringstream os;
  os << "span" << basis_.to_string() << " in Z^" << ambient_rank_;
  return os.str();
}

namespace {

IntMatrix stack(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

void check_ranks(const Sublattice& k1, const Sublattice& k2) {
  if (k1.ambient_rank() != k2.ambient_rank())
    throw std::invalid_argument("lattice operation: ambient rank mismatch");
}

}  // namespace

Sublattice lattice_sum(const Sublattice& k1, const Sublattice& k2) {
  check_ranks(k1, k2);
  return Sublattice::from_generators(k1.ambient_rank(), stack(k1.basis(), k2.basis()));
}

Sublattice lattice_intersect(const Sublattice& k1, const Sublattice& k2) {
  check_ranks(k1, k2);
  const std::size_t a = k1.rank(), r = k1.ambient_rank();
  if (k1.is_zero() || k2.is_zero()) return Sublattice::zero(r);
  // kernel rows (u | v) of [B1; B2] satisfy u*B1 = -v*B2, an element of both spans
  IntMatrix ker = left_kernel(stack(k1.basis(), k2.basis()));
  IntMatrix gens(ker.rows(), r);
  for (std::size_t i = 0; i < ker.rows(); ++i)
    for (std::size_t k = 0; k < a; ++k) {
      if (ker(i, k) == 0) continue;
      for (std::size_t j = 0; j < r; ++j) gens(i, j) += ker(i, k) * k1.basis()(k, j);
    }
  return Sublattice::from_generators(r, gens);
}

AbelianInvariants quotient_invariants(std::size_t ambient_rank, const Sublattice& k) {
  if (k.ambient_rank() != ambient_rank)
    throw std::invalid_argument("quotient_invariants: ambient rank mismatch");
  AbelianInvariants g;
  g.free_rank = ambient_rank - k.rank();
  for (const Int& d : invariant_factors(k.basis()))
    if (d > 1) g.torsion.push_back(d);
  return g;
}

bool is_direct_summand(const Sublattice& k) {
  for (const Int& d : invariant_factors(k.basis()))
    if (d != 1) return false;
  return true;
}

Sublattice saturate(const Sublattice& k) {
  // annihilator of the annihilator: right kernel, then left kernel
  IntMatrix ann = left_kernel(k.basis().transposed());  // rows annihilate k
  IntMatrix sat = left_kernel(ann.transposed());
  return Sublattice::from_generators(k.ambient_rank(), sat);
}

}  // namespace biqtor
