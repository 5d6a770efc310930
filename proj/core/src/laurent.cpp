#include "biqtor/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace biqtor {

LaurentPoly LaurentPoly::constant(std::size_t rank, const Rational& c) {
  LaurentPoly p(rank);
  p.add_term(Exponents(rank, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::size_t rank, Exponents e, const Rational& c) {
  if (e.size() != rank) throw std::invalid_argument("LaurentPoly: exponent length mismatch");
  LaurentPoly p(rank);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t rank, std::size_t i) {
  if (i >= rank) throw std::invalid_argument("LaurentPoly: variable index out of range");
  Exponents e(rank, 0);
  e[i] = 1;
  return monomial(rank, e);
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  for (auto v : e)
    if (v != 0) return false;
  return true;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != rank_) throw std::invalid_argument("LaurentPoly: exponent length mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(rank_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  if (rank_ != rhs.rank_) throw std::invalid_argument("LaurentPoly: rank mismatch");
  LaurentPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  if (rank_ != rhs.rank_) throw std::invalid_argument("LaurentPoly: rank mismatch");
  LaurentPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  if (rank_ != rhs.rank_) throw std::invalid_argument("LaurentPoly: rank mismatch");
  LaurentPoly out(rank_);
  Exponents e(rank_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) {
      for (std::size_t i = 0; i < rank_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

LaurentPoly LaurentPoly::map_exponents(std::size_t new_rank,
                                       const std::function<Exponents(const Exponents&)>& f) const {
  LaurentPoly out(new_rank);
  for (const auto& [e, c] : terms_) out.add_term(f(e), c);
  return out;
}

LaurentPoly LaurentPoly::apply_matrix(const IntMatrix& m) const {
  if (m.rows() != rank_ || m.cols() != rank_)
    throw std::invalid_argument("LaurentPoly: matrix size mismatch");
  return map_exponents(rank_, [&](const Exponents& e) {
    Exponents out(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < rank_; ++j) acc += m(i, j) * Int(static_cast<long>(e[j]));
      if (!acc.fits_slong_p()) throw std::overflow_error("LaurentPoly: exponent overflow");
      out[i] = acc.get_si();
    }
    return out;
  });
}

LaurentPoly LaurentPoly::embed(std::size_t new_rank, std::size_t offset) const {
  if (offset + rank_ > new_rank) throw std::invalid_argument("LaurentPoly: embed out of range");
  return map_exponents(new_rank, [&](const Exponents& e) {
    Exponents out(new_rank, 0);
    for (std::size_t i = 0; i < rank_; ++i) out[offset + i] = e[i];
    return out;
  });
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_var = false;
    for (auto v : e) has_var = has_var || v != 0;
    if (!has_var || c != 1) {
      os << c;
      if (has_var) os << "*";
    }
    bool star = false;
    for (std::size_t i = 0; i < rank_; ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      os << "x" << i + 1;
      if (e[i] != 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

}  // namespace biqtor
