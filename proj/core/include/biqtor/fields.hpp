#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "biqtor/laurent.hpp"

namespace biqtor {

/// Exact rational coefficients. The authoritative field for every verdict.
struct RationalField {
  using Element = Rational;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return a == 0; }
  Element neg(const Element& a) const { return -a; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element div(const Element& a, const Element& b) const {
    if (b == 0) throw std::domain_error("RationalField: division by zero");
    return a / b;
  }
  Element from_rational(const Rational& q) const { return q; }
  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
};

/// Z/p for a runtime prime p < 2^31. Diagnostic mode: mod-p homology relates
/// to, but does not determine, the integral answer.
struct PrimeField {
  std::uint32_t p;

  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t prime) : p(prime) {
    if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("PrimeField: p out of range");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("PrimeField: p is not prime");
  }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return a == 0; }
  Element neg(const Element& a) const { return a == 0 ? 0 : p - a; }
  Element add(const Element& a, const Element& b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= p ? static_cast<Element>(s - p) : static_cast<Element>(s);
  }
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  Element mul(const Element& a, const Element& b) const {
    return static_cast<Element>(std::uint64_t(a) * b % p);
  }
  Element inv(const Element& a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // Fermat
    Element result = 1, base = a;
    std::uint32_t e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  Element from_rational(const Rational& q) const {
    Int num = q.get_num(), den = q.get_den();
    Element d = static_cast<Element>(mpz_fdiv_ui(den.get_mpz_t(), p));
    if (d == 0) throw std::domain_error("PrimeField: denominator divisible by p");
    Element n = static_cast<Element>(mpz_fdiv_ui(num.get_mpz_t(), p));
    return div(n, d);
  }
  std::string to_string(const Element& a) const { return std::to_string(a); }
  std::string name() const { return "F" + std::to_string(p); }
};

}  // namespace biqtor
