#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace biqtor {

/// Exponent vector in the affine (u, v) variables; entries are nonnegative.
struct Monomial {
  std::vector<std::int32_t> e;

  static Monomial one(std::size_t nvars) { return Monomial{std::vector<std::int32_t>(nvars, 0)}; }

  std::int64_t degree() const { return std::accumulate(e.begin(), e.end(), std::int64_t{0}); }
  bool is_one() const {
    for (auto v : e)
      if (v) return false;
    return true;
  }
  bool operator==(const Monomial&) const = default;

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& m) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < e.size(); ++i) out.e[i] += m.e[i];
    return out;
  }
  /// Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& m) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < e.size(); ++i) out.e[i] -= m.e[i];
    return out;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < a.e.size(); ++i) out.e[i] = std::max(a.e[i], b.e[i]);
    return out;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
  }
};

enum class MonomialOrder { DegRevLex, Lex };

/// Three-way comparison under the given order; positive when a > b.
inline int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
    case MonomialOrder::DegRevLex: {
      const std::int64_t da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = a.e.size(); i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

/// Descending comparator: map.begin() is the leading term.
struct TermCompare {
  MonomialOrder order = MonomialOrder::DegRevLex;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, order) > 0; }
};

/// Polynomial in the affine variables, terms held in descending order.
template <class F>
class Polynomial {
public:
  using Element = typename F::Element;
  using Terms = std::map<Monomial, Element, TermCompare>;

  Polynomial() = default;
  explicit Polynomial(MonomialOrder order) : terms_(TermCompare{order}) {}

  static Polynomial zero(MonomialOrder order) { return Polynomial(order); }
  static Polynomial term(MonomialOrder order, Monomial m, Element c, const F& field) {
    Polynomial p(order);
    p.add_term(m, c, field);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  MonomialOrder order() const { return terms_.key_comp().order; }

  const Monomial& lead_monomial() const { return terms_.begin()->first; }
  const Element& lead_coeff() const { return terms_.begin()->second; }
  std::int64_t max_degree() const {
    std::int64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  void add_term(const Monomial& m, const Element& c, const F& field) {
    if (field.is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second = field.add(it->second, c);
      if (field.is_zero(it->second)) terms_.erase(it);
    }
  }

  void add_multiple(const Polynomial& g, const Monomial& m, const Element& c, const F& field) {
    for (const auto& [gm, gc] : g.terms_) add_term(gm * m, field.mul(gc, c), field);
  }

  void scale(const Element& c, const F& field) {
    for (auto& [m, coeff] : terms_) coeff = field.mul(coeff, c);
  }

  Polynomial times(const Polynomial& g, const F& field) const {
    Polynomial out(order());
    for (const auto& [m, c] : terms_) out.add_multiple(g, m, c, field);
    return out;
  }

  bool operator==(const Polynomial& rhs) const {
    if (terms_.size() != rhs.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
      if (!(it->first == jt->first) || !(it->second == jt->second)) return false;
    return true;
  }

  std::string to_string(const F& field) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << field.to_string(c);
      for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i]) continue;
        os << "*" << (i % 2 == 0 ? "u" : "v") << i / 2 + 1;
        if (m.e[i] != 1) os << "^" << m.e[i];
      }
    }
    return os.str();
  }

private:
  Terms terms_;
};

}  // namespace biqtor
