#pragma once

#include <compare>
#include <map>
#include <string>

#include "khoskein/rational.hpp"

namespace khoskein {

// Exponent triple of a Laurent monomial t^t q^q d^d. The third slot carries
// the framing parameter when it is kept symbolic; it stays 0 otherwise.
struct Monomial {
  int t = 0;
  int q = 0;
  int d = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Bivariate (optionally trivariate) Laurent polynomial over exact rationals.
// Terms are kept in a map so iteration is sorted by (t, q, d) ascending,
// which is also the emission order everywhere.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rat& c) {
    if (!is_zero(c)) terms_[Monomial{}] = c;
  }
  LaurentPoly(const Rat& c, Monomial m) {
    if (!is_zero(c)) terms_[m] = c;
  }

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(Rat(1)); }
  static LaurentPoly t_pow(int e) { return LaurentPoly(Rat(1), Monomial{e, 0, 0}); }
  static LaurentPoly q_pow(int e) { return LaurentPoly(Rat(1), Monomial{0, e, 0}); }
  static LaurentPoly d_pow(int e) { return LaurentPoly(Rat(1), Monomial{0, 0, e}); }

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rat coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(Monomial m, const Rat& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator*(const Rat& c) const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // True when the polynomial is a single term (a unit of the Laurent ring).
  bool is_monomial() const { return terms_.size() == 1; }
  // Inverse of a single-term polynomial; throws NotDivisible otherwise.
  LaurentPoly inverse() const;

  LaurentPoly pow(int e) const;

  // Substitutions used by the invariants: t := -1, t := q^k, d := value.
  LaurentPoly substitute_t_minus_one() const;
  LaurentPoly substitute_t_with_q_pow(int k) const;
  LaurentPoly substitute_d_value(long value) const;

  // Exact division; throws NotDivisible when the quotient does not exist in
  // the Laurent ring. Sufficient for unit divisors and for q + q^-1.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  std::string to_string() const;

 private:
  std::map<Monomial, Rat> terms_;
};

inline LaurentPoly operator*(const Rat& c, const LaurentPoly& p) { return p * c; }

// q + q^-1, the graded dimension of the basic two-dimensional space.
LaurentPoly q_plus_qinv();

}  // namespace khoskein
