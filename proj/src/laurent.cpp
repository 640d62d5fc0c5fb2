#include "khoskein/laurent.hpp"

#include <sstream>

#include "khoskein/errors.hpp"

namespace khoskein {

void LaurentPoly::add_term(Monomial m, const Rat& c) {
  if (is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      r.add_term(Monomial{m1.t + m2.t, m1.q + m2.q, m1.d + m2.d}, c1 * c2);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
  LaurentPoly r;
  if (is_zero(c)) return r;
  for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
  return r;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_monomial()) throw NotDivisible("inverse of a non-monomial Laurent polynomial");
  const auto& [m, c] = *terms_.begin();
  return LaurentPoly(Rat(1) / c, Monomial{-m.t, -m.q, -m.d});
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentPoly r = one();
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

LaurentPoly LaurentPoly::substitute_t_minus_one() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    Rat cc = (m.t % 2 == 0) ? c : -c;
    r.add_term(Monomial{0, m.q, m.d}, cc);
  }
  return r;
}

LaurentPoly LaurentPoly::substitute_t_with_q_pow(int k) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.add_term(Monomial{0, m.q + k * m.t, m.d}, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_d_value(long value) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    Rat scale(1);
    if (m.d >= 0) {
      for (int i = 0; i < m.d; ++i) scale *= value;
    } else {
      if (value == 0) throw NotDivisible("d^(negative) at d=0");
      for (int i = 0; i < -m.d; ++i) scale /= value;
    }
    r.add_term(Monomial{m.t, m.q, 0}, c * scale);
  }
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero_poly()) throw NotDivisible("division by zero polynomial");
  if (divisor.is_monomial()) return *this * divisor.inverse();
  if (is_zero_poly()) return LaurentPoly();

  // Reduce from the low end: repeatedly cancel the smallest remaining
  // monomial against the divisor's smallest one. Terminates because the
  // remainder's low end strictly increases; a remainder surviving past the
  // dividend's top together with the bound below means non-divisibility.
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const auto& [dm, dc] = *divisor.terms().begin();
  const Monomial top = rem.terms().rbegin()->first;
  const Monomial low = rem.terms().begin()->first;
  const Monomial dtop = divisor.terms().rbegin()->first;
  auto span = [](int lo, int hi, int extra) {
    return static_cast<std::size_t>(hi - lo + extra + 2);
  };
  const std::size_t max_steps =
      4 * span(low.t, top.t, dtop.t - dm.t) * span(low.q, top.q, dtop.q - dm.q) *
          span(low.d, top.d, dtop.d - dm.d) +
      1000;
  std::size_t steps = 0;
  while (!rem.is_zero_poly()) {
    const auto& [rm, rc] = *rem.terms().begin();
    if (top < rm || ++steps > max_steps)
      throw NotDivisible("polynomial division leaves a remainder");
    Monomial f{rm.t - dm.t, rm.q - dm.q, rm.d - dm.d};
    Rat fc = rc / dc;
    quot.add_term(f, fc);
    rem -= divisor * LaurentPoly(fc, f);
  }
  return quot;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    std::string vars;
    auto append_var = [&vars](const char* name, int e) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (e != 1) vars += "^" + std::to_string(e);
    };
    append_var("t", m.t);
    append_var("q", m.q);
    append_var("d", m.d);
    if (vars.empty()) {
      out << rat_to_string(mag);
    } else if (mag == 1) {
      out << vars;
    } else {
      out << rat_to_string(mag) << "*" << vars;
    }
  }
  return out.str();
}

LaurentPoly q_plus_qinv() {
  LaurentPoly p;
  p.add_term(Monomial{0, 1, 0}, Rat(1));
  p.add_term(Monomial{0, -1, 0}, Rat(1));
  return p;
}

}  // namespace khoskein
