#include "cfconv/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace cfconv {

RationalFunction RationalFunction::one() {
  return RationalFunction(Polynomial::one(), Polynomial::one());
}

RationalFunction normalize(Polynomial num, Polynomial den) {
  if (sgn(den.constant_term()) == 0)
    throw std::domain_error("generating function has no power-series expansion at 0");
  if (num.is_zero()) return RationalFunction(Polynomial(), Polynomial::one());

  Polynomial g = poly_gcd(num, den);
  if (*g.degree() > 0) {
    num = poly_divmod(num, g).first;
    den = poly_divmod(den, g).first;
  }
  Rat c0 = den.constant_term();
  if (c0 != 1) {
    Rat inv = Rat(1) / c0;
    num = inv * num;
    den = inv * den;
  }
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
  return normalize(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
  return normalize(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
  return normalize(f.num_ * g.num_, f.den_ * g.den_);
}

RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero rational function");
  Polynomial num = f.num_ * g.den_;
  Polynomial den = f.den_ * g.num_;
  if (!num.is_zero()) {
    Polynomial common = poly_gcd(num, den);
    if (*common.degree() > 0) {
      num = poly_divmod(num, common).first;
      den = poly_divmod(den, common).first;
    }
  }
  return normalize(std::move(num), std::move(den));
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_);
}

std::vector<Rat> series_expand(const RationalFunction& f, std::size_t n_terms) {
  const std::vector<Rat>& num = f.numerator().coeffs();
  const std::vector<Rat>& den = f.denominator().coeffs();
  const std::size_t den_deg = den.size() - 1;  // den(0) == 1, so den is nonempty

  std::vector<Rat> terms;
  terms.reserve(n_terms);
  for (std::size_t j = 0; j < n_terms; ++j) {
    Rat value = j < num.size() ? num[j] : Rat(0);
    const std::size_t reach = std::min(j, den_deg);
    for (std::size_t i = 1; i <= reach; ++i) {
      if (sgn(den[i]) == 0) continue;
      value -= den[i] * terms[j - i];
    }
    terms.push_back(std::move(value));
  }
  return terms;
}

bool is_proper(const RationalFunction& f) {
  if (f.is_zero()) return true;
  return *f.numerator().degree() < *f.denominator().degree();
}

RationalFunction pow(const RationalFunction& base, unsigned long exponent) {
  RationalFunction acc = RationalFunction::one();
  RationalFunction sq = base;
  while (exponent > 0) {
    if (exponent & 1UL) acc = acc * sq;
    exponent >>= 1UL;
    if (exponent > 0) sq = sq * sq;
  }
  return acc;
}

}  // namespace cfconv
