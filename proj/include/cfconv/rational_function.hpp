#pragma once

#include <cstddef>
#include <vector>

#include "cfconv/polynomial.hpp"

namespace cfconv {

// Reduced rational function with the denominator scaled so its constant term
// is exactly 1 — the canonical presentation of an ordinary generating
// function, and the form every operation here returns.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::one()) {}  // 0/1

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one();

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
  // Division cancels the common factor before renormalizing, so e.g.
  // x/(x + x^2) stays expandable; a genuine pole at 0 (1/x) still throws.
  friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g);
  RationalFunction operator-() const;

  bool operator==(const RationalFunction&) const = default;

  friend RationalFunction normalize(Polynomial num, Polynomial den);

 private:
  RationalFunction(Polynomial num, Polynomial den)
      : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

// Canonicalizes num/den: divides out the gcd, then rescales both so that
// den(0) == 1 exactly. Throws std::domain_error when den(0) == 0 (the pair
// has no power-series expansion at 0).
RationalFunction normalize(Polynomial num, Polynomial den);

// First n_terms Taylor coefficients at 0 by exact long division.
std::vector<Rat> series_expand(const RationalFunction& f, std::size_t n_terms);

// deg(num) < deg(den) or num == 0: the shape of a from-0 sequence GF.
bool is_proper(const RationalFunction& f);

RationalFunction pow(const RationalFunction& base, unsigned long exponent);

}  // namespace cfconv
