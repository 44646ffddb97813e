#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "cfconv/rational.hpp"

namespace cfconv {

// Univariate polynomial with exact rational coefficients, stored ascending by
// degree. The zero polynomial is the empty coefficient list; a stored leading
// coefficient is always nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs);
  Polynomial(std::initializer_list<Rat> coeffs);

  static Polynomial constant(Rat value);
  static Polynomial monomial(std::size_t degree, Rat coefficient = Rat(1));
  static Polynomial one() { return constant(Rat(1)); }
  static Polynomial x() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }

  // deg(0) is "none"; callers must branch on it.
  std::optional<std::size_t> degree() const;

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t i) const;  // zero beyond the stored range
  const Rat& leading_coeff() const;
  Rat constant_term() const { return coeff(0); }

  Rat eval(const Rat& point) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rat& scalar, const Polynomial& p);

  bool operator==(const Polynomial&) const = default;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

// Exact Euclidean division: {quotient, remainder} with
// deg(remainder) < deg(divisor). Throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& p, const Polynomial& q);

// Monic greatest common divisor by the Euclidean algorithm over the
// rationals. poly_gcd(p, 0) is p made monic; a both-zero input is a usage
// error (std::invalid_argument).
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

}  // namespace cfconv
