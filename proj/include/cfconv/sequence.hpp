#pragma once

#include <cstddef>
#include <vector>

#include "cfconv/rational_function.hpp"

namespace cfconv {

// a(n) = c_1 a(n-1) + ... + c_d a(n-d) for n >= d, with c_d != 0 (true order).
class Recurrence {
 public:
  explicit Recurrence(std::vector<Rat> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool operator==(const Recurrence&) const = default;

 private:
  std::vector<Rat> coeffs_;
};

// A C-finite sequence: recurrence plus exactly `order` initial terms
// a(0)..a(d-1). The declared order need not be minimal; minimality is the
// guess module's business. The all-zero sequence is representable at any
// order with zero initials; zero() is its canonical order-1 form.
class CFiniteSequence {
 public:
  CFiniteSequence(Recurrence recurrence, std::vector<Rat> initial_terms);

  static CFiniteSequence zero();

  int order() const { return recurrence_.order(); }
  const Recurrence& recurrence() const { return recurrence_; }
  const std::vector<Rat>& initial_terms() const { return initial_terms_; }
  bool is_zero() const;

  bool operator==(const CFiniteSequence&) const = default;

 private:
  Recurrence recurrence_;
  std::vector<Rat> initial_terms_;
};

// a(0)..a(n_terms-1) by direct recurrence unrolling in exact arithmetic.
std::vector<Rat> seq_terms(const CFiniteSequence& s, std::size_t n_terms);

// N(x)/D(x) with D(x) = 1 - c_1 x - ... - c_d x^d; series_expand of the
// result reproduces seq_terms exactly.
RationalFunction to_gf(const CFiniteSequence& s);

// Inverse reading: recurrence coefficients off the denominator, initial terms
// from the expansion. Requires a proper f (deg num < deg den, or num == 0);
// otherwise throws std::domain_error.
CFiniteSequence from_gf(const RationalFunction& f);

}  // namespace cfconv
