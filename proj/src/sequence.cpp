#include "cfconv/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfconv {

Recurrence::Recurrence(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("recurrence order must be >= 1");
  if (sgn(coeffs_.back()) == 0)
    throw std::invalid_argument("trailing recurrence coefficient c_d must be nonzero");
}

CFiniteSequence::CFiniteSequence(Recurrence recurrence, std::vector<Rat> initial_terms)
    : recurrence_(std::move(recurrence)), initial_terms_(std::move(initial_terms)) {
  if (initial_terms_.size() != static_cast<std::size_t>(recurrence_.order()))
    throw std::invalid_argument("need exactly `order` initial terms");
}

CFiniteSequence CFiniteSequence::zero() {
  return CFiniteSequence(Recurrence({Rat(1)}), {Rat(0)});
}

bool CFiniteSequence::is_zero() const {
  return std::all_of(initial_terms_.begin(), initial_terms_.end(),
                     [](const Rat& t) { return sgn(t) == 0; });
}

std::vector<Rat> seq_terms(const CFiniteSequence& s, std::size_t n_terms) {
  const std::vector<Rat>& c = s.recurrence().coeffs();
  const std::size_t d = c.size();

  std::vector<Rat> terms(s.initial_terms().begin(), s.initial_terms().end());
  if (terms.size() > n_terms) terms.resize(n_terms);
  terms.reserve(n_terms);
  while (terms.size() < n_terms) {
    const std::size_t n = terms.size();
    Rat next(0);
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(c[i]) == 0) continue;
      next += c[i] * terms[n - 1 - i];
    }
    terms.push_back(std::move(next));
  }
  return terms;
}

RationalFunction to_gf(const CFiniteSequence& s) {
  const std::vector<Rat>& c = s.recurrence().coeffs();
  const std::vector<Rat>& a = s.initial_terms();
  const std::size_t d = c.size();

  std::vector<Rat> den(d + 1, Rat(0));
  den[0] = 1;
  for (std::size_t i = 0; i < d; ++i) den[i + 1] = -c[i];

  // Numerator: the initial-terms polynomial times D(x), truncated below x^d.
  std::vector<Rat> num(d, Rat(0));
  for (std::size_t n = 0; n < d; ++n) {
    Rat v = a[n];
    for (std::size_t i = 1; i <= n; ++i) v -= c[i - 1] * a[n - i];
    num[n] = std::move(v);
  }
  return normalize(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

CFiniteSequence from_gf(const RationalFunction& f) {
  if (f.is_zero()) return CFiniteSequence::zero();
  if (!is_proper(f))
    throw std::domain_error("not a sequence generating function in canonical form");

  const std::size_t d = *f.denominator().degree();  // >= 1 for a nonzero proper f
  const std::vector<Rat>& den = f.denominator().coeffs();

  std::vector<Rat> coeffs(d);
  for (std::size_t i = 1; i <= d; ++i) coeffs[i - 1] = -den[i];

  return CFiniteSequence(Recurrence(std::move(coeffs)), series_expand(f, d));
}

}  // namespace cfconv
