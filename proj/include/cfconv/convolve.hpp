#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfconv/guess.hpp"
#include "cfconv/sequence.hpp"

namespace cfconv {

enum class ConvKind { self, cross };

struct ConvolutionSpec {
  ConvKind kind = ConvKind::self;
  CFiniteSequence a;
  std::optional<CFiniteSequence> b;  // ignored when kind == self
  std::size_t guard_terms = 10;
};

// A derived convolution identity plus its certification metadata.
struct IdentityResult {
  RationalFunction gf;
  int order_bound;              // the a-priori bound N
  int order_found;              // degree of the final denominator
  std::size_t terms_generated;  // 2N+1 fit window plus guard terms
  std::size_t guard_verified;
  std::string operands;         // textual echo of the input GFs
};

// The degree bound is a theorem; a fit failure or guard mismatch means an
// implementation bug, never a user error. Carries the offending terms for
// diagnosis.
class internal_consistency_error : public std::runtime_error {
 public:
  internal_consistency_error(const std::string& what, std::vector<Rat> terms)
      : std::runtime_error(what), terms_(std::move(terms)) {}

  const std::vector<Rat>& offending_terms() const { return terms_; }

 private:
  std::vector<Rat> terms_;
};

// Term n is sum_{k=0..n} binom(n,k) a(k) b(n-k), by direct summation with
// exact binomials generated one Pascal row at a time.
std::vector<Rat> binomial_conv_terms(const CFiniteSequence& a, const CFiniteSequence& b,
                                     std::size_t n_terms);

// A-priori denominator degree bound: d*d' for cross, d*(d+1)/2 for self.
long long conv_order_bound(int d, int d_prime, ConvKind kind);

IdentityResult self_convolution_identity(const CFiniteSequence& s, std::size_t guard = 10);
IdentityResult self_convolution_identity(const RationalFunction& R, std::size_t guard = 10);

IdentityResult cross_convolution_identity(const CFiniteSequence& a, const CFiniteSequence& b,
                                          std::size_t guard = 10);
IdentityResult cross_convolution_identity(const RationalFunction& R1, const RationalFunction& R2,
                                          std::size_t guard = 10);

IdentityResult derive_identity(const ConvolutionSpec& spec);

}  // namespace cfconv
