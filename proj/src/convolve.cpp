#include "cfconv/convolve.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "cfconv/textio.hpp"

namespace cfconv {

std::vector<Rat> binomial_conv_terms(const CFiniteSequence& a, const CFiniteSequence& b,
                                     std::size_t n_terms) {
  const std::vector<Rat> A = seq_terms(a, n_terms);
  const std::vector<Rat> B = seq_terms(b, n_terms);

  std::vector<Rat> out;
  out.reserve(n_terms);
  std::vector<Int> row;  // Pascal row for the current n, updated in place
  for (std::size_t n = 0; n < n_terms; ++n) {
    if (n == 0) {
      row.assign(1, Int(1));
    } else {
      row.push_back(Int(1));
      for (std::size_t k = n - 1; k >= 1; --k) row[k] += row[k - 1];
    }
    Rat sum(0);
    for (std::size_t k = 0; k <= n; ++k) {
      if (sgn(A[k]) == 0 || sgn(B[n - k]) == 0) continue;
      sum += row[k] * A[k] * B[n - k];
    }
    out.push_back(std::move(sum));
  }
  return out;
}

long long conv_order_bound(int d, int d_prime, ConvKind kind) {
  if (d < 1) throw std::invalid_argument("sequence order must be >= 1");
  if (kind == ConvKind::cross) {
    if (d_prime < 1) throw std::invalid_argument("sequence order must be >= 1");
    return static_cast<long long>(d) * d_prime;
  }
  return static_cast<long long>(d) * (d + 1) / 2;
}

namespace {

// Fits terms[shift..shift+2*bound+1) as a C-finite tail, reattaches the first
// `shift` terms as a literal head, and accepts only if the reassembled
// function re-expands to every generated term.
std::optional<RationalFunction> fit_with_head(const std::vector<Rat>& terms, long long bound,
                                              std::size_t shift) {
  const std::size_t window = 2 * static_cast<std::size_t>(bound) + 1;
  std::vector<Rat> tail(terms.begin() + static_cast<std::ptrdiff_t>(shift),
                        terms.begin() + static_cast<std::ptrdiff_t>(shift + window));
  std::optional<RationalFunction> fitted = guess_gf(tail, static_cast<int>(bound));
  if (!fitted) return std::nullopt;

  RationalFunction assembled = *fitted;
  if (shift > 0) {
    Polynomial head(std::vector<Rat>(terms.begin(),
                                     terms.begin() + static_cast<std::ptrdiff_t>(shift)));
    assembled = normalize(head * fitted->denominator() +
                              Polynomial::monomial(shift) * fitted->numerator(),
                          fitted->denominator());
  }
  if (series_expand(assembled, terms.size()) != terms) return std::nullopt;
  return assembled;
}

IdentityResult derive(const CFiniteSequence& a_input, const CFiniteSequence* b_input,
                      ConvKind kind, std::size_t guard) {
  // A non-minimal declared order would inflate the bound (and the term budget
  // with it) quadratically, so reduce the operands first.
  const CFiniteSequence a = minimize(a_input);
  std::string operands = to_string(to_gf(a));

  long long bound = 0;
  std::size_t max_shift = 0;
  std::optional<CFiniteSequence> b;
  if (kind == ConvKind::cross) {
    b = minimize(*b_input);
    operands += ", " + to_string(to_gf(*b));
    bound = conv_order_bound(a.order(), b->order(), ConvKind::cross);
    max_shift = static_cast<std::size_t>(a.order() + b->order() - 1);
  } else {
    bound = conv_order_bound(a.order(), a.order(), ConvKind::self);
    max_shift = static_cast<std::size_t>(a.order() - 1);
  }
  if (bound > std::numeric_limits<int>::max() / 4)
    throw std::invalid_argument("convolution order bound too large to certify");

  const std::size_t fit_window = 2 * static_cast<std::size_t>(bound) + 1;
  std::size_t total = fit_window + guard;
  std::vector<Rat> terms = binomial_conv_terms(a, b ? *b : a, total);

  std::optional<RationalFunction> fitted = fit_with_head(terms, bound, 0);

  if (!fitted && max_shift > 0) {
    // Binet roots summing to zero contribute Kronecker-delta components: the
    // convolution then carries a transient head of length at most max_shift
    // and its generating function is improper. The shifted tail is genuinely
    // C-finite at the same denominator bound, so fit that and reattach the
    // head literally.
    total = fit_window + max_shift + guard;
    terms = binomial_conv_terms(a, b ? *b : a, total);
    for (std::size_t shift = 1; shift <= max_shift && !fitted; ++shift)
      fitted = fit_with_head(terms, bound, shift);
  }

  if (!fitted)
    throw internal_consistency_error(
        "no rational generating function with denominator degree <= " + std::to_string(bound) +
            " fits the convolution of " + operands +
            "; the degree bound guarantees one exists, so this is a bug",
        std::move(terms));

  const int found = static_cast<int>(*fitted->denominator().degree());
  return IdentityResult{std::move(*fitted), static_cast<int>(bound), found,
                        total,              guard,                   std::move(operands)};
}

}  // namespace

IdentityResult self_convolution_identity(const CFiniteSequence& s, std::size_t guard) {
  return derive(s, nullptr, ConvKind::self, guard);
}

IdentityResult self_convolution_identity(const RationalFunction& R, std::size_t guard) {
  return derive(from_gf(R), nullptr, ConvKind::self, guard);
}

IdentityResult cross_convolution_identity(const CFiniteSequence& a, const CFiniteSequence& b,
                                          std::size_t guard) {
  return derive(a, &b, ConvKind::cross, guard);
}

IdentityResult cross_convolution_identity(const RationalFunction& R1, const RationalFunction& R2,
                                          std::size_t guard) {
  const CFiniteSequence a = from_gf(R1);
  const CFiniteSequence b = from_gf(R2);
  return derive(a, &b, ConvKind::cross, guard);
}

IdentityResult derive_identity(const ConvolutionSpec& spec) {
  if (spec.kind == ConvKind::cross) {
    if (!spec.b) throw std::invalid_argument("cross convolution needs a second operand");
    return cross_convolution_identity(spec.a, *spec.b, spec.guard_terms);
  }
  return self_convolution_identity(spec.a, spec.guard_terms);
}

}  // namespace cfconv
