#pragma once

// Reference recurrence fitter for cross-validating the Berlekamp-Massey path:
// increasing-order search with an exact nullspace computation on the Hankel
// system, eliminated fraction-free (Bareiss). Slow and simple on purpose.

#include <cstddef>
#include <optional>
#include <vector>

#include "cfconv/sequence.hpp"

namespace cfconv::testsupport {

namespace detail {

// Bareiss fraction-free elimination on an augmented integer matrix
// (columns 0..r-1 unknowns, column r the right-hand side). Returns false on
// inconsistency; otherwise back-substitutes with free variables set to zero.
inline bool solve_bareiss(std::vector<std::vector<Int>> m, std::size_t unknowns,
                          std::vector<Rat>& solution) {
  const std::size_t rows = m.size();
  std::vector<std::ptrdiff_t> pivot_row_of_col(unknowns, -1);
  Int prev_pivot(1);
  std::size_t rank = 0;

  for (std::size_t col = 0; col < unknowns && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;  // free column
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j <= unknowns; ++j) {
        Int t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][col] = 0;
    }
    prev_pivot = m[rank][col];
    pivot_row_of_col[col] = static_cast<std::ptrdiff_t>(rank);
    ++rank;
  }

  for (std::size_t i = rank; i < rows; ++i)
    if (sgn(m[i][unknowns]) != 0) return false;

  solution.assign(unknowns, Rat(0));
  for (std::size_t col = unknowns; col-- > 0;) {
    const std::ptrdiff_t row = pivot_row_of_col[col];
    if (row < 0) continue;  // free variable stays zero
    Rat acc(m[static_cast<std::size_t>(row)][unknowns]);
    for (std::size_t j = col + 1; j < unknowns; ++j) {
      if (sgn(m[static_cast<std::size_t>(row)][j]) == 0) continue;
      acc -= Rat(m[static_cast<std::size_t>(row)][j]) * solution[j];
    }
    acc /= Rat(m[static_cast<std::size_t>(row)][col]);
    solution[col] = std::move(acc);
  }
  return true;
}

}  // namespace detail

inline std::optional<CFiniteSequence> hankel_guess(const std::vector<Rat>& data, int max_order) {
  bool all_zero = true;
  for (const Rat& t : data)
    if (sgn(t) != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) return CFiniteSequence::zero();

  // Clear denominators once; recurrences are scale-invariant.
  Int scale(1);
  for (const Rat& t : data)
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), t.get_den_mpz_t());
  std::vector<Int> w;
  w.reserve(data.size());
  for (const Rat& t : data) {
    Int factor;
    mpz_divexact(factor.get_mpz_t(), scale.get_mpz_t(), t.get_den_mpz_t());
    w.push_back(Int(t.get_num()) * factor);
  }

  for (int r = 1; r <= max_order; ++r) {
    const std::size_t order = static_cast<std::size_t>(r);
    if (w.size() < order + 1) break;
    std::vector<std::vector<Int>> m;
    for (std::size_t n = order; n < w.size(); ++n) {
      std::vector<Int> row(order + 1);
      for (std::size_t i = 1; i <= order; ++i) row[i - 1] = w[n - i];
      row[order] = w[n];
      m.push_back(std::move(row));
    }
    std::vector<Rat> c;
    if (!detail::solve_bareiss(std::move(m), order, c)) continue;
    if (sgn(c.back()) == 0) continue;  // no true-order recurrence at r

    // The solver guarantees consistency, but re-check the window anyway.
    bool ok = true;
    std::vector<Rat> rational_w(data.begin(), data.end());
    for (std::size_t n = order; n < rational_w.size() && ok; ++n) {
      Rat acc(0);
      for (std::size_t i = 1; i <= order; ++i) acc += c[i - 1] * rational_w[n - i];
      ok = acc == rational_w[n];
    }
    if (!ok) continue;
    return CFiniteSequence(Recurrence(std::move(c)),
                           std::vector<Rat>(data.begin(), data.begin() + r));
  }
  return std::nullopt;
}

}  // namespace cfconv::testsupport
