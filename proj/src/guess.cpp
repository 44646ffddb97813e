#include "cfconv/guess.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace cfconv {
namespace {

// conn <- conn - factor * x^shift * other
void subtract_shifted(std::vector<Rat>& conn, const Rat& factor, const std::vector<Rat>& other,
                      std::size_t shift) {
  conn.resize(std::max(conn.size(), shift + other.size()), Rat(0));
  for (std::size_t i = 0; i < other.size(); ++i) {
    if (sgn(other[i]) == 0) continue;
    conn[shift + i] -= factor * other[i];
  }
}

struct LinearFit {
  std::size_t length;           // minimal LFSR length over the whole window
  std::vector<Rat> connection;  // connection[0] == 1; the relation
                                // sum_i connection[i] * w(n-i) = 0 holds for
                                // n = length .. N-1
};

// Berlekamp-Massey over the rationals. Canonicalized mpq coefficients keep
// every intermediate connection polynomial in fully reduced form, whose size
// is bounded by the Hankel minors of the data; clearing denominators instead
// would inflate the whole vector by their lcm.
LinearFit minimal_lfsr(const std::vector<Rat>& w) {
  std::vector<Rat> conn{Rat(1)};
  std::vector<Rat> prev{Rat(1)};
  std::size_t length = 0;
  std::size_t gap = 1;
  Rat prev_delta(1);

  for (std::size_t n = 0; n < w.size(); ++n) {
    Rat delta(0);
    const std::size_t reach = std::min(conn.size() - 1, n);
    for (std::size_t i = 0; i <= reach; ++i) {
      if (sgn(conn[i]) == 0 || sgn(w[n - i]) == 0) continue;
      delta += conn[i] * w[n - i];
    }
    if (sgn(delta) == 0) {
      ++gap;
      continue;
    }
    Rat factor = delta / prev_delta;
    if (2 * length <= n) {
      std::vector<Rat> stashed = conn;
      subtract_shifted(conn, factor, prev, gap);
      length = n + 1 - length;
      prev = std::move(stashed);
      prev_delta = std::move(delta);
      gap = 1;
    } else {
      subtract_shifted(conn, factor, prev, gap);
      ++gap;
    }
  }
  while (!conn.empty() && sgn(conn.back()) == 0) conn.pop_back();
  return {length, std::move(conn)};
}

}  // namespace

std::optional<GuessResult> guess_recurrence(const std::vector<Rat>& data, int max_order) {
  if (max_order < 0) throw std::invalid_argument("max_order must be nonnegative");
  const std::size_t needed = 2 * static_cast<std::size_t>(max_order) + 1;
  if (data.size() < needed)
    throw insufficient_data("guessing at order bound " + std::to_string(max_order) +
                            " needs at least " + std::to_string(needed) + " terms, got " +
                            std::to_string(data.size()));

  const bool all_zero =
      std::all_of(data.begin(), data.end(), [](const Rat& t) { return sgn(t) == 0; });
  if (all_zero)
    return GuessResult{CFiniteSequence::zero(), 1, data.size(), true};

  LinearFit fit = minimal_lfsr(data);
  if (fit.length == 0 || fit.length > static_cast<std::size_t>(max_order)) return std::nullopt;
  // deg(connection) < length means even the minimal fit has c_L = 0: the data
  // carries a transient head and satisfies no true-order recurrence.
  if (fit.connection.size() != fit.length + 1) return std::nullopt;

  for (std::size_t n = fit.length; n < data.size(); ++n) {
    Rat acc(0);
    for (std::size_t i = 0; i < fit.connection.size(); ++i) {
      if (sgn(fit.connection[i]) == 0) continue;
      acc += fit.connection[i] * data[n - i];
    }
    if (sgn(acc) != 0)
      throw std::logic_error("minimal recurrence failed verification across the data window");
  }

  std::vector<Rat> coeffs;
  coeffs.reserve(fit.length);
  for (std::size_t i = 1; i <= fit.length; ++i) coeffs.push_back(-fit.connection[i]);
  std::vector<Rat> initial(data.begin(), data.begin() + static_cast<std::ptrdiff_t>(fit.length));
  return GuessResult{CFiniteSequence(Recurrence(std::move(coeffs)), std::move(initial)),
                     static_cast<int>(fit.length), data.size(), data.size() >= needed};
}

std::optional<RationalFunction> guess_gf(const std::vector<Rat>& data, int max_den_degree) {
  auto fit = guess_recurrence(data, max_den_degree);
  if (!fit) return std::nullopt;
  return to_gf(fit->sequence);
}

CFiniteSequence minimize(const CFiniteSequence& s) {
  auto data = seq_terms(s, 2 * static_cast<std::size_t>(s.order()) + 1);
  auto fit = guess_recurrence(data, s.order());
  if (!fit) throw std::logic_error("C-finite input failed minimal-order reduction");
  return fit->sequence;
}

}  // namespace cfconv
