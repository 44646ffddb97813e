#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cfconv/sequence.hpp"

namespace cfconv {

// Precondition violation: fewer than 2*max_order+1 terms supplied. Distinct
// from the NotFound outcome, which is an empty optional.
class insufficient_data : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GuessResult {
  CFiniteSequence sequence;
  int order_found;         // == sequence.recurrence().order()
  std::size_t terms_used;  // all supplied terms are checked against the fit
  bool certified;          // terms_used >= 2*max_order + 1
};

// Fits the minimal-order recurrence (order <= max_order) satisfied by ALL
// supplied terms, holding from index `order` onward. Data with a transient
// head (no true-order recurrence) yields NotFound. All-zero data yields the
// canonical zero sequence. Requires at least 2*max_order+1 terms.
std::optional<GuessResult> guess_recurrence(const std::vector<Rat>& data, int max_order);

// to_gf of guess_recurrence; the returned function re-expands to every
// supplied term.
std::optional<RationalFunction> guess_gf(const std::vector<Rat>& data, int max_den_degree);

// Minimal-order form of s, obtained by refitting a 2d+1-term prefix at bound
// d. Always succeeds on well-formed input.
CFiniteSequence minimize(const CFiniteSequence& s);

}  // namespace cfconv
