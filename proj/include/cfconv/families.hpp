#pragma once

#include <string>
#include <vector>

#include "cfconv/sequence.hpp"

namespace cfconv {

// The family with GF x/(1 - x - x^2 - ... - x^k) for k >= 2: order-k
// recurrence with all coefficients 1 and initials 0, 1, 1, 2, 4, ... read off
// the expansion. k=2 is Fibonacci, k=3 Tribonacci. k=1 is the degenerate
// member, represented as the all-ones sequence (GF 1/(1-x)); the displayed
// x/(1-x) form has no true order-1 recurrence from n=0 and is not
// representable here. Throws std::invalid_argument for k < 1.
CFiniteSequence kbonacci(int k);

// Registry of standard sequences under their conventional initial values.
// Unknown names throw std::invalid_argument listing the available names.
CFiniteSequence named_sequence(const std::string& name);

std::vector<std::string> sequence_names();

}  // namespace cfconv
