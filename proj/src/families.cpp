#include "cfconv/families.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace cfconv {

CFiniteSequence kbonacci(int k) {
  if (k < 1) throw std::invalid_argument("k-bonacci index must be >= 1");
  if (k == 1) return CFiniteSequence(Recurrence({Rat(1)}), {Rat(1)});

  std::vector<Rat> coeffs(static_cast<std::size_t>(k), Rat(1));
  std::vector<Rat> initial;
  initial.reserve(static_cast<std::size_t>(k));
  initial.emplace_back(0);
  initial.emplace_back(1);
  Rat running(1);  // sum of all terms so far; t(n) = that sum while n < k
  for (int n = 2; n < k; ++n) {
    initial.push_back(running);
    running += running;
  }
  return CFiniteSequence(Recurrence(std::move(coeffs)), std::move(initial));
}

namespace {

using Factory = std::function<CFiniteSequence()>;

const std::map<std::string, Factory>& registry() {
  static const std::map<std::string, Factory> table = {
      {"fibonacci", [] { return CFiniteSequence(Recurrence({Rat(1), Rat(1)}), {Rat(0), Rat(1)}); }},
      {"lucas", [] { return CFiniteSequence(Recurrence({Rat(1), Rat(1)}), {Rat(2), Rat(1)}); }},
      {"tribonacci", [] { return kbonacci(3); }},
      {"pell", [] { return CFiniteSequence(Recurrence({Rat(2), Rat(1)}), {Rat(0), Rat(1)}); }},
      {"jacobsthal", [] { return CFiniteSequence(Recurrence({Rat(1), Rat(2)}), {Rat(0), Rat(1)}); }},
      {"all-ones", [] { return CFiniteSequence(Recurrence({Rat(1)}), {Rat(1)}); }},
  };
  return table;
}

}  // namespace

CFiniteSequence named_sequence(const std::string& name) {
  const auto& table = registry();
  auto it = table.find(name);
  if (it == table.end()) {
    std::string names;
    for (const auto& [key, unused] : table) {
      if (!names.empty()) names += ", ";
      names += key;
    }
    throw std::invalid_argument("unknown sequence '" + name + "'; available: " + names);
  }
  return it->second();
}

std::vector<std::string> sequence_names() {
  std::vector<std::string> names;
  for (const auto& [key, unused] : registry()) names.push_back(key);
  return names;
}

}  // namespace cfconv
