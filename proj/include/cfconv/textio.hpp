#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cfconv/convolve.hpp"
#include "cfconv/guess.hpp"
#include "cfconv/rational_function.hpp"
#include "cfconv/sequence.hpp"

namespace cfconv {

enum class OutputFormat { text, json, latex };

// Parses "text"|"json"|"latex"; throws std::invalid_argument otherwise.
OutputFormat output_format_from_string(const std::string& name);

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t position, const std::string& detail)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + detail),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Expression parser over +, -, *, /, ^, parentheses, integer literals and x,
// evaluated exactly in the field of rational functions. Covers both the plain
// polynomial syntax (1 - 3*x - 2*x^2 + 4*x^3, rational constants p/q) and GF
// strings like x/(1-x-x^2-x^3).
RationalFunction parse_rational_function(const std::string& text);

// As above but requires the result to be a polynomial (denominator 1).
Polynomial parse_polynomial(const std::string& text);

// Ascending-degree, space-normalized rendering, e.g. "1 - 3*x - 2*x^2 + 4*x^3".
std::string to_string(const Polynomial& p);

// "num/(den)", numerator parenthesized when it has several terms; plain
// polynomial rendering when the denominator is 1.
std::string to_string(const RationalFunction& f);

std::string to_latex(const Polynomial& p);
std::string to_latex(const RationalFunction& f);  // \frac{num}{den}

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

// Coefficient-list JSON form: ascending array of strings (arbitrary-precision
// values survive JSON). The zero polynomial is the empty array.
nlohmann::ordered_json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const nlohmann::json& j);

nlohmann::ordered_json gf_to_json(const RationalFunction& f);

// {"recurrence": ["1","1"], "initial": ["0","1"]}; a {"gf": {"num": ..,
// "den": ..}} object is accepted anywhere a sequence is accepted, with num and
// den given as polynomial text or coefficient arrays.
nlohmann::ordered_json sequence_to_json(const CFiniteSequence& s);
CFiniteSequence sequence_from_json(const nlohmann::json& j);
RationalFunction gf_from_json(const nlohmann::json& j);

// {"gf": {"num": [...], "den": [...]}, "order_bound": N, "order_found": M,
// "terms_generated": T, "guard_verified": G, "elapsed_ms": E}; elapsed_ms is
// emitted only when a measurement is supplied.
nlohmann::ordered_json identity_to_json(const IdentityResult& r,
                                        std::optional<long long> elapsed_ms = std::nullopt);
std::string identity_to_text(const IdentityResult& r,
                             std::optional<long long> elapsed_ms = std::nullopt);
std::string identity_to_latex(const IdentityResult& r);

std::string sequence_to_text(const CFiniteSequence& s);
std::string sequence_to_latex(const CFiniteSequence& s);

}  // namespace cfconv
