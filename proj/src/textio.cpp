#include "cfconv/textio.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cfconv {

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "latex") return OutputFormat::latex;
  throw std::invalid_argument("unknown output format '" + name + "' (text|json|latex)");
}

namespace {

constexpr unsigned long kMaxExponent = 100000;

struct Token {
  enum class Kind { number, x, plus, minus, star, slash, caret, lparen, rparen, end };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& input) : in_(input) {}

  Token next() {
    while (i_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[i_]))) ++i_;
    const std::size_t at = i_;
    if (i_ >= in_.size()) return {Token::Kind::end, "", at};
    const char c = in_[i_];
    switch (c) {
      case '+': ++i_; return {Token::Kind::plus, "+", at};
      case '-': ++i_; return {Token::Kind::minus, "-", at};
      case '*': ++i_; return {Token::Kind::star, "*", at};
      case '/': ++i_; return {Token::Kind::slash, "/", at};
      case '^': ++i_; return {Token::Kind::caret, "^", at};
      case '(': ++i_; return {Token::Kind::lparen, "(", at};
      case ')': ++i_; return {Token::Kind::rparen, ")", at};
      default: break;
    }
    if (c == 'x' || c == 'X') {
      ++i_;
      return {Token::Kind::x, "x", at};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[i_]))) ++i_;
      return {Token::Kind::number, in_.substr(start, i_ - start), at};
    }
    throw parse_error(at, std::string("unexpected character '") + c + "'");
  }

 private:
  const std::string& in_;
  std::size_t i_ = 0;
};

// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := ('+'|'-')* atom ('^' number)?
// atom   := number | 'x' | '(' expr ')'
class Parser {
 public:
  explicit Parser(const std::string& input) : lexer_(input) { advance(); }

  RationalFunction parse() {
    RationalFunction value = expression();
    if (current_.kind != Token::Kind::end)
      throw parse_error(current_.pos, "expected operator or end of input");
    return value;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  RationalFunction expression() {
    RationalFunction value = term();
    while (current_.kind == Token::Kind::plus || current_.kind == Token::Kind::minus) {
      const bool negate = current_.kind == Token::Kind::minus;
      advance();
      RationalFunction rhs = term();
      value = negate ? value - rhs : value + rhs;
    }
    return value;
  }

  RationalFunction term() {
    RationalFunction value = factor();
    while (current_.kind == Token::Kind::star || current_.kind == Token::Kind::slash) {
      const bool divide = current_.kind == Token::Kind::slash;
      const std::size_t at = current_.pos;
      advance();
      RationalFunction rhs = factor();
      if (divide && rhs.is_zero()) throw parse_error(at, "division by zero");
      value = divide ? value / rhs : value * rhs;
    }
    return value;
  }

  RationalFunction factor() {
    bool negate = false;
    while (current_.kind == Token::Kind::plus || current_.kind == Token::Kind::minus) {
      if (current_.kind == Token::Kind::minus) negate = !negate;
      advance();
    }
    RationalFunction value = atom();
    if (current_.kind == Token::Kind::caret) {
      advance();
      if (current_.kind != Token::Kind::number)
        throw parse_error(current_.pos, "expected a nonnegative integer exponent");
      Int e(current_.text);
      if (!e.fits_ulong_p() || e.get_ui() > kMaxExponent)
        throw parse_error(current_.pos, "exponent too large");
      advance();
      value = pow(value, e.get_ui());
    }
    return negate ? -value : value;
  }

  RationalFunction atom() {
    switch (current_.kind) {
      case Token::Kind::number: {
        Polynomial c = Polynomial::constant(Rat(Int(current_.text)));
        advance();
        return normalize(std::move(c), Polynomial::one());
      }
      case Token::Kind::x: {
        advance();
        return normalize(Polynomial::x(), Polynomial::one());
      }
      case Token::Kind::lparen: {
        advance();
        RationalFunction inner = expression();
        if (current_.kind != Token::Kind::rparen)
          throw parse_error(current_.pos, "expected ')'");
        advance();
        return inner;
      }
      default:
        throw parse_error(current_.pos, "expected a number, 'x', or '('");
    }
  }

  Lexer lexer_;
  Token current_{Token::Kind::end, "", 0};
};

std::string term_body(const Rat& magnitude, std::size_t degree, bool latex) {
  std::ostringstream os;
  if (degree == 0) {
    if (latex && magnitude.get_den() != 1)
      os << "\\frac{" << magnitude.get_num().get_str() << "}{" << magnitude.get_den().get_str()
         << "}";
    else
      os << rat_to_string(magnitude);
    return os.str();
  }
  if (magnitude != 1) {
    if (latex && magnitude.get_den() != 1)
      os << "\\frac{" << magnitude.get_num().get_str() << "}{" << magnitude.get_den().get_str()
         << "} ";
    else
      os << rat_to_string(magnitude) << (latex ? " " : "*");
  }
  os << "x";
  if (degree > 1) {
    if (latex)
      os << "^{" << degree << "}";
    else
      os << "^" << degree;
  }
  return os.str();
}

std::string render_poly(const Polynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const std::vector<Rat>& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    const bool negative = sgn(c[i]) < 0;
    Rat magnitude = abs(c[i]);
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    os << term_body(magnitude, i, latex);
  }
  return os.str();
}

std::size_t nonzero_term_count(const Polynomial& p) {
  std::size_t n = 0;
  for (const Rat& c : p.coeffs())
    if (sgn(c) != 0) ++n;
  return n;
}

std::vector<std::string> coeff_strings(const std::vector<Rat>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Rat& c : v) out.push_back(rat_to_string(c));
  return out;
}

std::vector<Rat> coeffs_from_json_array(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of coefficient strings");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (item.is_string())
      out.push_back(rat_from_string(item.get<std::string>()));
    else if (item.is_number_integer())
      out.push_back(Rat(Int(std::to_string(item.get<long long>()))));
    else
      throw std::invalid_argument("coefficients must be strings (or small integers)");
  }
  return out;
}

Polynomial poly_from_json_value(const nlohmann::json& j) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>());
  return Polynomial(coeffs_from_json_array(j));
}

}  // namespace

RationalFunction parse_rational_function(const std::string& text) {
  return Parser(text).parse();
}

Polynomial parse_polynomial(const std::string& text) {
  RationalFunction f = Parser(text).parse();
  if (!(f.denominator() == Polynomial::one()))
    throw parse_error(0, "expected a polynomial, got a proper rational expression");
  return f.numerator();
}

std::string to_string(const Polynomial& p) { return render_poly(p, false); }

std::string to_string(const RationalFunction& f) {
  if (f.denominator() == Polynomial::one()) return render_poly(f.numerator(), false);
  std::string num = render_poly(f.numerator(), false);
  if (nonzero_term_count(f.numerator()) > 1) num = "(" + num + ")";
  return num + "/(" + render_poly(f.denominator(), false) + ")";
}

std::string to_latex(const Polynomial& p) { return render_poly(p, true); }

std::string to_latex(const RationalFunction& f) {
  if (f.denominator() == Polynomial::one()) return render_poly(f.numerator(), true);
  return "\\frac{" + render_poly(f.numerator(), true) + "}{" + render_poly(f.denominator(), true) +
         "}";
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << to_string(f);
}

nlohmann::ordered_json poly_to_json(const Polynomial& p) {
  return nlohmann::ordered_json(coeff_strings(p.coeffs()));
}

Polynomial poly_from_json(const nlohmann::json& j) { return Polynomial(coeffs_from_json_array(j)); }

nlohmann::ordered_json gf_to_json(const RationalFunction& f) {
  return nlohmann::ordered_json{{"num", poly_to_json(f.numerator())},
                                {"den", poly_to_json(f.denominator())}};
}

RationalFunction gf_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("generating function JSON needs \"num\" and \"den\"");
  return normalize(poly_from_json_value(j.at("num")), poly_from_json_value(j.at("den")));
}

nlohmann::ordered_json sequence_to_json(const CFiniteSequence& s) {
  return nlohmann::ordered_json{{"recurrence", coeff_strings(s.recurrence().coeffs())},
                                {"initial", coeff_strings(s.initial_terms())}};
}

CFiniteSequence sequence_from_json(const nlohmann::json& j) {
  if (!j.is_object())
    throw std::invalid_argument("sequence JSON must be an object");
  if (j.contains("gf")) return from_gf(gf_from_json(j.at("gf")));
  if (!j.contains("recurrence") || !j.contains("initial"))
    throw std::invalid_argument(
        "sequence JSON needs \"recurrence\" and \"initial\" (or a \"gf\" object)");
  return CFiniteSequence(Recurrence(coeffs_from_json_array(j.at("recurrence"))),
                         coeffs_from_json_array(j.at("initial")));
}

nlohmann::ordered_json identity_to_json(const IdentityResult& r,
                                        std::optional<long long> elapsed_ms) {
  nlohmann::ordered_json out{{"gf", gf_to_json(r.gf)},
                             {"order_bound", r.order_bound},
                             {"order_found", r.order_found},
                             {"terms_generated", r.terms_generated},
                             {"guard_verified", r.guard_verified}};
  if (elapsed_ms) out["elapsed_ms"] = *elapsed_ms;
  return out;
}

std::string identity_to_text(const IdentityResult& r, std::optional<long long> elapsed_ms) {
  std::ostringstream os;
  os << to_string(r.gf) << "\n";
  os << "order_bound: " << r.order_bound << "\n";
  os << "order_found: " << r.order_found << "\n";
  os << "terms_generated: " << r.terms_generated << "\n";
  os << "guard_verified: " << r.guard_verified << "\n";
  os << "operands: " << r.operands << "\n";
  if (elapsed_ms) os << "elapsed_ms: " << *elapsed_ms << "\n";
  return os.str();
}

std::string identity_to_latex(const IdentityResult& r) {
  std::ostringstream os;
  os << "% operands: " << r.operands << "\n";
  os << "% order_bound = " << r.order_bound << ", order_found = " << r.order_found
     << ", terms_generated = " << r.terms_generated << ", guard_verified = " << r.guard_verified
     << "\n";
  os << "\\[ " << to_latex(r.gf) << " \\]\n";
  return os.str();
}

std::string sequence_to_text(const CFiniteSequence& s) {
  std::ostringstream os;
  os << "order: " << s.order() << "\n";
  os << "recurrence:";
  for (const Rat& c : s.recurrence().coeffs()) os << " " << rat_to_string(c);
  os << "\n";
  os << "initial:";
  for (const Rat& t : s.initial_terms()) os << " " << rat_to_string(t);
  os << "\n";
  os << "gf: " << to_string(to_gf(s)) << "\n";
  return os.str();
}

std::string sequence_to_latex(const CFiniteSequence& s) {
  std::ostringstream os;
  const std::vector<Rat>& c = s.recurrence().coeffs();
  os << "\\[ a(n) = ";
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    const bool negative = sgn(c[i]) < 0;
    Rat magnitude = abs(c[i]);
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (magnitude != 1) {
      if (magnitude.get_den() != 1)
        os << "\\frac{" << magnitude.get_num().get_str() << "}{" << magnitude.get_den().get_str()
           << "} ";
      else
        os << rat_to_string(magnitude) << " ";
    }
    os << "a(n-" << (i + 1) << ")";
  }
  if (first) os << "0";
  os << " \\]\n";
  os << "% initial:";
  for (const Rat& t : s.initial_terms()) os << " " << rat_to_string(t);
  os << "\n";
  os << "\\[ " << to_latex(to_gf(s)) << " \\]\n";
  return os.str();
}

}  // namespace cfconv
