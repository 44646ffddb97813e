#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "cfconv/convolve.hpp"
#include "cfconv/families.hpp"
#include "cfconv/guess.hpp"
#include "cfconv/textio.hpp"

namespace py = pybind11;
using namespace cfconv;

namespace {

std::vector<std::string> to_strings(const std::vector<Rat>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Rat& v : values) out.push_back(rat_to_string(v));
  return out;
}

std::vector<Rat> from_strings(const std::vector<std::string>& values) {
  std::vector<Rat> out;
  out.reserve(values.size());
  for (const std::string& v : values) out.push_back(rat_from_string(v));
  return out;
}

CFiniteSequence sequence_from_gf_string(const std::string& gf) {
  return from_gf(parse_rational_function(gf));
}

}  // namespace

PYBIND11_MODULE(_cfconv, m) {
  m.doc() =
      "Exact C-finite sequence toolkit: terms, recurrence guessing, and certified "
      "binomial-convolution identities. All values cross the boundary as exact "
      "rational strings.";

  py::class_<CFiniteSequence>(m, "Sequence")
      .def_static(
          "from_recurrence",
          [](const std::vector<std::string>& coeffs, const std::vector<std::string>& initial) {
            return CFiniteSequence(Recurrence(from_strings(coeffs)), from_strings(initial));
          },
          py::arg("coeffs"), py::arg("initial"),
          "Sequence with a(n) = coeffs[0] a(n-1) + ... and the given initial terms.")
      .def_static("from_gf", &sequence_from_gf_string, py::arg("gf"),
                  "Sequence read off a proper rational generating function string.")
      .def_static("named", &named_sequence, py::arg("name"))
      .def_static("kbonacci", &kbonacci, py::arg("k"))
      .def_static("zero", &CFiniteSequence::zero)
      .def_property_readonly("order", &CFiniteSequence::order)
      .def_property_readonly(
          "coeffs", [](const CFiniteSequence& s) { return to_strings(s.recurrence().coeffs()); })
      .def_property_readonly(
          "initial", [](const CFiniteSequence& s) { return to_strings(s.initial_terms()); })
      .def("is_zero", &CFiniteSequence::is_zero)
      .def(
          "terms", [](const CFiniteSequence& s, std::size_t n) { return to_strings(seq_terms(s, n)); },
          py::arg("n"))
      .def("gf", [](const CFiniteSequence& s) { return to_string(to_gf(s)); })
      .def("minimized", &minimize)
      .def("__eq__", [](const CFiniteSequence& a, const CFiniteSequence& b) { return a == b; })
      .def("__repr__", [](const CFiniteSequence& s) {
        return "Sequence(gf=" + to_string(to_gf(s)) + ")";
      });

  py::class_<GuessResult>(m, "GuessResult")
      .def_readonly("sequence", &GuessResult::sequence)
      .def_readonly("order_found", &GuessResult::order_found)
      .def_readonly("terms_used", &GuessResult::terms_used)
      .def_readonly("certified", &GuessResult::certified)
      .def("__repr__", [](const GuessResult& g) {
        return "GuessResult(order_found=" + std::to_string(g.order_found) +
               ", gf=" + to_string(to_gf(g.sequence)) + ")";
      });

  py::class_<IdentityResult>(m, "Identity")
      .def_property_readonly("gf", [](const IdentityResult& r) { return to_string(r.gf); })
      .def_property_readonly(
          "num_coeffs", [](const IdentityResult& r) { return to_strings(r.gf.numerator().coeffs()); })
      .def_property_readonly(
          "den_coeffs",
          [](const IdentityResult& r) { return to_strings(r.gf.denominator().coeffs()); })
      .def_readonly("order_bound", &IdentityResult::order_bound)
      .def_readonly("order_found", &IdentityResult::order_found)
      .def_readonly("terms_generated", &IdentityResult::terms_generated)
      .def_readonly("guard_verified", &IdentityResult::guard_verified)
      .def_readonly("operands", &IdentityResult::operands)
      .def("json", [](const IdentityResult& r) { return identity_to_json(r).dump(); })
      .def("latex", [](const IdentityResult& r) { return to_latex(r.gf); })
      .def("__repr__",
           [](const IdentityResult& r) { return "Identity(gf=" + to_string(r.gf) + ")"; });

  m.def(
      "self_convolution",
      [](const CFiniteSequence& s, std::size_t guard) { return self_convolution_identity(s, guard); },
      py::arg("seq"), py::arg("guard") = 10,
      "Certified generating function of sum_k binom(n,k) a(k) a(n-k).");
  m.def(
      "self_convolution",
      [](const std::string& gf, std::size_t guard) {
        return self_convolution_identity(parse_rational_function(gf), guard);
      },
      py::arg("gf"), py::arg("guard") = 10);
  m.def(
      "cross_convolution",
      [](const CFiniteSequence& a, const CFiniteSequence& b, std::size_t guard) {
        return cross_convolution_identity(a, b, guard);
      },
      py::arg("a"), py::arg("b"), py::arg("guard") = 10,
      "Certified generating function of sum_k binom(n,k) a(k) b(n-k).");
  m.def(
      "cross_convolution",
      [](const std::string& gf1, const std::string& gf2, std::size_t guard) {
        return cross_convolution_identity(parse_rational_function(gf1),
                                          parse_rational_function(gf2), guard);
      },
      py::arg("gf1"), py::arg("gf2"), py::arg("guard") = 10);
  m.def(
      "binomial_convolution_terms",
      [](const CFiniteSequence& a, const CFiniteSequence& b, std::size_t n) {
        return to_strings(binomial_conv_terms(a, b, n));
      },
      py::arg("a"), py::arg("b"), py::arg("n"));
  m.def(
      "conv_order_bound",
      [](int d, int d_prime, const std::string& kind) {
        if (kind == "self") return conv_order_bound(d, d_prime, ConvKind::self);
        if (kind == "cross") return conv_order_bound(d, d_prime, ConvKind::cross);
        throw std::invalid_argument("kind must be 'self' or 'cross'");
      },
      py::arg("d"), py::arg("d_prime"), py::arg("kind"));
  m.def(
      "guess",
      [](const std::vector<std::string>& data, int max_order) {
        return guess_recurrence(from_strings(data), max_order);
      },
      py::arg("terms"), py::arg("max_order"),
      "Minimal recurrence fitting all supplied terms, or None.");
  m.def(
      "series",
      [](const std::string& gf, std::size_t n) {
        return to_strings(series_expand(parse_rational_function(gf), n));
      },
      py::arg("gf"), py::arg("n"), "First n power-series coefficients of a rational function.");
  m.def("sequence_names", &sequence_names);
}
