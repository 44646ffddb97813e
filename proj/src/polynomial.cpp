#include "cfconv/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace cfconv {

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Rat value) {
  std::vector<Rat> c;
  c.push_back(std::move(value));
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(std::size_t degree, Rat coefficient) {
  std::vector<Rat> c(degree + 1, Rat(0));
  c[degree] = std::move(coefficient);
  return Polynomial(std::move(c));
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rat Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rat(0);
}

const Rat& Polynomial::leading_coeff() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rat Polynomial::eval(const Rat& point) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= point;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rat> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rat> out(std::max(p.coeffs_.size(), q.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] += q.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  std::vector<Rat> out(std::max(p.coeffs_.size(), q.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] -= q.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  std::vector<Rat> out(p.coeffs_.size() + q.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (sgn(p.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      if (sgn(q.coeffs_[j]) == 0) continue;
      out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rat& scalar, const Polynomial& p) {
  if (sgn(scalar) == 0) return Polynomial();
  std::vector<Rat> out(p.coeffs_.size());
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = scalar * p.coeffs_[i];
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.is_zero() || *p.degree() < *q.degree()) return {Polynomial(), p};

  const std::size_t dp = *p.degree();
  const std::size_t dq = *q.degree();
  const std::vector<Rat>& d = q.coeffs();
  std::vector<Rat> rem = p.coeffs();
  std::vector<Rat> quot(dp - dq + 1, Rat(0));

  for (std::size_t i = dp + 1; i-- > dq;) {
    if (sgn(rem[i]) == 0) continue;
    const std::size_t k = i - dq;
    Rat factor = rem[i] / d[dq];
    for (std::size_t j = 0; j < dq; ++j) rem[k + j] -= factor * d[j];
    rem[i] = 0;
    quot[k] = std::move(factor);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

namespace {

// Primitive integer image of a rational polynomial: clear denominators, then
// divide out the content. gcds over Q only depend on this image.
std::vector<Int> primitive_integer_image(const Polynomial& p) {
  Int scale(1);
  for (const Rat& c : p.coeffs())
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> out;
  out.reserve(p.coeffs().size());
  Int content(0);
  for (const Rat& c : p.coeffs()) {
    Int factor;
    mpz_divexact(factor.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    out.push_back(Int(c.get_num()) * factor);
    if (sgn(out.back()) != 0)
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (content > 1)
    for (Int& c : out)
      if (sgn(c) != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return out;
}

void divide_out_content(std::vector<Int>& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
  Int content(0);
  for (const Int& c : v) {
    if (sgn(c) == 0) continue;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content == 1) return;
  }
  if (content <= 1) return;
  for (Int& c : v)
    if (sgn(c) != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  while (exp > 0) {
    if (exp & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// gcd(a mod p, b mod p) being constant proves gcd(a, b) = 1 exactly, provided
// p divides neither leading coefficient; the modular image is a shortcut for
// the coprime case, never a substitute for the exact remainder sequence.
bool provably_coprime_mod(const std::vector<Int>& a, const std::vector<Int>& b,
                          std::uint64_t p) {
  auto reduce = [p](const std::vector<Int>& v) {
    std::vector<std::uint64_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::uint64_t r = mpz_fdiv_ui(v[i].get_mpz_t(), p);
      out[i] = r;
    }
    return out;
  };
  if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0) return false;
  if (mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) return false;
  std::vector<std::uint64_t> u = reduce(a);
  std::vector<std::uint64_t> v = reduce(b);
  auto trim = [](std::vector<std::uint64_t>& w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
  };
  while (true) {
    trim(v);
    if (v.empty()) return u.size() <= 1;
    if (v.size() == 1) return true;  // nonzero constant divides everything
    if (u.size() < v.size()) {
      std::swap(u, v);
      continue;
    }
    // u <- u mod v over F_p
    std::uint64_t inv = powmod_u64(v.back(), p - 2, p);
    for (std::size_t top = u.size(); top-- >= v.size();) {
      std::uint64_t f = mulmod_u64(u[top], inv, p);
      if (f != 0) {
        std::size_t off = top - (v.size() - 1);
        for (std::size_t j = 0; j + 1 < v.size(); ++j) {
          std::uint64_t t = mulmod_u64(f, v[j], p);
          std::uint64_t& cell = u[off + j];
          cell = (cell >= t) ? cell - t : cell + p - t;
        }
      }
      u[top] = 0;
      if (top == v.size() - 1) break;
    }
    std::swap(u, v);
  }
}

// r <- pseudo-remainder of a by b over the integers: lc(b)^(da-db+1) * a mod b.
std::vector<Int> pseudo_remainder(std::vector<Int> a, const std::vector<Int>& b) {
  const std::size_t db = b.size() - 1;
  const Int& lead = b.back();
  while (a.size() > db) {
    Int top = a.back();
    a.pop_back();
    if (sgn(top) != 0) {
      for (std::size_t i = 0; i < a.size(); ++i) a[i] *= lead;
      const std::size_t off = a.size() - db;
      for (std::size_t j = 0; j < db; ++j) a[off + j] -= top * b[j];
    }
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
  }
  return a;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero())
    throw std::invalid_argument("poly_gcd(0, 0) is undefined");
  auto monic = [](const Polynomial& f) {
    Rat inv = Rat(1) / f.leading_coeff();
    return inv * f;
  };
  if (p.is_zero()) return monic(q);
  if (q.is_zero()) return monic(p);
  if (*p.degree() == 0 || *q.degree() == 0) return Polynomial::one();

  std::vector<Int> a = primitive_integer_image(p);
  std::vector<Int> b = primitive_integer_image(q);
  if (a.size() < b.size()) std::swap(a, b);

  // 61/62-bit primes for the coprimality probe; a prime dividing a leading
  // coefficient is skipped.
  static constexpr std::uint64_t kProbePrimes[] = {2305843009213693951ULL,   // 2^61 - 1
                                                   4611686018427387847ULL,
                                                   4611686018427387817ULL};
  for (std::uint64_t prime : kProbePrimes) {
    if (mpz_fdiv_ui(a.back().get_mpz_t(), prime) == 0) continue;
    if (mpz_fdiv_ui(b.back().get_mpz_t(), prime) == 0) continue;
    if (provably_coprime_mod(a, b, prime)) return Polynomial::one();
    break;  // a nontrivial modular gcd: fall through to the exact sequence
  }

  // Primitive Euclidean remainder sequence over the integers.
  while (!b.empty()) {
    if (b.size() == 1) return Polynomial::one();
    std::vector<Int> r = pseudo_remainder(std::move(a), b);
    divide_out_content(r);
    a = std::move(b);
    b = std::move(r);
  }
  std::vector<Rat> out;
  out.reserve(a.size());
  for (const Int& c : a) {
    Rat v(c, a.back());
    v.canonicalize();
    out.push_back(std::move(v));
  }
  return Polynomial(std::move(out));
}

}  // namespace cfconv
