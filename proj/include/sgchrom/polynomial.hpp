#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sgc {

using BigInt = mpz_class;

// Dense polynomial in x with integer coefficients, lowest degree first.
// Canonical form: no trailing zero coefficient; the zero polynomial has no
// coefficients at all.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> coefficients);
  UniPoly(std::initializer_list<long> coefficients);

  static UniPoly constant(const BigInt& c);
  static UniPoly x();
  static UniPoly monomial(int degree, const BigInt& c = 1);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const BigInt& coeff(int degree) const noexcept;
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  UniPoly& operator*=(const BigInt& scalar);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const BigInt& s) { return a *= s; }
  friend UniPoly operator*(const BigInt& s, UniPoly a) { return a *= s; }
  UniPoly operator-() const;

  bool operator==(const UniPoly& other) const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

struct Exponent {
  int x = 0;
  int y = 0;
  auto operator<=>(const Exponent&) const = default;
};

// Sparse polynomial in x and y. Terms iterate in lexicographic
// (x-degree, y-degree) order and never hold a zero coefficient.
class BiPoly {
 public:
  using TermMap = std::map<Exponent, BigInt>;

  BiPoly() = default;
  explicit BiPoly(const UniPoly& in_x);

  static BiPoly constant(const BigInt& c);
  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(Exponent e, const BigInt& c = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  const BigInt& coeff(int x_degree, int y_degree) const noexcept;
  int degree_x() const noexcept;
  int degree_y() const noexcept;

  void add_term(Exponent e, const BigInt& c);

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);
  BiPoly& operator*=(const BigInt& scalar);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const BigInt& s) { return a *= s; }
  friend BiPoly operator*(const BigInt& s, BiPoly a) { return a *= s; }
  BiPoly operator-() const;

  bool operator==(const BiPoly& other) const = default;

  // p(x, y0) as a polynomial in x.
  UniPoly at_y(const BigInt& y0) const;
  // p(x, x).
  UniPoly on_diagonal() const;

 private:
  TermMap terms_;
};

template <class Poly>
struct PolyPair {
  Poly even;
  Poly odd;
  bool operator==(const PolyPair&) const = default;
};

using ChromaticPair = PolyPair<UniPoly>;
using BivariatePair = PolyPair<BiPoly>;

// p(x + dx).
UniPoly shift_substitute(const UniPoly& p, long dx);
// p(x + dx, y + dy).
BiPoly shift_substitute(const BiPoly& p, long dx, long dy);

BigInt eval(const UniPoly& p, const BigInt& x0);
BigInt eval(const BiPoly& p, const BigInt& x0, const BigInt& y0);

ChromaticPair specialize_y(const BivariatePair& pair, const BigInt& y0);

// Human-readable rendering, e.g. "x^3 - 3*x^2 + 3*x".
std::string to_string(const UniPoly& p);
std::string to_string(const BiPoly& p);

// Parses expressions such as "x(x-2)^2(x^2-3x+3)" or "x^2 - x + y".
// Juxtaposition multiplies; '*' is optional. Throws ParseError.
BiPoly parse_bipoly(std::string_view text);
UniPoly parse_unipoly(std::string_view text);

}  // namespace sgc
