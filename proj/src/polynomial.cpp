#include "sgchrom/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sgchrom/error.hpp"

namespace sgc {

namespace {

const BigInt& zero_ref() {
  static const BigInt zero = 0;
  return zero;
}

// In-place Taylor shift of a dense coefficient vector: c(x) -> c(x + a).
void taylor_shift(std::vector<BigInt>& c, long a) {
  if (a == 0 || c.size() < 2) return;
  const std::size_t d = c.size() - 1;
  BigInt t;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = d - 1;; --j) {
      t = c[j + 1] * a;
      c[j] += t;
      if (j == i) break;
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UniPoly::UniPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const BigInt& c) { return UniPoly(std::vector<BigInt>{c}); }

UniPoly UniPoly::x() { return monomial(1); }

UniPoly UniPoly::monomial(int degree, const BigInt& c) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

const BigInt& UniPoly::coeff(int degree) const noexcept {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return zero_ref();
  return coeffs_[static_cast<std::size_t>(degree)];
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& other) {
  *this = *this * other;
  return *this;
}

UniPoly& UniPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool UniPoly::operator==(const UniPoly& other) const { return coeffs_ == other.coeffs_; }

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(const UniPoly& in_x) {
  for (int i = 0; i <= in_x.degree(); ++i) add_term({i, 0}, in_x.coeff(i));
}

BiPoly BiPoly::constant(const BigInt& c) { return monomial({0, 0}, c); }
BiPoly BiPoly::x() { return monomial({1, 0}); }
BiPoly BiPoly::y() { return monomial({0, 1}); }

BiPoly BiPoly::monomial(Exponent e, const BigInt& c) {
  BiPoly p;
  p.add_term(e, c);
  return p;
}

const BigInt& BiPoly::coeff(int x_degree, int y_degree) const noexcept {
  auto it = terms_.find({x_degree, y_degree});
  return it == terms_.end() ? zero_ref() : it->second;
}

int BiPoly::degree_x() const noexcept {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x);
  return d;
}

int BiPoly::degree_y() const noexcept {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.y);
  return d;
}

void BiPoly::add_term(Exponent e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  BigInt t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      t = ca * cb;
      out.add_term({ea.x + eb.x, ea.y + eb.y}, t);
    }
  }
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  *this = *this * other;
  return *this;
}

BiPoly& BiPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

UniPoly BiPoly::at_y(const BigInt& y0) const {
  std::vector<BigInt> out(static_cast<std::size_t>(std::max(degree_x(), -1) + 1));
  BigInt power;
  for (const auto& [e, c] : terms_) {
    mpz_pow_ui(power.get_mpz_t(), y0.get_mpz_t(), static_cast<unsigned long>(e.y));
    out[static_cast<std::size_t>(e.x)] += c * power;
  }
  return UniPoly(std::move(out));
}

UniPoly BiPoly::on_diagonal() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x + e.y);
  std::vector<BigInt> out(static_cast<std::size_t>(d + 1));
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e.x + e.y)] += c;
  return UniPoly(std::move(out));
}

// ---------------------------------------------------------------- free functions

UniPoly shift_substitute(const UniPoly& p, long dx) {
  std::vector<BigInt> c(p.coefficients().begin(), p.coefficients().end());
  taylor_shift(c, dx);
  return UniPoly(std::move(c));
}

BiPoly shift_substitute(const BiPoly& p, long dx, long dy) {
  if (p.is_zero()) return {};
  const int dxdeg = p.degree_x();
  const int dydeg = p.degree_y();
  const auto nx = static_cast<std::size_t>(dxdeg + 1);
  const auto ny = static_cast<std::size_t>(dydeg + 1);
  // Dense scratch grid; rows indexed by y-degree.
  std::vector<std::vector<BigInt>> grid(ny, std::vector<BigInt>(nx));
  for (const auto& [e, c] : p.terms())
    grid[static_cast<std::size_t>(e.y)][static_cast<std::size_t>(e.x)] = c;
  if (dx != 0)
    for (auto& row : grid) taylor_shift(row, dx);
  if (dy != 0) {
    std::vector<BigInt> column(ny);
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < ny; ++j) column[j] = grid[j][i];
      taylor_shift(column, dy);
      for (std::size_t j = 0; j < ny; ++j) grid[j][i] = column[j];
    }
  }
  BiPoly out;
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i)
      out.add_term({static_cast<int>(i), static_cast<int>(j)}, grid[j][i]);
  return out;
}

BigInt eval(const UniPoly& p, const BigInt& x0) {
  BigInt acc = 0;
  for (int i = p.degree(); i >= 0; --i) {
    acc *= x0;
    acc += p.coeff(i);
  }
  return acc;
}

BigInt eval(const BiPoly& p, const BigInt& x0, const BigInt& y0) {
  return eval(p.at_y(y0), x0);
}

ChromaticPair specialize_y(const BivariatePair& pair, const BigInt& y0) {
  return {pair.even.at_y(y0), pair.odd.at_y(y0)};
}

// ---------------------------------------------------------------- text

namespace {

void append_term(std::ostringstream& os, bool first, const BigInt& c,
                 const std::string& monomial) {
  BigInt magnitude = abs(c);
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (monomial.empty()) {
    os << magnitude.get_str();
  } else {
    if (magnitude != 1) os << magnitude.get_str() << '*';
    os << monomial;
  }
}

std::string power_of(char var, int e) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    if (p.coeff(i) == 0) continue;
    append_term(os, first, p.coeff(i), power_of('x', i));
    first = false;
  }
  return os.str();
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = power_of('x', e.x);
    std::string ypart = power_of('y', e.y);
    if (!mono.empty() && !ypart.empty()) mono += '*';
    mono += ypart;
    append_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  BiPoly parse() {
    BiPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) error("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError,
         "polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  BiPoly expression() {
    BiPoly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  static bool starts_factor(char c) {
    return c == '(' || c == 'x' || c == 'y' || std::isdigit(static_cast<unsigned char>(c));
  }

  BiPoly term() {
    bool negate = false;
    while (peek() == '-' || peek() == '+') {
      if (text_[pos_] == '-') negate = !negate;
      ++pos_;
    }
    BiPoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (starts_factor(c)) {
        acc *= factor();
      } else {
        break;
      }
    }
    return negate ? -acc : acc;
  }

  BiPoly factor() {
    BiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      BiPoly r = BiPoly::constant(1);
      for (int i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }

  BiPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      BiPoly inner = expression();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return BiPoly::x();
    }
    if (c == 'y') {
      ++pos_;
      return BiPoly::y();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return BiPoly::constant(BigInt(std::string(text_.substr(start, pos_ - start))));
    }
    error("expected a factor");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_bipoly(std::string_view text) { return ExprParser(text).parse(); }

UniPoly parse_unipoly(std::string_view text) {
  BiPoly p = parse_bipoly(text);
  if (p.degree_y() > 0) fail(ErrorCode::ParseError, "univariate polynomial contains y");
  return p.at_y(0);
}

}  // namespace sgc
