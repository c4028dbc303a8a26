#include "sgchrom/combinatorics.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "sgchrom/error.hpp"

namespace sgc {

namespace {

// Lazily grown triangular tables shared between threads.
class TriangleTable {
 public:
  using Rule = void (*)(std::vector<std::vector<BigInt>>&, std::size_t);

  explicit TriangleTable(Rule extend) : extend_(extend) {}

  BigInt at(std::size_t n, std::size_t k) {
    std::lock_guard lock(mutex_);
    while (rows_.size() <= n) extend_(rows_, rows_.size());
    return rows_[n][k];
  }

 private:
  Rule extend_;
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

void pascal_row(std::vector<std::vector<BigInt>>& rows, std::size_t n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  row[n] = 1;
  for (std::size_t k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
  rows.push_back(std::move(row));
}

void stirling_row(std::vector<std::vector<BigInt>>& rows, std::size_t n) {
  std::vector<BigInt> row(n + 1);
  if (n == 0) {
    row[0] = 1;
  } else {
    for (std::size_t k = 1; k <= n; ++k) {
      BigInt left = rows[n - 1][k - 1];
      BigInt keep = k < n ? BigInt(rows[n - 1][k] * static_cast<unsigned long>(k)) : BigInt(0);
      row[k] = left + keep;
    }
  }
  rows.push_back(std::move(row));
}

TriangleTable& pascal() {
  static TriangleTable table(pascal_row);
  return table;
}

TriangleTable& stirling() {
  static TriangleTable table(stirling_row);
  return table;
}

void require_nonnegative(long n, const char* what) {
  if (n < 0) fail(ErrorCode::NegativeIndex, std::string(what) + " requires a nonnegative index, got " + std::to_string(n));
}

}  // namespace

UniPoly falling_factorial(int n) {
  require_nonnegative(n, "falling_factorial");
  UniPoly p = UniPoly::constant(1);
  for (int j = 0; j < n; ++j) p *= UniPoly{-j, 1};
  return p;
}

UniPoly double_falling(int n) {
  require_nonnegative(n, "double_falling");
  UniPoly p = UniPoly::constant(1);
  for (int j = 0; j < n; ++j) p *= UniPoly{-2L * j, 1};
  return p;
}

BigInt integer_falling(long a, long t) {
  require_nonnegative(t, "integer_falling");
  BigInt r = 1;
  for (long j = 0; j < t; ++j) r *= BigInt(a - j);
  return r;
}

BigInt factorial(long n) {
  require_nonnegative(n, "factorial");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return pascal().at(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

BigInt stirling2(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return stirling().at(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

BigInt matchings_T(long n, long k) {
  if (k < 0 || n < 2 * k) return 0;
  BigInt numerator = integer_falling(n, 2 * k);
  BigInt denominator = factorial(k);
  denominator <<= static_cast<mp_bitcnt_t>(k);
  return numerator / denominator;
}

}  // namespace sgc
