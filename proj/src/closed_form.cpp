#include "sgchrom/closed_form.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "sgchrom/combinatorics.hpp"
#include "sgchrom/error.hpp"

namespace sgc {
namespace {

UniPoly shifted_falling(long shift, long m) {
  return shift_substitute(falling_factorial(static_cast<int>(m)), -shift);
}

UniPoly df(long n) { return double_falling(static_cast<int>(n)); }

void check_family(int family) {
  if (family < 1 || family > 4)
    fail(ErrorCode::BadIndex, "family must be 1..4, got " + std::to_string(family));
}

}  // namespace

UniPoly family_H(long n) {
  UniPoly out;
  if (n < 0) return out;
  for (long i = 0; i <= n; ++i) out += stirling2(n, i) * df(i);
  return out;
}

UniPoly family_H1(long l, long m, long n) {
  UniPoly out;
  if (l < 0 || m < 0 || n < 0) return out;
  for (long i = 0; i <= l; ++i) {
    for (long j = 0; j <= n; ++j) {
      BigInt sij = stirling2(l, i) * stirling2(n, j);
      if (sij == 0) continue;
      UniPoly tail = shifted_falling(i + j, m);
      for (long k = 0; k <= std::min(i, j); ++k) {
        BigInt c = factorial(k) * binomial(i, k) * binomial(j, k) * sij;
        out += c * (df(i + j - k) * tail);
      }
    }
  }
  return out;
}

UniPoly family_H2(long l, long m, long n) {
  UniPoly out;
  if (l < 0 || m < 0 || n < 0) return out;
  for (long i = 0; i <= l; ++i) {
    for (long j = 0; j <= m; ++j) {
      for (long k = 0; k <= n; ++k) {
        BigInt sijk = stirling2(l, i) * stirling2(m, j) * stirling2(n, k);
        if (sijk == 0) continue;
        for (long s = 0; s <= std::min(i, j); ++s) {
          for (long t = 0; t <= k; ++t) {
            BigInt c = factorial(s) * binomial(i, s) * binomial(j, s) * binomial(k, t) *
                       sijk * integer_falling(i + j - 2 * s, t);
            if (c == 0) continue;
            out += c * df(i + j + k - t - s);
          }
        }
      }
    }
  }
  return out;
}

UniPoly family_H3(long l, long m, long n) {
  UniPoly out;
  if (l < 0 || m < 0 || n < 0) return out;
  for (long i = 0; i <= std::min(l, m); ++i) {
    BigInt ci = factorial(i) * binomial(l, i) * binomial(m, i);
    UniPoly tail = shifted_falling(l + m - i, n);
    for (long j = 0; j <= (l - i) / 2; ++j) {
      for (long k = 0; k <= (m - i) / 2; ++k) {
        BigInt c = ci * matchings_T(l - i, j) * matchings_T(m - i, k);
        out += c * (df(l + m - i - j - k) * tail);
      }
    }
  }
  return out;
}

UniPoly family_U(long i, long j, long k, long l, long m, long s, long t) {
  long top = l + m + s - i - j - k;
  if (t < 0 || top < t)
    fail(ErrorCode::BadIndex, "U_x needs l+m+s-i-j-k >= t >= 0");
  return df(top - t) * integer_falling(l + m - i - 2 * j - 2 * k, t);
}

UniPoly family_H4(long l, long m, long n) {
  UniPoly out;
  if (l < 0 || m < 0 || n < 0) return out;
  for (long i = 0; i <= std::min(l, m); ++i) {
    BigInt ci = factorial(i) * binomial(l, i) * binomial(m, i);
    for (long j = 0; j <= (l - i) / 2; ++j) {
      for (long k = 0; k <= (m - i) / 2; ++k) {
        BigInt cjk = ci * matchings_T(l - i, j) * matchings_T(m - i, k);
        for (long s = 0; s <= n; ++s) {
          BigInt cs = cjk * stirling2(n, s);
          if (cs == 0) continue;
          for (long t = 0; t <= s; ++t)
            out += (cs * binomial(s, t)) * family_U(i, j, k, l, m, s, t);
        }
      }
    }
  }
  return out;
}

UniPoly family_polynomial(int family, long l, long m, long n) {
  check_family(family);
  switch (family) {
    case 1: return family_H1(l, m, n);
    case 2: return family_H2(l, m, n);
    case 3: return family_H3(l, m, n);
    default: return family_H4(l, m, n);
  }
}

UniPoly family_hat(int family, long l, long m, long n) {
  UniPoly sum = BigInt(l) * family_polynomial(family, l - 1, m, n) +
                BigInt(m) * family_polynomial(family, l, m - 1, n) +
                BigInt(n) * family_polynomial(family, l, m, n - 1);
  return shift_substitute(sum, -1);
}

ChromaticPair join_pair(int family, long l, long m, long n) {
  check_family(family);
  if (l < 0 || m < 0 || n < 0) fail(ErrorCode::NegativeParameter, "join parameters must be >= 0");
  ChromaticPair pair;
  pair.even = family_polynomial(family, l, m, n);
  pair.odd = shift_substitute(pair.even, -1) + family_hat(family, l, m, n);
  return pair;
}

SignedGraph join_family_graph(int family, long l, long m, long n) {
  check_family(family);
  if (l < 0 || m < 0 || n < 0) fail(ErrorCode::NegativeParameter, "join parameters must be >= 0");
  auto K = [](long size, Sign s) { return complete_graph(static_cast<int>(size), s); };
  switch (family) {
    case 1:
      return join(join(K(l, Sign::Negative), K(m, Sign::Positive), Sign::Positive),
                  K(n, Sign::Negative), Sign::Positive);
    case 2:
      return join(join(K(l, Sign::Negative), K(m, Sign::Negative), Sign::Positive),
                  K(n, Sign::Negative), Sign::Positive);
    case 3:
      return join(join(K(l, Sign::Positive), K(m, Sign::Positive), Sign::Negative),
                  K(n, Sign::Positive), Sign::Positive);
    default:
      return join(join(K(l, Sign::Positive), K(m, Sign::Positive), Sign::Negative),
                  K(n, Sign::Negative), Sign::Positive);
  }
}

bool IdentityReport::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const IdentityResult& r) { return r.passed; });
}

std::string IdentityReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.id << "  " << r.statement << "  [" << r.range << "]  " << r.cases << " cases  "
       << (r.passed ? "pass" : "FAIL");
    if (!r.passed) os << "  first counterexample: " << r.counterexample;
    os << '\n';
  }
  return os.str();
}

namespace {

class FamilyCache {
 public:
  const UniPoly& get(int family, long l, long m, long n) {
    auto key = std::make_tuple(family, l, m, n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    UniPoly p = family == 0 ? family_H(n) : family_polynomial(family, l, m, n);
    return cache_.emplace(key, std::move(p)).first->second;
  }

 private:
  std::map<std::tuple<int, long, long, long>, UniPoly> cache_;
};

std::string tuple_text(std::initializer_list<long> values) {
  std::string s = "(";
  bool first = true;
  for (long v : values) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + ")";
}

struct Checker {
  Checker(std::string id, std::string statement, std::string range) {
    result.id = std::move(id);
    result.statement = std::move(statement);
    result.range = std::move(range);
  }
  IdentityResult result;
  void record(bool ok, const std::string& where) {
    ++result.cases;
    if (!ok && result.passed) {
      result.passed = false;
      result.counterexample = where;
    }
  }
};

// Right-hand side of the explicit expansion of H(q + r).
UniPoly split_sum(long q, long r) {
  UniPoly out;
  for (long i = 0; i <= q; ++i)
    for (long k = 0; k <= r; ++k)
      for (long t = 0; t <= k; ++t) {
        BigInt c = binomial(k, t) * stirling2(q, i) * stirling2(r, k) * integer_falling(i, t);
        if (c != 0) out += c * df(i + k - t);
      }
  return out;
}

UniPoly matching_sum(long n) {
  UniPoly out;
  for (long j = 0; j <= n / 2; ++j) out += matchings_T(n, j) * df(n - j);
  return out;
}

}  // namespace

IdentityReport identity_suite(int max_param) {
  if (max_param < 0) fail(ErrorCode::BadRange, "max_param must be >= 0");
  IdentityReport report;
  report.max_param = max_param;
  FamilyCache fc;
  const long lo = -1, hi = max_param;
  const std::string all_range = "-1.." + std::to_string(hi);
  const std::string nonneg_range = "0.." + std::to_string(hi);

  auto permutations_equal = [&](int family, long l, long m, long n) {
    std::array<long, 3> a{l, m, n};
    std::sort(a.begin(), a.end());
    const UniPoly& base = fc.get(family, l, m, n);
    do {
      if (!(fc.get(family, a[0], a[1], a[2]) == base)) return false;
    } while (std::next_permutation(a.begin(), a.end()));
    return true;
  };

  {
    Checker c{"i", "H1(l,m,n) = H1(n,m,l)", "l,m,n in " + all_range};
    for (long l = lo; l <= hi; ++l)
      for (long m = lo; m <= hi; ++m)
        for (long n = lo; n <= hi; ++n)
          c.record(fc.get(1, l, m, n) == fc.get(1, n, m, l), tuple_text({l, m, n}));
    report.results.push_back(c.result);
  }
  {
    Checker c{"ii", "H2 invariant under permuting (l,m,n)", "l,m,n in " + all_range};
    for (long l = lo; l <= hi; ++l)
      for (long m = lo; m <= hi; ++m)
        for (long n = lo; n <= hi; ++n)
          c.record(permutations_equal(2, l, m, n), tuple_text({l, m, n}));
    report.results.push_back(c.result);
  }
  {
    Checker c{"iii", "H1(l,1,n) = H2(l,1,n)", "l,n in " + all_range};
    for (long l = lo; l <= hi; ++l)
      for (long n = lo; n <= hi; ++n)
        c.record(fc.get(1, l, 1, n) == fc.get(2, l, 1, n), tuple_text({l, 1, n}));
    report.results.push_back(c.result);
  }
  {
    Checker c{"iv", "H1(q,0,r) = H2(q,0,r) = H(q+r) = explicit split sum",
               "q,r in " + nonneg_range};
    for (long q = 0; q <= hi; ++q)
      for (long r = 0; r <= hi; ++r) {
        const UniPoly& h = fc.get(0, 0, 0, q + r);
        bool ok = fc.get(1, q, 0, r) == h && fc.get(2, q, 0, r) == h && split_sum(q, r) == h;
        c.record(ok, tuple_text({q, r}));
      }
    report.results.push_back(c.result);
  }
  {
    Checker c{"v", "H4(l,m,n) = H4(m,l,n)", "l,m,n in " + all_range};
    for (long l = lo; l <= hi; ++l)
      for (long m = lo; m <= hi; ++m)
        for (long n = lo; n <= hi; ++n)
          c.record(fc.get(4, l, m, n) == fc.get(4, m, l, n), tuple_text({l, m, n}));
    report.results.push_back(c.result);
  }
  {
    Checker c{"vi", "H3 invariant under permuting (l,m,n)", "l,m,n in " + all_range};
    for (long l = lo; l <= hi; ++l)
      for (long m = lo; m <= hi; ++m)
        for (long n = lo; n <= hi; ++n)
          c.record(permutations_equal(3, l, m, n), tuple_text({l, m, n}));
    report.results.push_back(c.result);
  }
  {
    Checker c{"vii", "H3(l,m,1) = H4(l,m,1)", "l,m in " + all_range};
    for (long l = lo; l <= hi; ++l)
      for (long m = lo; m <= hi; ++m)
        c.record(fc.get(3, l, m, 1) == fc.get(4, l, m, 1), tuple_text({l, m, 1}));
    report.results.push_back(c.result);
  }
  {
    Checker c{"viii", "H3(q,r,0) = H4(q,r,0) = (x)_{q+r} = sum_j T(q+r,j) 2(x)_{q+r-j}",
               "q,r in " + nonneg_range};
    for (long q = 0; q <= hi; ++q)
      for (long r = 0; r <= hi; ++r) {
        UniPoly fall = falling_factorial(static_cast<int>(q + r));
        bool ok = fc.get(3, q, r, 0) == fall && fc.get(4, q, r, 0) == fall &&
                  matching_sum(q + r) == fall;
        c.record(ok, tuple_text({q, r}));
      }
    report.results.push_back(c.result);
  }
  {
    Checker c{"ix", "H1(0,m,n) = H4(1,m,n-1)",
               "m in " + nonneg_range + ", n in 1.." + std::to_string(std::max(hi, 1L))};
    for (long m = 0; m <= hi; ++m)
      for (long n = 1; n <= std::max(hi, 1L); ++n)
        c.record(fc.get(1, 0, m, n) == fc.get(4, 1, m, n - 1), tuple_text({0, m, n}));
    report.results.push_back(c.result);
  }
  return report;
}

}  // namespace sgc
