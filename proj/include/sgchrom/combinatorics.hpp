#pragma once

#include "sgchrom/polynomial.hpp"

namespace sgc {

// (x)_n = x(x-1)...(x-n+1). Throws NegativeIndex for n < 0.
UniPoly falling_factorial(int n);

// 2(x)_n = x(x-2)(x-4)...(x-2n+2). Throws NegativeIndex for n < 0.
UniPoly double_falling(int n);

// (a)_t = a(a-1)...(a-t+1) with (a)_0 = 1. Throws NegativeIndex for t < 0.
BigInt integer_falling(long a, long t);

BigInt factorial(long n);

// Zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

// Stirling numbers of the second kind; {0 0} = 1 and zero when k > n or
// either argument is negative.
BigInt stirling2(long n, long k);

// Number of k-edge matchings in K_n, (n)_{2k} / (2^k k!); zero when n < 2k.
BigInt matchings_T(long n, long k);

}  // namespace sgc
