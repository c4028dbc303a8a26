#pragma once

#include <string>
#include <vector>

#include "sgchrom/polynomial.hpp"
#include "sgchrom/signed_graph.hpp"

namespace sgc {

// Closed forms for joins of all-positive and all-negative complete graphs.
// Every family function returns 0 when any argument is negative.

// sum_i S(n,i) 2(x)_i: even polynomial of -K_n.
UniPoly family_H(long n);

// (-K_l) v+ (+K_m) v+ (-K_n)
UniPoly family_H1(long l, long m, long n);
// (-K_l) v+ (-K_m) v+ (-K_n)
UniPoly family_H2(long l, long m, long n);
// ((+K_l) v- (+K_m)) v+ (+K_n)
UniPoly family_H3(long l, long m, long n);
// ((+K_l) v- (+K_m)) v+ (-K_n)
UniPoly family_H4(long l, long m, long n);

// The correction term of the odd polynomial:
//   l F(l-1,m,n,x-1) + m F(l,m-1,n,x-1) + n F(l,m,n-1,x-1).
UniPoly family_hat(int family, long l, long m, long n);

// 2(x)_{l+m+s-i-j-k-t} (l+m-i-2j-2k)_t. Throws BadIndex unless
// l+m+s-i-j-k >= t >= 0.
UniPoly family_U(long i, long j, long k, long l, long m, long s, long t);

UniPoly family_polynomial(int family, long l, long m, long n);

// (even, even(x-1) + hat). Throws NegativeParameter for negative arguments
// and BadIndex for a family outside 1..4.
ChromaticPair join_pair(int family, long l, long m, long n);

// The signed graph whose chromatic pair join_pair describes.
SignedGraph join_family_graph(int family, long l, long m, long n);

struct IdentityResult {
  std::string id;         // "i" .. "ix"
  std::string statement;
  std::string range;
  std::size_t cases = 0;
  bool passed = true;
  std::string counterexample;  // first failing instance, if any
};

struct IdentityReport {
  int max_param = 0;
  std::vector<IdentityResult> results;
  bool all_passed() const;
  std::string to_text() const;
};

// Checks the nine join identities over every parameter tuple with entries
// up to max_param (and -1 where the identity is stated for all integers).
IdentityReport identity_suite(int max_param);

}  // namespace sgc
