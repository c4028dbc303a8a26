#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "sgchrom/chromatic.hpp"
#include "sgchrom/json_format.hpp"
#include "sgchrom/signed_graph.hpp"

namespace sgc {

enum class VerifyStatus { Pass, Counterexample, BudgetExceeded, Fail };

std::string_view status_name(VerifyStatus status) noexcept;

struct VerificationReport {
  std::string target;
  long scale = 0;
  VerifyStatus status = VerifyStatus::Pass;
  Json details = Json::object();
  double elapsed_seconds = 0.0;

  bool passed() const noexcept { return status == VerifyStatus::Pass; }
  // Timing is left out unless asked for, so reports are reproducible byte
  // for byte.
  Json to_json(bool with_timing = false) const;
  std::string summary() const;
};

struct VerifyOptions {
  Budget budget;
  // Raises the scale limits and switches signed complete graphs to the
  // partition-counting fast path.
  bool stretch = false;
  std::uint64_t seed = 1;
};

inline constexpr int kCochromaticCompleteDefault = 6;
inline constexpr int kCochromaticCompleteStretch = 7;
inline constexpr int kThresholdDefault = 8;
inline constexpr int kThresholdStretch = 12;
inline constexpr int kBivariateCompleteDefault = 6;
inline constexpr int kBivariateCompleteStretch = 7;

// Groups the switching isomorphism classes over `underlying` by chromatic
// pair and certifies every pair inside a group as not switching isomorphic.
VerificationReport search_cochromatic(const SignedGraph& underlying,
                                      const VerifyOptions& options = {});

// Chromatic pairs of the switching isomorphism classes of signed K_n are
// pairwise distinct, for n = 1..n_max.
VerificationReport verify_conj_cochromatic_complete(int n_max, const VerifyOptions& options = {});

// Even bivariate polynomials of threshold graphs with codes of length n are
// pairwise distinct, for n = 0..n_max.
VerificationReport verify_conj_threshold(int n_max, const VerifyOptions& options = {});

// Even bivariate polynomials separate the isomorphism classes of signed K_n,
// for n = 1..n_max.
VerificationReport verify_conj_complete_bivariate(int n_max, const VerifyOptions& options = {});

// Recomputes the two tables and every displayed polynomial and compares
// them exactly against the stored reference values.
VerificationReport reproduce_tables(const VerifyOptions& options = {});

// Number of unlabelled simple graphs on n vertices, n = 0..10.
std::uint64_t unlabelled_graph_count(int n);

}  // namespace sgc
