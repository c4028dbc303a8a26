#include "sgchrom/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <thread>
#include <tuple>

#include "sgchrom/combinatorics.hpp"
#include "sgchrom/error.hpp"
#include "sgchrom/parity_union_find.hpp"

namespace sgc {

unsigned resolve_threads(const Budget& budget) {
  if (budget.threads > 0) return budget.threads;
  if (const char* env = std::getenv("SGCHROM_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------- oracle

std::vector<long> ColourSpec::colours() const {
  std::vector<long> c = paired;
  c.insert(c.end(), unpaired.begin(), unpaired.end());
  if (includes_zero) c.push_back(0);
  std::sort(c.begin(), c.end());
  return c;
}

ColourSpec make_colour_spec(long lambda, long mu) {
  if (mu < 0 || mu > lambda)
    fail(ErrorCode::BadRange, "colour spec needs lambda >= mu >= 0, got (" + std::to_string(lambda) +
                                  "," + std::to_string(mu) + ")");
  ColourSpec spec;
  spec.lambda = lambda;
  spec.mu = mu;
  const long half = (lambda - mu) / 2;
  for (long i = 1; i <= half; ++i) {
    spec.paired.push_back(-i);
    spec.paired.push_back(i);
  }
  std::sort(spec.paired.begin(), spec.paired.end());
  for (long i = 1; i <= mu; ++i) spec.unpaired.push_back(lambda + i);
  spec.includes_zero = (lambda - mu) % 2 != 0;
  return spec;
}

namespace {

struct OracleSearch {
  const SignedGraph& g;
  std::vector<long> colours;
  std::vector<long> assigned;
  // Earlier neighbours of each vertex with the edge sign.
  std::vector<std::vector<std::pair<int, int>>> back_edges;
  std::uint64_t count = 0;

  void run(int v) {
    if (v == g.vertex_count()) {
      ++count;
      return;
    }
    for (long c : colours) {
      bool ok = true;
      for (auto [w, s] : back_edges[static_cast<std::size_t>(v)]) {
        if (c == s * assigned[static_cast<std::size_t>(w)]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assigned[static_cast<std::size_t>(v)] = c;
      run(v + 1);
    }
  }
};

}  // namespace

BigInt count_colourings_oracle(const SignedGraph& g, const ColourSpec& spec, const Budget& budget) {
  const auto colours = spec.colours();
  const int n = g.vertex_count();
  BigInt space = 1;
  for (int i = 0; i < n; ++i) space *= static_cast<unsigned long>(colours.size());
  if (space > BigInt(std::to_string(budget.max_oracle_evaluations)))
    fail(ErrorCode::BudgetExceeded, "colouring oracle search space " + space.get_str() +
                                        " exceeds budget " + std::to_string(budget.max_oracle_evaluations));
  OracleSearch search{g, colours, std::vector<long>(static_cast<std::size_t>(n)), {}, 0};
  search.back_edges.resize(static_cast<std::size_t>(n));
  for (const auto& e : g.edges())
    search.back_edges[static_cast<std::size_t>(e.v)].push_back({e.u, static_cast<int>(e.sign)});
  search.run(0);
  return BigInt(std::to_string(search.count));
}

// ---------------------------------------------------------------- subset expansion

namespace {

// Signed counts of edge subsets keyed by (p, b): `all` sums every subset,
// `balanced` only those with c = b.
struct SubsetTally {
  int n = 0;
  std::vector<std::int64_t> all;
  std::vector<std::int64_t> balanced;

  std::size_t index(int p, int b) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(b);
  }
};

void tally_range(const SignedGraph& g, std::uint64_t begin, std::uint64_t end, SubsetTally& out) {
  const auto edges = g.edges();
  ParityUnionFind uf(g.vertex_count());
  for (std::uint64_t i = begin; i < end; ++i) {
    const std::uint64_t subset = i ^ (i >> 1);
    uf.reset(g.vertex_count());
    for (std::uint64_t bits = subset; bits != 0; bits &= bits - 1) {
      const auto& e = edges[static_cast<std::size_t>(std::countr_zero(bits))];
      uf.unite(e.u, e.v, e.sign == Sign::Negative);
    }
    const std::int64_t sign = (std::popcount(subset) & 1) ? -1 : 1;
    const int c = uf.components();
    const int b = uf.balanced_components();
    const int p = uf.all_positive_components();
    const auto k = out.index(p, b);
    out.all[k] += sign;
    if (c == b) out.balanced[k] += sign;
  }
}

SubsetTally tally_subsets(const SignedGraph& g, const Budget& budget) {
  const int m = static_cast<int>(g.edge_count());
  if (m > budget.max_subset_edges || m > 40)
    fail(ErrorCode::BudgetExceeded, "subset expansion over " + std::to_string(m) +
                                        " edges exceeds budget of " + std::to_string(budget.max_subset_edges));
  const int n = g.vertex_count();
  SubsetTally total;
  total.n = n;
  const auto cells = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1);
  total.all.assign(cells, 0);
  total.balanced.assign(cells, 0);
  const std::uint64_t count = std::uint64_t{1} << m;
  unsigned threads = m >= 14 ? resolve_threads(budget) : 1U;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  if (threads <= 1) {
    tally_range(g, 0, count, total);
    return total;
  }
  std::vector<SubsetTally> parts(threads, total);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = count / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = chunk * t;
    const std::uint64_t hi = t + 1 == threads ? count : chunk * (t + 1);
    workers.emplace_back([&g, lo, hi, &part = parts[t]] { tally_range(g, lo, hi, part); });
  }
  for (auto& w : workers) w.join();
  for (const auto& part : parts) {
    for (std::size_t k = 0; k < cells; ++k) {
      total.all[k] += part.all[k];
      total.balanced[k] += part.balanced[k];
    }
  }
  return total;
}

BigInt big(std::int64_t v) { return BigInt(std::to_string(v)); }

}  // namespace

ChromaticPair chromatic_pair(const SignedGraph& g, const Budget& budget) {
  const auto tally = tally_subsets(g, budget);
  const int n = g.vertex_count();
  std::vector<BigInt> even(static_cast<std::size_t>(n + 1));
  std::vector<BigInt> odd(static_cast<std::size_t>(n + 1));
  for (int p = 0; p <= n; ++p) {
    for (int b = 0; b <= n; ++b) {
      const auto k = tally.index(p, b);
      even[static_cast<std::size_t>(b)] += big(tally.balanced[k]);
      odd[static_cast<std::size_t>(b)] += big(tally.all[k]);
    }
  }
  return {UniPoly(std::move(even)), UniPoly(std::move(odd))};
}

BivariatePair bivariate_pair(const SignedGraph& g, const Budget& budget) {
  const auto tally = tally_subsets(g, budget);
  const int n = g.vertex_count();
  // x^p (x - y)^(b-p) for all needed (p, b).
  const BiPoly x_minus_y = BiPoly::x() - BiPoly::y();
  std::vector<BiPoly> diff_powers{BiPoly::constant(1)};
  for (int i = 1; i <= n; ++i) diff_powers.push_back(diff_powers.back() * x_minus_y);
  BivariatePair out;
  for (int p = 0; p <= n; ++p) {
    for (int b = p; b <= n; ++b) {
      const auto k = tally.index(p, b);
      if (tally.all[k] == 0 && tally.balanced[k] == 0) continue;
      BiPoly term = BiPoly::monomial({p, 0}) * diff_powers[static_cast<std::size_t>(b - p)];
      if (tally.balanced[k] != 0) out.even += term * big(tally.balanced[k]);
      if (tally.all[k] != 0) out.odd += term * big(tally.all[k]);
    }
  }
  return out;
}

// ---------------------------------------------------------------- interpolation

namespace {

UniPoly interpolate_integral(const std::vector<long>& xs, const std::vector<BigInt>& ys) {
  const std::size_t k = xs.size();
  std::vector<mpq_class> result(k);
  for (std::size_t i = 0; i < k; ++i) {
    // Basis polynomial prod_{j != i} (x - x_j), as rational coefficients.
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> next(basis.size() + 1);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xs[j];
      }
      basis = std::move(next);
      denom *= mpq_class(xs[i] - xs[j]);
    }
    const mpq_class scale = mpq_class(ys[i]) / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) result[d] += basis[d] * scale;
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(k);
  for (auto& c : result) {
    c.canonicalize();
    if (c.get_den() != 1)
      fail(ErrorCode::NonIntegralCoefficient, "interpolated coefficient " + c.get_str() + " is not an integer");
    coeffs.push_back(c.get_num());
  }
  return UniPoly(std::move(coeffs));
}

}  // namespace

ChromaticPair interpolated_pair(const SignedGraph& g, const Budget& budget) {
  const int n = g.vertex_count();
  std::vector<long> even_x, odd_x;
  std::vector<BigInt> even_y, odd_y;
  for (long k = 0; k <= n; ++k) {
    even_x.push_back(2 * k);
    even_y.push_back(count_colourings_oracle(g, make_colour_spec(2 * k, 0), budget));
    odd_x.push_back(2 * k + 1);
    odd_y.push_back(count_colourings_oracle(g, make_colour_spec(2 * k + 1, 0), budget));
  }
  return {interpolate_integral(even_x, even_y), interpolate_integral(odd_x, odd_y)};
}

UniPoly unsigned_chromatic(const SignedGraph& g, const Budget& budget) {
  return chromatic_pair(all_positive(g), budget).even;
}

// ---------------------------------------------------------------- threshold recursion

BivariatePair add_vertex_step(const BivariatePair& previous, int entry) {
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  const BiPoly one = BiPoly::constant(1);
  const auto& e = previous.even;
  const auto& o = previous.odd;
  if (entry == 0) return {x * e, x * o};
  if (entry != 1 && entry != -1)
    fail(ErrorCode::BadCode, "threshold code entry out of {-1,0,1}: " + std::to_string(entry));

  const BiPoly e_x1 = shift_substitute(e, -1, 0);  // E'(x-1, y)
  const BiPoly o_x1 = shift_substitute(o, -1, 0);
  const BiPoly e_x1_yp = shift_substitute(e_x1, 0, 1);  // E'(x-1, y+1)
  const BiPoly o_x1_yp = shift_substitute(o_x1, 0, 1);
  const BiPoly free_part = x - y;           // colour from the paired set
  const BiPoly free_part_odd = x - y - one;  // same, with 0 excluded
  BivariatePair out;
  if (entry == 1) {
    // v takes an unpaired colour (y ways) or a paired one (x - y ways).
    out.even = y * shift_substitute(e_x1, 0, -1) + free_part * e_x1_yp;
    out.odd = y * shift_substitute(o_x1, 0, -1) + free_part_odd * o_x1_yp + e_x1;
  } else {
    out.even = y * e + free_part * e_x1_yp;
    out.odd = y * o + free_part_odd * o_x1_yp + e_x1;
  }
  return out;
}

BivariatePair threshold_bivariate(const ThresholdCode& code) {
  BivariatePair pair{BiPoly::x(), BiPoly::x()};
  for (int a : code.entries()) pair = add_vertex_step(pair, a);
  return pair;
}

// ---------------------------------------------------------------- complete-graph fast path

namespace {

// In a proper colouring of a signed complete graph the colour classes are
// all-negative cliques; two classes may carry opposite colours only when
// every edge between them is positive, and colour 0 can only sit on one
// singleton class. The walk below tallies (classes, opposite pairs,
// unpaired singleton classes) over all partitions and matchings.
class CompletePartitionWalk {
 public:
  explicit CompletePartitionWalk(const SignedGraph& g) : g_(g) {}

  std::map<std::tuple<int, int, int>, std::int64_t> run() {
    partition(0);
    return tally_;
  }

 private:
  void partition(int v) {
    if (v == g_.vertex_count()) {
      match_blocks();
      return;
    }
    // Indexed: deeper levels append to blocks_ and may reallocate it.
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      const bool fits = std::all_of(blocks_[i].begin(), blocks_[i].end(), [&](int w) {
        return g_.sign_between(v, w) == Sign::Negative;
      });
      if (!fits) continue;
      blocks_[i].push_back(v);
      partition(v + 1);
      blocks_[i].pop_back();
    }
    blocks_.push_back({v});
    partition(v + 1);
    blocks_.pop_back();
  }

  void match_blocks() {
    const auto b = blocks_.size();
    compatible_.assign(b * b, 0);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = i + 1; j < b; ++j) {
        bool ok = true;
        for (int u : blocks_[i])
          for (int w : blocks_[j])
            if (g_.sign_between(u, w) != Sign::Positive) ok = false;
        compatible_[i * b + j] = compatible_[j * b + i] = ok ? 1 : 0;
      }
    matched_.assign(b, 0);
    match(0, 0);
  }

  void match(std::size_t i, int pairs) {
    const auto b = blocks_.size();
    while (i < b && matched_[i]) ++i;
    if (i == b) {
      int singles = 0;
      for (std::size_t j = 0; j < b; ++j)
        if (!matched_[j] && blocks_[j].size() == 1) ++singles;
      ++tally_[{static_cast<int>(b), pairs, singles}];
      return;
    }
    match(i + 1, pairs);  // i stays without an opposite partner
    matched_[i] = 1;
    for (std::size_t j = i + 1; j < b; ++j) {
      if (matched_[j] || !compatible_[i * b + j]) continue;
      matched_[j] = 1;
      match(i + 1, pairs + 1);
      matched_[j] = 0;
    }
    matched_[i] = 0;
  }

  const SignedGraph& g_;
  std::vector<std::vector<int>> blocks_;
  std::vector<char> compatible_;
  std::vector<char> matched_;
  std::map<std::tuple<int, int, int>, std::int64_t> tally_;
};

// prod_{j<k} (q - 2j) where q = x - y - offset.
BiPoly paired_falling(int k, long offset) {
  BiPoly r = BiPoly::constant(1);
  for (int j = 0; j < k; ++j)
    r *= BiPoly::x() - BiPoly::y() - BiPoly::constant(offset + 2L * j);
  return r;
}

// Ways to colour r classes injectively with unpaired colours or with at most
// one colour from each remaining pair.
BiPoly unpartnered_ways(int r, int pairs_used, long offset) {
  if (r < 0) return {};
  BiPoly sum;
  for (int a = 0; a <= r; ++a) {
    BiPoly unpaired = BiPoly::constant(binomial(r, a));
    for (int j = 0; j < a; ++j) unpaired *= BiPoly::y() - BiPoly::constant(j);
    sum += unpaired * paired_falling(r - a, offset + 2L * pairs_used);
  }
  return sum;
}

}  // namespace

BivariatePair complete_bivariate_pair(const SignedGraph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2)
    fail(ErrorCode::NotComplete, "fast path needs a signed complete graph");
  const auto tally = CompletePartitionWalk(g).run();
  BivariatePair out;
  for (const auto& [key, count] : tally) {
    const auto [b, k, singles] = key;
    const int r = b - 2 * k;
    const BigInt mult = big(count);
    out.even += paired_falling(k, 0) * unpartnered_ways(r, k, 0) * mult;
    BiPoly odd_rest = unpartnered_ways(r, k, 1);
    if (singles > 0) odd_rest += unpartnered_ways(r - 1, k, 1) * BigInt(singles);
    out.odd += paired_falling(k, 1) * odd_rest * mult;
  }
  return out;
}

}  // namespace sgc
