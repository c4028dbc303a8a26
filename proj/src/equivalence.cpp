#include "sgchrom/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "sgchrom/error.hpp"

namespace sgc {
namespace {

std::vector<std::int8_t> sign_matrix(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::int8_t> a(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : g.edges()) {
    const auto s = static_cast<std::int8_t>(e.sign);
    a[static_cast<std::size_t>(e.u) * n + e.v] = s;
    a[static_cast<std::size_t>(e.v) * n + e.u] = s;
  }
  return a;
}

struct Profile {
  int degree = 0;
  int positive = 0;
  bool operator==(const Profile&) const = default;
};

// Backtracking over vertex maps g1 -> g2 that preserve the sign matrix.
class IsoSearch {
 public:
  using Visitor = std::function<bool(const std::vector<int>&)>;

  IsoSearch(const SignedGraph& g1, const SignedGraph& g2, std::uint64_t max_nodes)
      : n_(g1.vertex_count()), a1_(sign_matrix(g1)), a2_(sign_matrix(g2)),
        max_nodes_(max_nodes) {
    p1_.resize(n_);
    p2_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      p1_[v] = {g1.degree(v), g1.positive_degree(v)};
      p2_[v] = {g2.degree(v), g2.positive_degree(v)};
    }
  }

  // Maps fixed[i].first -> fixed[i].second before searching the rest.
  // The visitor returns false to stop.
  void run(const std::vector<std::pair<int, int>>& fixed, const Visitor& visit) {
    image_.assign(n_, -1);
    used_.assign(n_, 0);
    order_.clear();
    std::vector<char> placed(n_, 0);
    for (auto [u, w] : fixed) {
      order_.push_back(u);
      placed[u] = 1;
    }
    // Most-connected-to-placed first keeps the consistency checks early.
    while (static_cast<int>(order_.size()) < n_) {
      int best = -1, best_links = -1, best_deg = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int u : order_) links += a1_[idx(u, v)] != 0;
        if (links > best_links || (links == best_links && p1_[v].degree > best_deg)) {
          best = v;
          best_links = links;
          best_deg = p1_[v].degree;
        }
      }
      order_.push_back(best);
      placed[best] = 1;
    }
    fixed_ = fixed;
    visit_ = &visit;
    stop_ = false;
    extend(0);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

  bool consistent(int depth, int u, int w) const {
    if (!(p1_[u] == p2_[w]) || used_[w]) return false;
    for (int d = 0; d < depth; ++d) {
      const int x = order_[d];
      if (a1_[idx(u, x)] != a2_[idx(w, image_[x])]) return false;
    }
    return true;
  }

  void extend(int depth) {
    if (stop_) return;
    if (++nodes_ > max_nodes_) fail(ErrorCode::BudgetExceeded, "isomorphism search exceeded node budget");
    if (depth == n_) {
      if (!(*visit_)(image_)) stop_ = true;
      return;
    }
    const int u = order_[depth];
    auto attempt = [&](int w) {
      if (!consistent(depth, u, w)) return;
      image_[u] = w;
      used_[w] = 1;
      extend(depth + 1);
      used_[w] = 0;
      image_[u] = -1;
    };
    if (depth < static_cast<int>(fixed_.size())) {
      attempt(fixed_[depth].second);
      return;
    }
    for (int w = 0; w < n_ && !stop_; ++w) attempt(w);
  }

  int n_;
  std::vector<std::int8_t> a1_, a2_;
  std::vector<Profile> p1_, p2_;
  std::vector<int> order_, image_;
  std::vector<char> used_;
  std::vector<std::pair<int, int>> fixed_;
  const Visitor* visit_ = nullptr;
  bool stop_ = false;
  std::uint64_t nodes_ = 0;
  std::uint64_t max_nodes_;
};

bool quick_reject(const SignedGraph& g1, const SignedGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() ||
      g1.negative_edge_count() != g2.negative_edge_count())
    return true;
  auto profile = [](const SignedGraph& g) {
    std::vector<std::pair<int, int>> d;
    for (int v = 0; v < g.vertex_count(); ++v) d.emplace_back(g.degree(v), g.positive_degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  return profile(g1) != profile(g2);
}

std::vector<int> degree_profile(const SignedGraph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// Smallest vertex of each connected component.
std::vector<int> component_roots(const SignedGraph& g, std::vector<int>& component) {
  const int n = g.vertex_count();
  component.assign(n, -1);
  std::vector<int> roots;
  for (int s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    const int c = static_cast<int>(roots.size());
    roots.push_back(s);
    std::vector<int> stack{s};
    component[s] = c;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (component[v] < 0 && g.adjacent(u, v)) {
          component[v] = c;
          stack.push_back(v);
        }
    }
  }
  return roots;
}

}  // namespace

IsomorphismResult find_isomorphism(const SignedGraph& g1, const SignedGraph& g2,
                                   const Budget& budget) {
  IsomorphismResult result;
  if (quick_reject(g1, g2)) return result;
  IsoSearch search(g1, g2, budget.max_search_nodes);
  IsoSearch::Visitor visit = [&](const std::vector<int>& image) {
    result.found = true;
    result.permutation = image;
    return false;
  };
  search.run({}, visit);
  result.nodes = search.nodes();
  return result;
}

bool are_isomorphic(const SignedGraph& g1, const SignedGraph& g2, const Budget& budget) {
  return find_isomorphism(g1, g2, budget).found;
}

std::size_t negative_triangle_count(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::size_t count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto sab = g.sign_between(a, b);
      if (!sab) continue;
      for (int c = b + 1; c < n; ++c) {
        auto sbc = g.sign_between(b, c);
        auto sac = g.sign_between(a, c);
        if (!sbc || !sac) continue;
        int product = static_cast<int>(*sab) * static_cast<int>(*sbc) * static_cast<int>(*sac);
        if (product < 0) ++count;
      }
    }
  return count;
}

SwitchingIsomorphismResult find_switching_isomorphism(const SignedGraph& g1,
                                                      const SignedGraph& g2,
                                                      const Budget& budget) {
  SwitchingIsomorphismResult r;
  auto note = [&](std::string line) { r.transcript.push_back(std::move(line)); };
  const int n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
    note("vertex or edge counts differ: reject");
    return r;
  }
  if (degree_profile(g1) != degree_profile(g2)) {
    note("underlying degree sequences differ: reject");
    return r;
  }
  const bool b1 = is_balanced(g1), b2 = is_balanced(g2);
  note(std::string("balance: ") + (b1 ? "balanced" : "unbalanced") + " vs " +
       (b2 ? "balanced" : "unbalanced"));
  if (b1 != b2) {
    note("balance differs: reject");
    return r;
  }
  const auto t1 = negative_triangle_count(g1), t2 = negative_triangle_count(g2);
  note("negative triangles: " + std::to_string(t1) + " vs " + std::to_string(t2));
  if (t1 != t2) {
    note("negative triangle counts differ: reject");
    return r;
  }

  std::vector<int> component;
  const auto roots = component_roots(g2, component);
  std::vector<int> free_vertices;
  for (int v = 0; v < n; ++v)
    if (std::find(roots.begin(), roots.end(), v) == roots.end()) free_vertices.push_back(v);
  if (free_vertices.size() > 40)
    fail(ErrorCode::BudgetExceeded, "too many switchings to examine");
  const std::uint64_t total = std::uint64_t{1} << free_vertices.size();
  note("switchings to examine: " + std::to_string(total) + " (one fixed vertex per component, " +
       std::to_string(roots.size()) + " components)");

  const std::size_t target_negative = g1.negative_edge_count();
  std::uint64_t candidates = 0;
  std::uint64_t nodes = 0;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<int> subset;
    for (std::size_t i = 0; i < free_vertices.size(); ++i)
      if ((bits >> i) & 1U) subset.push_back(free_vertices[i]);
    ++r.switchings_examined;
    SignedGraph s = switch_vertices(g2, subset);
    if (s.negative_edge_count() != target_negative) continue;
    ++candidates;
    ++r.isomorphism_searches;
    auto iso = find_isomorphism(g1, s, budget);
    nodes += iso.nodes;
    if (iso.found) {
      r.found = true;
      r.switching_set = subset;
      r.permutation = iso.permutation;
      std::string set_text;
      for (int v : subset) set_text += (set_text.empty() ? "" : ",") + std::to_string(v);
      note("switching {" + set_text + "} of the second graph is isomorphic to the first: accept");
      return r;
    }
  }
  note("switchings with matching negative-edge count: " + std::to_string(candidates) +
       ", isomorphism searches: " + std::to_string(r.isomorphism_searches) +
       ", search nodes: " + std::to_string(nodes) + ", all failed: reject");
  return r;
}

bool are_switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2,
                              const Budget& budget) {
  return find_switching_isomorphism(g1, g2, budget).found;
}

std::vector<std::vector<int>> automorphisms(const SignedGraph& underlying, const Budget& budget) {
  SignedGraph g = all_positive(underlying);
  std::vector<std::vector<int>> out;
  IsoSearch search(g, g, budget.max_search_nodes);
  IsoSearch::Visitor visit = [&](const std::vector<int>& image) {
    out.push_back(image);
    return true;
  };
  search.run({}, visit);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> automorphism_generators(const SignedGraph& underlying,
                                                      const Budget& budget) {
  SignedGraph g = all_positive(underlying);
  const int n = g.vertex_count();
  std::vector<std::vector<int>> gens;

  auto orbit_of = [&](int k) {
    std::vector<char> in(n, 0);
    std::vector<int> queue{k};
    in[k] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& p : gens) {
        int w = p[queue[q]];
        if (!in[w]) {
          in[w] = 1;
          queue.push_back(w);
        }
      }
    return in;
  };

  // Deepest level first: generators added at level k fix 0..k-1, so the
  // orbit of k under what has been collected is a lower bound for its orbit
  // under the pointwise stabiliser.
  for (int k = n - 1; k >= 0; --k) {
    for (int t = k + 1; t < n; ++t) {
      if (orbit_of(k)[t]) continue;
      std::vector<std::pair<int, int>> fixed;
      for (int v = 0; v < k; ++v) fixed.emplace_back(v, v);
      fixed.emplace_back(k, t);
      IsoSearch search(g, g, budget.max_search_nodes);
      std::vector<int> found;
      IsoSearch::Visitor visit = [&](const std::vector<int>& image) {
        found = image;
        return false;
      };
      search.run(fixed, visit);
      if (!found.empty()) gens.push_back(found);
    }
  }
  return gens;
}

SignedGraph apply_signature(const SignedGraph& underlying, std::uint64_t mask) {
  std::vector<Edge> edges(underlying.edges().begin(), underlying.edges().end());
  for (std::size_t i = 0; i < edges.size(); ++i)
    edges[i].sign = ((mask >> i) & 1U) ? Sign::Negative : Sign::Positive;
  return SignedGraph::build(underlying.vertex_count(), std::span<const Edge>(edges));
}

std::uint64_t signature_mask(const SignedGraph& g) {
  if (g.edge_count() > 64) fail(ErrorCode::BudgetExceeded, "signature mask needs at most 64 edges");
  std::uint64_t mask = 0;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].sign == Sign::Negative) mask |= std::uint64_t{1} << i;
  return mask;
}

std::string_view mode_name(EquivalenceMode mode) noexcept {
  switch (mode) {
    case EquivalenceMode::Isomorphism: return "iso";
    case EquivalenceMode::SwitchingIsomorphism: return "switching_iso";
    case EquivalenceMode::Switching: return "switching";
  }
  return "unknown";
}

EquivalenceMode parse_mode(std::string_view text) {
  if (text == "iso") return EquivalenceMode::Isomorphism;
  if (text == "switch" || text == "switching_iso") return EquivalenceMode::SwitchingIsomorphism;
  if (text == "switching") return EquivalenceMode::Switching;
  fail(ErrorCode::UsageError, "unknown mode '" + std::string(text) + "'");
}

ClassInventory enumerate_classes(const SignedGraph& underlying, EquivalenceMode mode,
                                 const Budget& budget) {
  const std::size_t m = underlying.edge_count();
  if (static_cast<int>(m) > budget.max_orbit_edges)
    fail(ErrorCode::BudgetExceeded, "orbit enumeration needs 2^" + std::to_string(m) +
                                        " states; budget allows 2^" +
                                        std::to_string(budget.max_orbit_edges));
  ClassInventory inv;
  inv.underlying = all_positive(underlying);
  inv.mode = mode;
  const int n = underlying.vertex_count();
  const auto edges = inv.underlying.edges();

  std::vector<int> edge_index(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t i = 0; i < m; ++i) {
    edge_index[static_cast<std::size_t>(edges[i].u) * n + edges[i].v] = static_cast<int>(i);
    edge_index[static_cast<std::size_t>(edges[i].v) * n + edges[i].u] = static_cast<int>(i);
  }

  std::vector<std::uint64_t> flips;
  if (mode != EquivalenceMode::Isomorphism) {
    for (int v = 0; v < n; ++v) {
      std::uint64_t f = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (edges[i].u == v || edges[i].v == v) f |= std::uint64_t{1} << i;
      if (f) flips.push_back(f);
    }
  }
  std::vector<std::vector<int>> edge_maps;
  if (mode != EquivalenceMode::Switching) {
    for (const auto& p : automorphism_generators(inv.underlying, budget)) {
      std::vector<int> em(m);
      for (std::size_t i = 0; i < m; ++i)
        em[i] = edge_index[static_cast<std::size_t>(p[edges[i].u]) * n + p[edges[i].v]];
      edge_maps.push_back(std::move(em));
    }
  }

  const std::uint64_t states = std::uint64_t{1} << m;
  std::vector<std::uint32_t> parent(states);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;
    else parent[a] = b;
  };

  for (std::uint64_t s = 0; s < states; ++s) {
    const auto a = static_cast<std::uint32_t>(s);
    for (auto f : flips) unite(a, static_cast<std::uint32_t>(s ^ f));
    for (const auto& em : edge_maps) {
      std::uint64_t t = 0;
      for (std::size_t i = 0; i < m; ++i)
        if ((s >> i) & 1U) t |= std::uint64_t{1} << em[i];
      unite(a, static_cast<std::uint32_t>(t));
    }
  }

  std::vector<std::uint64_t> size_of_root;
  std::vector<std::int64_t> slot(states, -1);
  for (std::uint64_t s = 0; s < states; ++s) {
    const auto r = find(static_cast<std::uint32_t>(s));
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(inv.masks.size());
      inv.masks.push_back(r);
      inv.orbit_sizes.push_back(0);
    }
    ++inv.orbit_sizes[static_cast<std::size_t>(slot[r])];
  }
  for (auto mask : inv.masks) inv.representatives.push_back(apply_signature(inv.underlying, mask));
  return inv;
}

}  // namespace sgc
