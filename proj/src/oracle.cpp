#include "maxgenus/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace maxgenus {

namespace {

struct Dsu {
  std::vector<std::uint32_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// ---------------------------------------------------------------- pairs

class PairSearch {
 public:
  explicit PairSearch(MultiGraph h) : h_(std::move(h)), state_(h_.num_edges(), kUndecided) {}

  PairsOracleResult run() {
    search();
    return {best_.size(), best_};
  }

 private:
  enum : std::uint8_t { kUndecided, kKept, kRemoved };

  void search() {
    if (current_.size() > best_.size()) best_ = current_;
    const std::size_t beta = h_.num_edges() + 1 - h_.num_vertices();
    const std::size_t undecided = static_cast<std::size_t>(std::count(state_.begin(), state_.end(), kUndecided));
    if (current_.size() + std::min(beta / 2, undecided / 2) <= best_.size()) return;

    const auto it = std::find(state_.begin(), state_.end(), kUndecided);
    if (it == state_.end()) return;
    const auto e = static_cast<EdgeId>(it - state_.begin());

    std::vector<AdjacentPair> partners;
    for (unsigned end = 0; end < (h_.is_loop(e) ? 1U : 2U); ++end) {
      const VertexId w = h_.endpoint(e, end);
      for (Dart d : h_.darts(w)) {
        if (d.edge == e || state_[d.edge] != kUndecided) continue;
        const bool dup = std::any_of(partners.begin(), partners.end(),
                                     [&](const AdjacentPair& p) { return p.second == d.edge; });
        if (!dup) partners.push_back({e, d.edge, w});
      }
    }

    for (const auto& p : partners) {
      const EdgeId ids[2] = {p.first, p.second};
      h_.delete_edges(ids);
      if (is_connected(h_)) {
        state_[p.first] = state_[p.second] = kRemoved;
        current_.push_back(p);
        search();
        current_.pop_back();
        state_[p.first] = state_[p.second] = kUndecided;
      }
      h_.restore_edges(ids);
    }

    state_[e] = kKept;
    search();
    state_[e] = kUndecided;
  }

  MultiGraph h_;
  std::vector<std::uint8_t> state_;
  PairSet current_;
  PairSet best_;
};

// ---------------------------------------------------------------- xuong

class TreeSearch {
 public:
  TreeSearch(const MultiGraph& h, std::uint64_t limit) : h_(h), limit_(limit), in_tree_(h.num_edges(), 0) {
    for (EdgeId e = 0; e < h_.num_edges(); ++e)
      if (!h_.is_loop(e)) candidates_.push_back(e);
    beta_ = h_.num_edges() + 1 - h_.num_vertices();
  }

  void run() {
    Dsu dsu(h_.num_vertices());
    recurse(0, 0, dsu);
  }

  std::size_t best_odd() const { return best_odd_; }
  const std::vector<EdgeId>& best_tree() const { return best_tree_; }
  std::size_t beta() const { return beta_; }

 private:
  // Are the vertices connected using tree edges plus candidates from index i on?
  bool still_spannable(std::size_t i) const {
    Dsu dsu(h_.num_vertices());
    std::size_t comps = h_.num_vertices();
    for (EdgeId e = 0; e < h_.num_edges(); ++e)
      if (in_tree_[e] && dsu.unite(h_.endpoint(e, 0), h_.endpoint(e, 1))) --comps;
    for (std::size_t j = i; j < candidates_.size(); ++j) {
      const EdgeId e = candidates_[j];
      if (dsu.unite(h_.endpoint(e, 0), h_.endpoint(e, 1))) --comps;
    }
    return comps == 1;
  }

  void recurse(std::size_t i, std::size_t tree_size, const Dsu& dsu) {
    if (done_) return;
    if (tree_size + 1 == h_.num_vertices()) {
      if (++trees_ > limit_) throw LimitExceeded("spanning tree enumeration exceeds limit");
      std::vector<EdgeId> tree;
      for (EdgeId e = 0; e < h_.num_edges(); ++e)
        if (in_tree_[e]) tree.push_back(e);
      const std::size_t odd = odd_components(h_, tree);
      if (odd < best_odd_) {
        best_odd_ = odd;
        best_tree_ = std::move(tree);
        // odd has the parity of beta, so beta mod 2 cannot be beaten.
        if (best_odd_ == beta_ % 2) done_ = true;
      }
      return;
    }
    if (i == candidates_.size()) return;
    const EdgeId e = candidates_[i];
    Dsu with = dsu;
    if (with.unite(h_.endpoint(e, 0), h_.endpoint(e, 1))) {
      in_tree_[e] = 1;
      recurse(i + 1, tree_size + 1, with);
      in_tree_[e] = 0;
    }
    // Deleting e is allowed only if e is not a bridge of what remains.
    if (still_spannable(i + 1)) recurse(i + 1, tree_size, dsu);
  }

  const MultiGraph& h_;
  std::uint64_t limit_;
  std::vector<std::uint8_t> in_tree_;
  std::vector<EdgeId> candidates_;
  std::size_t beta_ = 0;
  std::uint64_t trees_ = 0;
  std::size_t best_odd_ = std::numeric_limits<std::size_t>::max();
  std::vector<EdgeId> best_tree_;
  bool done_ = false;
};

// ---------------------------------------------------------------- rotations

// Per-vertex dart layout shared by the serial and parallel kernels.
struct RotationLayout {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::vector<std::uint32_t>> darts;  // sorted dart indices per vertex
  std::vector<std::uint64_t> radix;               // (deg-1)! per vertex (saturating), 1 for deg 0

  explicit RotationLayout(const MultiGraph& h) : n(h.num_vertices()), m(h.num_edges()), darts(n), radix(n, 1) {
    for (VertexId v = 0; v < n; ++v) {
      for (Dart d : h.darts(v)) darts[v].push_back(static_cast<std::uint32_t>(d.index()));
      std::sort(darts[v].begin(), darts[v].end());
      constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
      for (std::uint64_t k = 2; k < darts[v].size(); ++k) radix[v] = radix[v] > kMax / k ? kMax : radix[v] * k;
    }
  }

  std::uint64_t total() const {
    std::uint64_t t = 1;
    for (auto r : radix) {
      if (t > std::numeric_limits<std::uint64_t>::max() / r) return std::numeric_limits<std::uint64_t>::max();
      t *= r;
    }
    return t;
  }

  std::size_t genus_cap() const { return (m + 1 - n) / 2; }
};

// Evaluates the genus of one configuration: `order[v]` holds the darts of v
// after the fixed first dart.
class FaceCounter {
 public:
  explicit FaceCounter(const RotationLayout& layout)
      : layout_(layout), succ_(2 * layout.m), seen_(2 * layout.m) {}

  std::size_t genus(const std::vector<std::vector<std::uint32_t>>& order) {
    if (layout_.m == 0) return 0;
    for (std::size_t v = 0; v < layout_.n; ++v) {
      const auto& ds = layout_.darts[v];
      if (ds.empty()) continue;
      std::uint32_t prev = ds[0];
      for (auto d : order[v]) {
        succ_[prev] = d;
        prev = d;
      }
      succ_[prev] = ds[0];
    }
    std::fill(seen_.begin(), seen_.end(), 0);
    std::size_t faces = 0;
    for (std::uint32_t s = 0; s < succ_.size(); ++s) {
      if (seen_[s]) continue;
      ++faces;
      for (std::uint32_t d = s; !seen_[d]; d = succ_[d ^ 1U]) seen_[d] = 1;
    }
    return (2 + layout_.m - layout_.n - faces) / 2;
  }

 private:
  const RotationLayout& layout_;
  std::vector<std::uint32_t> succ_;
  std::vector<std::uint8_t> seen_;
};

std::vector<std::vector<std::uint32_t>> initial_order(const RotationLayout& layout) {
  std::vector<std::vector<std::uint32_t>> order(layout.n);
  for (std::size_t v = 0; v < layout.n; ++v)
    if (!layout.darts[v].empty()) order[v].assign(layout.darts[v].begin() + 1, layout.darts[v].end());
  return order;
}

// Advances the odometer; returns false after the last configuration.
bool advance(std::vector<std::vector<std::uint32_t>>& order) {
  for (auto& o : order)
    if (std::next_permutation(o.begin(), o.end())) return true;
  return false;
}

// Lexicographic permutation number `rank` of the sorted sequence `items`.
void unrank(std::vector<std::uint32_t>& items, std::uint64_t rank) {
  std::vector<std::uint32_t> pool = items;
  std::sort(pool.begin(), pool.end());
  std::uint64_t fact = 1;
  for (std::size_t k = 2; k < pool.size(); ++k) fact *= k;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::size_t remaining = pool.size();
    const std::size_t pick = remaining > 1 ? static_cast<std::size_t>(rank / fact) : 0;
    if (remaining > 1) {
      rank %= fact;
      fact /= std::max<std::size_t>(remaining - 1, 1);
    }
    items[i] = pool[pick];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
}

void check_rotation_limit(const RotationLayout& layout, const OracleLimits& limits) {
  if (layout.total() > limits.max_rotation_systems)
    throw LimitExceeded("rotation system count exceeds limit");
}

MultiGraph compact_connected(const MultiGraph& g, std::vector<EdgeId>& old_ids, const char* who) {
  if (!is_connected(g)) throw GraphError(std::string(who) + ": graph is disconnected");
  return g.compacted(&old_ids);
}

}  // namespace

PairsOracleResult exact_max_genus_pairs(const MultiGraph& g, const OracleLimits& limits) {
  std::vector<EdgeId> old_ids;
  MultiGraph h = compact_connected(g, old_ids, "exact_max_genus_pairs");
  if (h.num_edges() > limits.max_pair_search_edges) throw LimitExceeded("pair search exceeds edge limit");
  auto result = PairSearch(std::move(h)).run();
  for (auto& p : result.witness) {
    p.first = old_ids[p.first];
    p.second = old_ids[p.second];
  }
  return result;
}

std::size_t odd_components(const MultiGraph& g, std::span<const EdgeId> tree) {
  const std::size_t n = g.num_vertices();
  if (tree.size() + 1 != n) throw GraphError("odd_components: wrong number of tree edges");
  std::vector<std::uint8_t> in_tree(g.edge_id_bound(), 0);
  Dsu forest(n);
  for (EdgeId e : tree) {
    if (!g.has_edge(e) || in_tree[e] || !forest.unite(g.endpoint(e, 0), g.endpoint(e, 1)))
      throw GraphError("odd_components: edge set is not a spanning tree");
    in_tree[e] = 1;
  }
  Dsu cotree(n);
  for (EdgeId e : g.edge_ids())
    if (!in_tree[e]) cotree.unite(g.endpoint(e, 0), g.endpoint(e, 1));
  std::vector<std::size_t> edges_in(n, 0);
  for (EdgeId e : g.edge_ids())
    if (!in_tree[e]) ++edges_in[cotree.find(g.endpoint(e, 0))];
  return static_cast<std::size_t>(std::count_if(edges_in.begin(), edges_in.end(), [](std::size_t c) { return c % 2 == 1; }));
}

XuongCertificate xuong_max_genus(const MultiGraph& g, const OracleLimits& limits) {
  std::vector<EdgeId> old_ids;
  const MultiGraph h = compact_connected(g, old_ids, "xuong_max_genus");
  TreeSearch search(h, limits.max_spanning_trees);
  search.run();
  XuongCertificate cert;
  for (EdgeId e : search.best_tree()) cert.tree.push_back(old_ids[e]);
  cert.odd = search.best_odd();
  cert.beta = search.beta();
  cert.gamma = (cert.beta - cert.odd) / 2;
  return cert;
}

std::uint64_t rotation_system_count(const MultiGraph& g) { return RotationLayout(g).total(); }

std::size_t exact_max_genus_rotations_serial(const MultiGraph& g, const OracleLimits& limits) {
  std::vector<EdgeId> old_ids;
  const MultiGraph h = compact_connected(g, old_ids, "exact_max_genus_rotations");
  const RotationLayout layout(h);
  check_rotation_limit(layout, limits);
  FaceCounter counter(layout);
  auto order = initial_order(layout);
  const std::size_t cap = layout.genus_cap();
  std::size_t best = 0;
  do {
    best = std::max(best, counter.genus(order));
  } while (best < cap && advance(order));
  return best;
}

std::size_t exact_max_genus_rotations(const MultiGraph& g, const OracleLimits& limits) {
  std::vector<EdgeId> old_ids;
  const MultiGraph h = compact_connected(g, old_ids, "exact_max_genus_rotations");
  const RotationLayout layout(h);
  check_rotation_limit(layout, limits);
  const std::uint64_t total = layout.total();
  const std::size_t cap = layout.genus_cap();
  constexpr std::uint64_t kChunk = 2048;
  const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);

  std::atomic<bool> reached_cap{false};
  std::size_t best = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(max : best)
  for (std::int64_t c = 0; c < chunks; ++c) {
    if (reached_cap.load(std::memory_order_relaxed)) continue;
    FaceCounter counter(layout);
    auto order = initial_order(layout);
    std::uint64_t index = static_cast<std::uint64_t>(c) * kChunk;
    for (std::size_t v = 0; v < layout.n; ++v) {
      unrank(order[v], index % layout.radix[v]);
      index /= layout.radix[v];
    }
    const std::uint64_t count = std::min<std::uint64_t>(kChunk, total - static_cast<std::uint64_t>(c) * kChunk);
    for (std::uint64_t i = 0; i < count; ++i) {
      best = std::max(best, counter.genus(order));
      if (best >= cap) {
        reached_cap.store(true, std::memory_order_relaxed);
        break;
      }
      advance(order);
    }
  }
  return best;
}

}  // namespace maxgenus
