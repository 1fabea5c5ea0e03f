#include "maxgenus/connectivity.hpp"

#include <stdexcept>
#include <string>

namespace maxgenus {

void ConnectivityBackend::attach(const MultiGraph& g) {
  n_ = g.num_vertices();
  ends_.assign(g.edge_id_bound(), {0, 0});
  present_.assign(g.edge_id_bound(), 0);
  for (EdgeId e = 0; e < g.edge_id_bound(); ++e) {
    ends_[e] = {g.endpoint(e, 0), g.endpoint(e, 1)};
    present_[e] = g.has_edge(e) ? 1 : 0;
  }
  counters_ = {};
  do_attach();
}

void ConnectivityBackend::delete_edge(EdgeId e) {
  if (!has_edge(e)) throw std::invalid_argument("delete_edge: edge " + std::to_string(e) + " not present");
  present_[e] = 0;
  ++counters_.updates;
  do_delete(e);
}

void ConnectivityBackend::insert_edge(EdgeId e) {
  if (e >= present_.size()) throw std::invalid_argument("insert_edge: unknown edge " + std::to_string(e));
  if (present_[e]) throw std::invalid_argument("insert_edge: edge " + std::to_string(e) + " already present");
  present_[e] = 1;
  ++counters_.updates;
  do_insert(e);
}

bool ConnectivityBackend::connected(VertexId u, VertexId v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("connected: vertex out of range");
  ++counters_.queries;
  return do_connected(u, v);
}

bool ConnectivityBackend::connected_all() {
  ++counters_.queries;
  return do_connected_all();
}

ConnectivityCounters ConnectivityBackend::counters() const {
  ConnectivityCounters c = counters_;
  c.promotions = do_promotions();
  return c;
}

// ------------------------------------------------------------------ dfs

void DfsBackend::do_attach() {
  adjacency_.assign(n_, {});
  for (EdgeId e = 0; e < ends_.size(); ++e) {
    if (ends_[e][0] == ends_[e][1]) continue;
    adjacency_[ends_[e][0]].push_back(e);
    adjacency_[ends_[e][1]].push_back(e);
  }
}

std::size_t DfsBackend::reach(VertexId s, VertexId target, std::vector<std::uint8_t>& seen) const {
  std::vector<VertexId> stack{s};
  seen[s] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (v == target) return count;
    for (EdgeId e : adjacency_[v]) {
      if (!present_[e]) continue;
      const VertexId w = ends_[e][0] == v ? ends_[e][1] : ends_[e][0];
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

std::size_t DfsBackend::components() const {
  std::vector<std::uint8_t> seen(n_, 0);
  std::size_t comps = 0;
  for (VertexId s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    ++comps;
    reach(s, kNoVertex, seen);
  }
  return comps;
}

bool DfsBackend::do_connected(VertexId u, VertexId v) {
  std::vector<std::uint8_t> seen(n_, 0);
  reach(u, v, seen);
  return seen[v] != 0;
}

// ------------------------------------------------------------------ dynamic

void DynamicBackend::do_attach() {
  dc_ = std::make_unique<DynamicConnectivity>(n_);
  for (EdgeId e = 0; e < ends_.size(); ++e)
    if (present_[e]) dc_->insert(e, ends_[e][0], ends_[e][1]);
}

// ------------------------------------------------------------------ factory

std::string_view to_string(BackendKind kind) { return kind == BackendKind::kDfs ? "dfs" : "dynamic"; }

BackendKind parse_backend_kind(std::string_view name) {
  if (name == "dfs") return BackendKind::kDfs;
  if (name == "dynamic") return BackendKind::kDynamic;
  throw std::invalid_argument("unknown backend '" + std::string(name) + "'");
}

std::unique_ptr<ConnectivityBackend> make_backend(BackendKind kind) {
  if (kind == BackendKind::kDfs) return std::make_unique<DfsBackend>();
  return std::make_unique<DynamicBackend>();
}

std::unique_ptr<ConnectivityBackend> dfs_backend(const MultiGraph& g) {
  auto b = make_backend(BackendKind::kDfs);
  b->attach(g);
  return b;
}

std::unique_ptr<ConnectivityBackend> dynamic_backend(const MultiGraph& g) {
  auto b = make_backend(BackendKind::kDynamic);
  b->attach(g);
  return b;
}

bool pair_removal_keeps_connected(ConnectivityBackend& backend, EdgeId e, EdgeId f) {
  if (e == f) throw std::invalid_argument("pair_removal_keeps_connected: e == f");
  if (!backend.has_edge(e) || !backend.has_edge(f))
    throw std::invalid_argument("pair_removal_keeps_connected: edge not present");
  const bool adjacent = backend.endpoint(e, 0) == backend.endpoint(f, 0) ||
                        backend.endpoint(e, 0) == backend.endpoint(f, 1) ||
                        backend.endpoint(e, 1) == backend.endpoint(f, 0) ||
                        backend.endpoint(e, 1) == backend.endpoint(f, 1);
  if (!adjacent) throw std::invalid_argument("pair_removal_keeps_connected: edges are not adjacent");

  backend.delete_edge(e);
  backend.delete_edge(f);
  if (backend.connected_all()) return true;
  backend.insert_edge(f);
  backend.insert_edge(e);
  return false;
}

}  // namespace maxgenus
