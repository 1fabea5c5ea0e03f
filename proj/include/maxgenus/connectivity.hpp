#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "maxgenus/dynamic_connectivity.hpp"
#include "maxgenus/graph.hpp"

namespace maxgenus {

struct ConnectivityCounters {
  std::uint64_t queries = 0;     // connected / connected_all calls
  std::uint64_t updates = 0;     // edge deletions and insertions
  std::uint64_t promotions = 0;  // level increases (dynamic backend only)
};

/// Answers connectivity questions about a graph under edge deletions and
/// re-insertions. Edge ids and endpoints are fixed by attach(); only edges
/// known at attach time can later be inserted.
class ConnectivityBackend {
 public:
  virtual ~ConnectivityBackend() = default;

  /// Loads the live edges of g; any previous state is discarded.
  void attach(const MultiGraph& g);
  void delete_edge(EdgeId e);
  void insert_edge(EdgeId e);
  bool connected(VertexId u, VertexId v);
  bool connected_all();

  bool has_edge(EdgeId e) const { return e < present_.size() && present_[e]; }
  VertexId endpoint(EdgeId e, unsigned end) const { return ends_[e][end]; }
  std::size_t num_vertices() const { return n_; }
  virtual std::size_t components() const = 0;
  virtual std::string_view name() const = 0;

  ConnectivityCounters counters() const;

 protected:
  virtual void do_attach() = 0;
  virtual void do_delete(EdgeId e) = 0;
  virtual void do_insert(EdgeId e) = 0;
  virtual bool do_connected(VertexId u, VertexId v) = 0;
  virtual bool do_connected_all() = 0;
  virtual std::uint64_t do_promotions() const { return 0; }

  std::size_t n_ = 0;
  std::vector<std::array<VertexId, 2>> ends_;
  std::vector<std::uint8_t> present_;

 private:
  ConnectivityCounters counters_;
};

/// Full graph traversal per query; O(1) updates.
class DfsBackend final : public ConnectivityBackend {
 public:
  std::size_t components() const override;
  std::string_view name() const override { return "dfs"; }

 private:
  void do_attach() override;
  void do_delete(EdgeId) override {}
  void do_insert(EdgeId) override {}
  bool do_connected(VertexId u, VertexId v) override;
  bool do_connected_all() override { return components() <= 1; }

  std::size_t reach(VertexId s, VertexId target, std::vector<std::uint8_t>& seen) const;

  std::vector<std::vector<EdgeId>> adjacency_;
};

/// Hierarchical Euler-tour forests, see DynamicConnectivity.
class DynamicBackend final : public ConnectivityBackend {
 public:
  std::size_t components() const override { return dc_ ? dc_->components() : 0; }
  std::string_view name() const override { return "dynamic"; }
  const DynamicConnectivity& structure() const { return *dc_; }

 private:
  void do_attach() override;
  void do_delete(EdgeId e) override { dc_->remove(e); }
  void do_insert(EdgeId e) override { dc_->insert(e, ends_[e][0], ends_[e][1]); }
  bool do_connected(VertexId u, VertexId v) override { return dc_->connected(u, v); }
  bool do_connected_all() override { return dc_->components() <= 1; }
  std::uint64_t do_promotions() const override { return dc_ ? dc_->promotions() : 0; }

  std::unique_ptr<DynamicConnectivity> dc_;
};

enum class BackendKind { kDfs, kDynamic };

std::string_view to_string(BackendKind kind);
BackendKind parse_backend_kind(std::string_view name);

std::unique_ptr<ConnectivityBackend> make_backend(BackendKind kind);
std::unique_ptr<ConnectivityBackend> dfs_backend(const MultiGraph& g);
std::unique_ptr<ConnectivityBackend> dynamic_backend(const MultiGraph& g);

/// Tentatively deletes e then f. If the graph stays connected the deletion
/// is kept and true is returned; otherwise the edges are re-inserted in
/// reverse order and false is returned. Throws std::invalid_argument if
/// e == f, an edge is absent, or the edges share no endpoint.
bool pair_removal_keeps_connected(ConnectivityBackend& backend, EdgeId e, EdgeId f);

}  // namespace maxgenus
