#include <doctest.h>

#include "corpus.hpp"
#include "maxgenus/generators.hpp"
#include "maxgenus/greedy.hpp"
#include "maxgenus/oracle.hpp"

using namespace maxgenus;

namespace {

const OrderPolicy kPolicies[] = {OrderPolicy::kEdgeId, OrderPolicy::kRandom, OrderPolicy::kLoopsFirst,
                                 OrderPolicy::kCentralVertexFirst};

GreedyResult run(const MultiGraph& g, OrderPolicy policy, std::uint64_t seed = 0,
                 BackendKind backend = BackendKind::kDynamic) {
  GreedyOptions opt;
  opt.policy = policy;
  opt.seed = seed;
  opt.backend = backend;
  return greedy_max_genus(g, opt);
}

}  // namespace

TEST_CASE("example family: loops-first finds 2n, central-first finds n") {
  for (int n = 1; n <= 20; ++n) {
    CAPTURE(n);
    const auto g = gen_example_family(n);
    const auto loops = run(g, OrderPolicy::kLoopsFirst);
    CHECK(loops.pairs.size() == static_cast<std::size_t>(2 * n));
    CHECK(loops.bounds == GenusBounds{static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n)});
    const auto central = run(g, OrderPolicy::kCentralVertexFirst);
    CHECK(central.pairs.size() == static_cast<std::size_t>(n));
    CHECK(central.bounds == GenusBounds{static_cast<std::size_t>(n), static_cast<std::size_t>(2 * n)});
    CHECK(static_cast<bool>(verify_pair_set(g, loops.pairs)));
    CHECK(static_cast<bool>(verify_pair_set(g, central.pairs)));
    CHECK(is_cactus(central.residual));
  }
}

TEST_CASE("adversarial central pairing on G_2 is maximal with two pairs") {
  const auto g = gen_example_family(2);
  const auto r = run(g, OrderPolicy::kCentralVertexFirst);
  REQUIRE(r.pairs.size() == 2);
  for (const auto& p : r.pairs) {
    CHECK(p.witness == 0);
    CHECK_FALSE(g.is_loop(p.first));
    CHECK_FALSE(g.is_loop(p.second));
  }
  CHECK(exact_max_genus_pairs(g).gamma == 4);
}

TEST_CASE("trivial inputs") {
  const auto tree = run(gen_path(6), OrderPolicy::kEdgeId);
  CHECK(tree.pairs.empty());
  CHECK(tree.bounds == GenusBounds{0, 0});
  CHECK(tree.counters.pair_tests == 0);

  const auto two_loops = run(gen_bouquet(2), OrderPolicy::kEdgeId);
  REQUIRE(two_loops.pairs.size() == 1);
  CHECK(two_loops.pairs[0] == AdjacentPair{0, 1, 0});
  CHECK(two_loops.bounds == GenusBounds{1, 1});

  const auto four = run(gen_bouquet(4), OrderPolicy::kEdgeId);
  CHECK(four.bounds == GenusBounds{2, 2});

  const auto single = run(MultiGraph(1), OrderPolicy::kEdgeId);
  CHECK(single.pairs.empty());

  MultiGraph split(2);
  CHECK_THROWS_AS(greedy_max_genus(split), GraphError);
}

TEST_CASE("policy names") {
  for (auto p : kPolicies) CHECK(parse_order_policy(to_string(p)) == p);
  CHECK_THROWS_AS(parse_order_policy("widest"), std::invalid_argument);
}

TEST_CASE("bounds") {
  CHECK(bounds_from_pairs(0, 0) == GenusBounds{0, 0});
  CHECK(bounds_from_pairs(3, 20) == GenusBounds{3, 6});
  CHECK(bounds_from_pairs(3, 7) == GenusBounds{3, 3});
}

TEST_CASE("postconditions on random graphs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = gen_random_connected_multigraph(12, 30, 0.1, 0.2, seed);
    for (auto policy : kPolicies) {
      const auto r = run(g, policy, seed);
      CHECK(static_cast<bool>(verify_pair_set(g, r.pairs)));
      CHECK(is_cactus(r.residual));
      CHECK(r.residual.num_edges() + 2 * r.pairs.size() == g.num_edges());
      CHECK(r.bounds == bounds_from_pairs(r.pairs.size(), cycle_rank(g)));
      const auto& c = r.counters;
      CHECK(c.pair_tests == c.pair_successes + c.pair_failures);
      CHECK(c.pair_successes == r.pairs.size());
      CHECK(c.pair_tests <= c.candidate_pairs);
      CHECK(c.candidate_pairs <= c.candidate_bound);
      CHECK(c.backend.queries == c.pair_successes + c.pair_failures);
      // Every prefix keeps the graph connected.
      for (std::size_t i = 1; i <= r.pairs.size(); ++i) {
        const PairSet prefix(r.pairs.begin(), r.pairs.begin() + static_cast<std::ptrdiff_t>(i));
        CHECK(static_cast<bool>(verify_pair_set(g, prefix)));
      }
    }
  }
}

TEST_CASE("residual is maximal") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = gen_random_connected_multigraph(20, 45, 0.05, 0.2, seed);
    const auto r = run(g, OrderPolicy::kRandom, seed);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      for (const auto& p : candidate_pairs(r.residual, v)) {
        auto h = r.residual;
        const EdgeId ids[] = {p.first, p.second};
        h.delete_edges(ids);
        CHECK_FALSE(is_connected(h));
      }
  }
}

TEST_CASE("deterministic and backend independent") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = gen_random_connected_multigraph(15, 40, 0.1, 0.2, seed);
    for (auto policy : kPolicies) {
      const auto a = run(g, policy, seed, BackendKind::kDynamic);
      const auto b = run(g, policy, seed, BackendKind::kDynamic);
      const auto c = run(g, policy, seed, BackendKind::kDfs);
      CHECK(a.pairs == b.pairs);
      CHECK(a.pairs == c.pairs);
      CHECK(a.counters.pair_tests == c.counters.pair_tests);
      CHECK(a.counters.backend.queries == c.counters.backend.queries);
    }
  }
}

TEST_CASE("sandwich and prefix genus on small multigraphs") {
  const auto graphs = corpus::connected_multigraphs(6);
  for (const auto& g : graphs) {
    const auto gamma = exact_max_genus_pairs(g).gamma;
    for (auto policy : kPolicies) {
      const auto r = run(g, policy, 3);
      const auto k = r.pairs.size();
      CHECK(2 * k >= gamma);
      CHECK(k <= gamma);
      CHECK(r.bounds.lower <= gamma);
      CHECK(gamma <= r.bounds.upper);
      // Removing i pairs lowers the maximum genus by at most 2i.
      auto h = g;
      for (std::size_t i = 0; i < k; ++i) {
        const EdgeId ids[] = {r.pairs[i].first, r.pairs[i].second};
        h.delete_edges(ids);
        CHECK(exact_max_genus_pairs(h).gamma + 2 * (i + 1) >= gamma);
      }
    }
  }
}

TEST_CASE("preprocessing option") {
  const auto g = parse_edge_list("u v\nu v\nu v\nu v\nu v\nv v\nv v\nv v\nv a\na b\nb v\n");
  GreedyOptions opt;
  opt.preprocess = true;
  const auto r = greedy_max_genus(g, opt);
  CHECK(r.counters.preprocessed_pairs == 3);
  CHECK(static_cast<bool>(verify_pair_set(g, r.pairs)));
  CHECK(is_cactus(r.residual));
  CHECK(2 * r.pairs.size() >= exact_max_genus_pairs(g).gamma);
}
