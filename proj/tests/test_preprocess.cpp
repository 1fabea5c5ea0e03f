#include <doctest.h>

#include <map>

#include "maxgenus/generators.hpp"
#include "maxgenus/greedy.hpp"
#include "maxgenus/preprocess.hpp"

using namespace maxgenus;

namespace {

std::size_t max_class(const MultiGraph& g, bool loops) {
  std::map<std::pair<VertexId, VertexId>, std::size_t> count;
  for (auto e : g.edge_ids()) {
    if (g.is_loop(e) != loops) continue;
    const VertexId a = g.endpoint(e, 0), b = g.endpoint(e, 1);
    ++count[{std::min(a, b), std::max(a, b)}];
  }
  std::size_t best = 0;
  for (const auto& [k, c] : count) best = std::max(best, c);
  return best;
}

}  // namespace

TEST_CASE("four parallel edges") {
  const auto r = reduce_multiedges(gen_dipole(4));
  CHECK(r.extracted.size() == 1);
  CHECK(r.extracted[0] == AdjacentPair{0, 1, 0});
  CHECK(r.reduced.num_edges() == 2);
  CHECK(r.reduced.edge_id_bound() == 4);
}

TEST_CASE("three loops") {
  const auto r = reduce_multiedges(gen_bouquet(3));
  CHECK(r.extracted.size() == 1);
  CHECK(r.reduced.num_edges() == 1);
}

TEST_CASE("class sizes") {
  for (std::size_t s = 1; s <= 9; ++s) {
    const auto r = reduce_multiedges(gen_dipole(s));
    CHECK(r.extracted.size() == (s > 2 ? (s - 1) / 2 : 0));
    CHECK(r.reduced.num_edges() == s - 2 * r.extracted.size());
    CHECK(r.reduced.num_edges() <= 2);
  }
  for (std::size_t t = 1; t <= 7; ++t) {
    const auto r = reduce_multiedges(gen_bouquet(t));
    CHECK(r.extracted.size() == t / 2);
    CHECK(r.reduced.num_edges() == t % 2);
  }
}

TEST_CASE("simple input is untouched") {
  const auto g = gen_complete(5);
  const auto r = reduce_multiedges(g);
  CHECK(r.extracted.empty());
  CHECK(r.reduced == g);
}

TEST_CASE("merge") {
  const PairSet a{{0, 1, 0}};
  CHECK(merge_pairs({}, a) == a);
  CHECK(merge_pairs(a, {}) == a);
  CHECK(merge_pairs(a, {{2, 3, 1}}).size() == 2);
  CHECK_THROWS_AS(merge_pairs(a, {{1, 3, 1}}), std::logic_error);

  // Example family: loop/edge pairs merged with nothing.
  const auto g = gen_example_family(3);
  PairSet loops;
  for (EdgeId leaf = 0; leaf < 6; ++leaf) loops.push_back({3 * leaf + 1, 3 * leaf + 2, leaf + 1});
  const auto merged = merge_pairs({}, loops);
  CHECK(merged.size() == 6);
  CHECK(static_cast<bool>(verify_pair_set(g, merged)));
}

TEST_CASE("forced pair plus greedy pair") {
  // Four parallel edges u-v plus a pendant triangle at v.
  const auto g = parse_edge_list("u v\nu v\nu v\nu v\nv a\na b\nb v\n");
  const auto pre = reduce_multiedges(g);
  REQUIRE(pre.extracted.size() == 1);
  const auto rest = greedy_max_genus(pre.reduced);
  const auto merged = merge_pairs(pre.extracted, rest.pairs);
  CHECK(merged.size() == 2);
  CHECK(static_cast<bool>(verify_pair_set(g, merged)));
}

TEST_CASE("random bundles reduce to the stated bounds") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = gen_random_connected_multigraph(6, 30, 0.3, 0.6, seed);
    const auto r = reduce_multiedges(g);
    CHECK(max_class(r.reduced, false) <= 2);
    CHECK(max_class(r.reduced, true) <= 1);
    CHECK(r.reduced.num_edges() + 2 * r.extracted.size() == g.num_edges());
    CHECK(static_cast<bool>(verify_pair_set(g, r.extracted)));
    CHECK(is_connected(r.reduced));
    CHECK(r.edge_visits <= 4 * g.num_edges() + g.num_vertices());
    const auto rest = greedy_max_genus(r.reduced);
    CHECK(static_cast<bool>(verify_pair_set(g, merge_pairs(r.extracted, rest.pairs))));
  }
}

TEST_CASE("disconnected input is rejected") {
  MultiGraph g(2);
  CHECK_THROWS_AS(reduce_multiedges(g), GraphError);
}
