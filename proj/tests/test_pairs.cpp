#include <doctest.h>

#include "maxgenus/generators.hpp"
#include "maxgenus/pairs.hpp"

using namespace maxgenus;

TEST_CASE("example family loop pairs leave a spanning tree") {
  const auto g = gen_example_family(1);
  const PairSet p{{1, 2, 1}, {4, 5, 2}};
  CHECK(static_cast<bool>(verify_pair_set(g, p)));
}

TEST_CASE("pair set faults") {
  const auto g = parse_edge_list("a b\nb c\nc a\nc d\n");
  CHECK(verify_pair_set(g, {{3, 2, 2}}).fault == PairSetFault::kDisconnects);
  CHECK(verify_pair_set(g, {{0, 1, 1}, {1, 2, 2}}).fault == PairSetFault::kOverlap);
  CHECK(verify_pair_set(g, {{0, 1, 1}, {1, 2, 2}}).pair_index == 1);
  CHECK(verify_pair_set(g, {{0, 0, 0}}).fault == PairSetFault::kSameEdge);
  CHECK(verify_pair_set(g, {{0, 9, 0}}).fault == PairSetFault::kUnknownEdge);
  CHECK(verify_pair_set(g, {{0, 1, 0}}).fault == PairSetFault::kNotAdjacent);
  CHECK(verify_pair_set(g, {{0, 3, 3}}).fault == PairSetFault::kNotAdjacent);
  CHECK(static_cast<bool>(verify_pair_set(g, {})));
  CHECK(to_string(PairSetFault::kOverlap) == "pairs overlap");
}

TEST_CASE("deleted edges are unknown to the verifier") {
  auto g = gen_dipole(4);
  const EdgeId del[] = {0};
  g.delete_edges(del);
  CHECK(verify_pair_set(g, {{0, 1, 0}}).fault == PairSetFault::kUnknownEdge);
  CHECK(static_cast<bool>(verify_pair_set(g, {{1, 2, 0}})));
}

TEST_CASE("candidate pairs") {
  const auto star = parse_edge_list("c a\nc b\nc d\n");
  const auto p = candidate_pairs(star, 0);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == AdjacentPair{0, 1, 0});
  CHECK(p[1] == AdjacentPair{0, 2, 0});
  CHECK(p[2] == AdjacentPair{1, 2, 0});

  const auto loop_edge = parse_edge_list("v v\nv w\n");
  const auto q = candidate_pairs(loop_edge, 0);
  REQUIRE(q.size() == 1);
  CHECK(q[0] == AdjacentPair{0, 1, 0});

  CHECK(candidate_pairs(MultiGraph(1), 0).empty());
  CHECK(candidate_pairs(gen_bouquet(3), 0).size() == 3);
  CHECK(candidate_pairs(gen_dipole(4), 1).size() == 6);
}

TEST_CASE("shares_vertex") {
  const auto g = parse_edge_list("a b\nb c\nc c\n");
  CHECK(shares_vertex(g, 0, 1, 1));
  CHECK_FALSE(shares_vertex(g, 0, 1, 0));
  CHECK(shares_vertex(g, 1, 2, 2));
}
