#include <doctest.h>

#include <algorithm>
#include <random>

#include "maxgenus/generators.hpp"
#include "maxgenus/graph.hpp"

using namespace maxgenus;

namespace {

std::size_t degree_sum(const MultiGraph& g) {
  std::size_t s = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) s += g.degree(v);
  return s;
}

}  // namespace

TEST_CASE("parse path on three vertices") {
  const auto g = parse_edge_list("0 1\n1 2");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(is_connected(g));
  CHECK(cycle_rank(g) == 0);
}

TEST_CASE("parse single loop") {
  const auto g = parse_edge_list("0 0\n");
  CHECK(g.num_vertices() == 1);
  CHECK(g.num_edges() == 1);
  CHECK(g.is_loop(0));
  CHECK(g.degree(0) == 2);
  CHECK(cycle_rank(g) == 1);
}

TEST_CASE("parse dipole") {
  const auto g = parse_edge_list("0 1\n0 1\n0 1\n");
  CHECK(g.num_vertices() == 2);
  CHECK(degree_sum(g) == 6);
  CHECK_FALSE(is_simple(g));
}

TEST_CASE("labels, comments and blank lines") {
  const auto g = parse_edge_list("# header\n\nhub  a   # first\nb hub\n\n");
  REQUIRE(g.num_vertices() == 3);
  CHECK(g.label(0) == "hub");
  CHECK(g.label(1) == "a");
  CHECK(g.label(2) == "b");
  CHECK(g.endpoint(1, 0) == 2);
  CHECK(g.endpoint(1, 1) == 0);
}

TEST_CASE("parse errors carry a line number") {
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("# only comments\n"), ParseError);
  try {
    parse_edge_list("0 1\n1 2 3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_edge_list("0 1\nlonely\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("format and parse round trip") {
  const auto g = gen_random_connected_multigraph(9, 20, 0.2, 0.3, 7);
  const auto text = format_edge_list(g);
  const auto h = parse_edge_list(text);
  CHECK(format_edge_list(h) == text);
  CHECK(h.num_vertices() == g.num_vertices());
  CHECK(h.num_edges() == g.num_edges());
  CHECK(degree_square_sum(h) == degree_square_sum(g));

  const auto k = parse_edge_list("0 1\n1 2\n2 2\n0 1\n");
  CHECK(parse_edge_list(format_edge_list(k)) == k);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(parse_edge_list("0 1\n1 2")));
  CHECK_FALSE(is_connected(parse_edge_list("a a\nb b\n")));
  CHECK(is_connected(MultiGraph(1)));
  CHECK(is_connected(MultiGraph(0)));
  CHECK_FALSE(is_connected(MultiGraph(2)));
  CHECK(count_components(MultiGraph(3)) == 3);
  const auto labels = component_labels(parse_edge_list("a b\nc d\nb e\n"));
  CHECK(labels == std::vector<std::uint32_t>{0, 0, 1, 1, 0});
}

TEST_CASE("cycle rank") {
  CHECK(cycle_rank(gen_path(6)) == 0);
  CHECK(cycle_rank(parse_edge_list("0 0")) == 1);
  for (int n = 1; n <= 6; ++n) {
    const auto g = gen_example_family(n);
    CHECK(g.num_vertices() == static_cast<std::size_t>(2 * n + 1));
    CHECK(g.num_edges() == static_cast<std::size_t>(6 * n));
    CHECK(cycle_rank(g) == static_cast<std::size_t>(4 * n));
  }
  CHECK(cycle_rank(gen_complete(5)) == 6);
  MultiGraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  two.add_edge(2, 3);
  CHECK(cycle_rank(two) == 1);
}

TEST_CASE("cycle rank vanishes exactly on forests") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = gen_random_connected_multigraph(7, 6 + seed % 4, 0.2, 0.2, seed);
    const bool forest = g.num_edges() + 1 == g.num_vertices();
    CHECK((cycle_rank(g) == 0) == forest);
  }
}

TEST_CASE("cactus recognition") {
  CHECK(is_cactus(gen_path(5)));
  CHECK(is_cactus(gen_cycle(5)));
  CHECK(is_cactus(parse_edge_list("0 0")));
  CHECK_FALSE(is_cactus(parse_edge_list("0 0\n0 0")));
  CHECK_FALSE(is_cactus(parse_edge_list("a b\nb c\nc a\nc d\nd e\ne c\n")));  // bowtie
  CHECK(is_cactus(parse_edge_list("a b\nb c\nc a\nc d\nd e\ne f\nf d\n")));  // triangles joined by an edge
  CHECK_FALSE(is_cactus(parse_edge_list("a b\nb c\nc a\na a\n")));     // loop on a triangle vertex
  CHECK(is_cactus(parse_edge_list("a b\nb c\nc a\nc d\nd d\n")));      // loop hanging off a triangle
  CHECK_FALSE(is_cactus(gen_complete(4)));
  CHECK_FALSE(is_cactus(gen_dipole(3)));
  CHECK(is_cactus(gen_dipole(2)));
  CHECK_FALSE(is_cactus(gen_example_family(1)));
  CHECK_THROWS_AS(is_cactus(MultiGraph(2)), GraphError);
}

TEST_CASE("deleting a loop or a bridge") {
  auto g = parse_edge_list("0 1\n1 2\n1 1\n");
  const EdgeId loop[] = {2};
  g.delete_edges(loop);
  CHECK(is_connected(g));
  g.restore_edges(loop);
  const EdgeId bridge[] = {0};
  g.delete_edges(bridge);
  CHECK_FALSE(is_connected(g));
  CHECK(g.num_vertices() == 3);
}

TEST_CASE("delete then restore is the identity") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto original = gen_random_connected_multigraph(8, 14, 0.2, 0.3, seed);
    auto g = original;
    std::mt19937_64 rng(seed);
    auto ids = g.edge_ids();
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<std::vector<EdgeId>> batches;
    for (std::size_t i = 0; i + 2 <= ids.size(); i += 2) {
      batches.push_back({ids[i], ids[i + 1]});
      g.delete_edges(batches.back());
      CHECK(degree_sum(g) == 2 * g.num_edges());
      CHECK_FALSE(g.has_edge(ids[i]));
    }
    for (auto it = batches.rbegin(); it != batches.rend(); ++it) {
      g.restore_edges(*it);
      CHECK(degree_sum(g) == 2 * g.num_edges());
    }
    CHECK(g == original);
  }
}

TEST_CASE("invalid deletions leave the graph unchanged") {
  auto g = gen_cycle(4);
  const auto before = g;
  const EdgeId bad[] = {0, 7};
  CHECK_THROWS_AS(g.delete_edges(bad), GraphError);
  CHECK(g == before);
  const EdgeId twice[] = {1, 1};
  CHECK_THROWS_AS(g.delete_edges(twice), GraphError);
  CHECK(g == before);
}

TEST_CASE("compacted renumbers live edges") {
  auto g = gen_cycle(5);
  const EdgeId del[] = {1, 3};
  g.delete_edges(del);
  std::vector<EdgeId> old;
  const auto c = g.compacted(&old);
  CHECK(c.num_edges() == 3);
  CHECK(c.edge_id_bound() == 3);
  CHECK(old == std::vector<EdgeId>{0, 2, 4});
  for (EdgeId e = 0; e < 3; ++e) {
    CHECK(c.endpoint(e, 0) == g.endpoint(old[e], 0));
    CHECK(c.endpoint(e, 1) == g.endpoint(old[e], 1));
  }
}

TEST_CASE("bridges") {
  auto b = bridges(parse_edge_list("a b\nb c\nc a\nc d\nd d\nd e\n"));
  std::sort(b.begin(), b.end());
  CHECK(b == std::vector<EdgeId>{3, 5});
  CHECK(bridges(gen_dipole(2)).empty());
  CHECK(bridges(gen_path(4)).size() == 3);
}

TEST_CASE("degree square sum") {
  CHECK(degree_square_sum(gen_complete(4)) == 36);
  CHECK(degree_square_sum(parse_edge_list("0 0")) == 4);
  CHECK(degree_square_sum(gen_path(3)) == 6);
}
