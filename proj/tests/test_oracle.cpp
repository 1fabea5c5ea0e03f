#include <doctest.h>

#include "corpus.hpp"
#include "maxgenus/generators.hpp"
#include "maxgenus/oracle.hpp"

using namespace maxgenus;

TEST_CASE("known maximum genera") {
  struct Case {
    const char* name;
    MultiGraph g;
    std::size_t gamma;
  };
  const Case cases[] = {
      {"G_1", gen_example_family(1), 2},
      {"bowtie", parse_edge_list("a b\nb c\nc a\nc d\nd e\ne c\n"), 1},
      {"triangles joined by a path", parse_edge_list("a b\nb c\nc a\nc d\nd e\ne f\nf d\n"), 0},
      {"K4", gen_complete(4), 1},
      {"K5", gen_complete(5), 3},
      {"tree", gen_path(5), 0},
      {"bouquet 2", gen_bouquet(2), 1},
      {"bouquet 5", gen_bouquet(5), 2},
      {"triangle", gen_cycle(3), 0},
      {"dipole 3", gen_dipole(3), 1},
      {"dipole 4", gen_dipole(4), 1},
      {"dipole 5", gen_dipole(5), 2},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto p = exact_max_genus_pairs(c.g);
    CHECK(p.gamma == c.gamma);
    CHECK(p.witness.size() == c.gamma);
    CHECK(static_cast<bool>(verify_pair_set(c.g, p.witness)));
    const auto x = xuong_max_genus(c.g);
    CHECK(x.gamma == c.gamma);
    CHECK(x.beta == cycle_rank(c.g));
    CHECK(x.beta - 2 * x.gamma == x.odd);
    CHECK(odd_components(c.g, x.tree) == x.odd);
    CHECK(exact_max_genus_rotations(c.g) == c.gamma);
    CHECK(exact_max_genus_rotations_serial(c.g) == c.gamma);
  }
}

TEST_CASE("odd cotree components") {
  const auto tree_only = gen_path(4);
  const EdgeId all[] = {0, 1, 2};
  CHECK(odd_components(tree_only, all) == 0);

  const auto bouquet = gen_bouquet(2);
  CHECK(odd_components(bouquet, {}) == 0);

  const auto triangle = gen_cycle(3);
  const EdgeId path[] = {0, 1};
  CHECK(odd_components(triangle, path) == 1);

  // Star with three leaves plus extra edges: cotree shapes are chosen by tree choice.
  auto g = parse_edge_list("c a\nc b\nc d\nc e\na b\nb a\nd e\n");
  const EdgeId star[] = {0, 1, 2, 3};
  CHECK(odd_components(g, star) == 1);  // {ab, ba} even, {de} odd
  const auto k4 = gen_complete(4);
  const EdgeId k4_star[] = {0, 1, 2};
  CHECK(odd_components(k4, k4_star) == 1);  // triangle on the leaves: 3 edges
  const EdgeId k4_path[] = {0, 3, 5};       // 0-1, 1-2, 2-3
  CHECK(odd_components(k4, k4_path) == 1);

  auto two = parse_edge_list("a b\nb c\nc d\na b\nc d\n");
  const EdgeId spine[] = {0, 1, 2};
  CHECK(odd_components(two, spine) == 2);

  const EdgeId not_tree[] = {0, 1};
  CHECK_THROWS_AS(odd_components(k4, not_tree), GraphError);
}

TEST_CASE("rotation system count") {
  CHECK(rotation_system_count(gen_path(3)) == 1);
  CHECK(rotation_system_count(gen_bouquet(2)) == 6);
  CHECK(rotation_system_count(gen_complete(4)) == 16);
  CHECK(rotation_system_count(gen_bouquet(20)) == UINT64_MAX);
}

TEST_CASE("limits are enforced") {
  OracleLimits tight;
  tight.max_pair_search_edges = 5;
  tight.max_spanning_trees = 3;
  tight.max_rotation_systems = 10;
  CHECK_THROWS_AS(exact_max_genus_pairs(gen_complete(4), tight), LimitExceeded);
  // Nine spanning trees, none reaching the parity floor, so all are visited.
  const auto linked = parse_edge_list("a b\nb c\nc a\nc d\nd e\ne f\nf d\n");
  CHECK_THROWS_AS(xuong_max_genus(linked, tight), LimitExceeded);
  tight.max_spanning_trees = 9;
  CHECK(xuong_max_genus(linked, tight).gamma == 0);
  CHECK_THROWS_AS(exact_max_genus_rotations(gen_complete(4), tight), LimitExceeded);
  CHECK_THROWS_AS(exact_max_genus_rotations_serial(gen_complete(4), tight), LimitExceeded);
  CHECK(exact_max_genus_pairs(gen_cycle(5), tight).gamma == 0);
}

TEST_CASE("disconnected input is rejected") {
  MultiGraph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(exact_max_genus_pairs(g), GraphError);
  CHECK_THROWS_AS(xuong_max_genus(g), GraphError);
  CHECK_THROWS_AS(exact_max_genus_rotations(g), GraphError);
}

TEST_CASE("oracles skip deleted edges") {
  auto g = gen_complete(4);
  const EdgeId del[] = {0};
  g.delete_edges(del);
  const auto p = exact_max_genus_pairs(g);
  CHECK(p.gamma == 1);
  for (const auto& pair : p.witness) CHECK((pair.first != 0 && pair.second != 0));
  CHECK(xuong_max_genus(g).gamma == 1);
  CHECK(exact_max_genus_rotations(g) == 1);
}

TEST_CASE("oracles agree on small multigraphs") {
  const auto graphs = corpus::connected_multigraphs(5);
  std::size_t compared = 0;
  for (const auto& g : graphs) {
    const auto p = exact_max_genus_pairs(g);
    const auto x = xuong_max_genus(g);
    CHECK(p.gamma == x.gamma);
    CHECK(p.gamma <= cycle_rank(g) / 2);
    CHECK((x.odd % 2) == (x.beta % 2));
    CHECK((p.gamma == 0) == is_cactus(g));
    CHECK((p.gamma == 0) == p.witness.empty());
    if (rotation_system_count(g) <= 100000) {
      const auto r = exact_max_genus_rotations(g);
      CHECK(r == p.gamma);
      CHECK(exact_max_genus_rotations_serial(g) == r);
      ++compared;
    }
  }
  CHECK(compared > 100);
}
