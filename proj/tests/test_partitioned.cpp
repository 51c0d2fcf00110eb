#include <doctest.h>

#include <random>

#include "subcount/colorcount.hpp"
#include "subcount/partitioned.hpp"
#include "test_util.hpp"

using namespace subcount;

TEST_CASE("partition_vertices: ranges and halos") {
  SUBCASE("n=10, w=2 splits evenly") {
    Graph g = testutil::path_graph(10);
    ShardPlan p = partition_vertices(g, 2);
    CHECK(p.ranges[0] == std::pair<uint32_t, uint32_t>{0, 5});
    CHECK(p.ranges[1] == std::pair<uint32_t, uint32_t>{5, 10});
    CHECK(p.halos[0] == std::vector<uint32_t>{5});
    CHECK(p.halos[1] == std::vector<uint32_t>{4});
  }
  SUBCASE("complete graph K3 with w=3") {
    ShardPlan p = partition_vertices(testutil::triangle(), 3);
    CHECK(p.halos[0] == std::vector<uint32_t>{1, 2});
    CHECK(p.halos[1] == std::vector<uint32_t>{0, 2});
    CHECK(p.halos[2] == std::vector<uint32_t>{0, 1});
  }
  SUBCASE("w=1 owns everything, empty halo") {
    ShardPlan p = partition_vertices(testutil::triangle(), 1);
    CHECK(p.ranges.size() == 1);
    CHECK(p.halos[0].empty());
  }
  SUBCASE("w out of range") {
    CHECK_THROWS_AS(partition_vertices(testutil::triangle(), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(partition_vertices(testutil::triangle(), 4),
                    std::invalid_argument);
  }
  SUBCASE("range sizes differ by at most one") {
    std::mt19937 rng(8);
    Graph g = testutil::erdos_renyi(23, 0.2, rng);
    for (int w : {2, 3, 5, 7}) {
      ShardPlan p = partition_vertices(g, w);
      uint32_t lo = g.vertex_count(), hi = 0, covered = 0;
      for (auto [b, e] : p.ranges) {
        uint32_t size = e - b;
        lo = std::min(lo, size);
        hi = std::max(hi, size);
        covered += size;
      }
      CHECK(hi - lo <= 1);
      CHECK(covered == g.vertex_count());
    }
  }
}

TEST_CASE("distributed_estimate: w=1 matches the plain estimator") {
  std::mt19937 rng(12);
  Graph g = testutil::erdos_renyi(30, 0.15, rng);
  TemplateTree tpl = testutil::path_template(3);
  Estimate direct = estimate(g, tpl, 5, 1, 7);
  DistributedResult dist = distributed_estimate(g, tpl, 1, 5, 7);
  CHECK(dist.estimate.per_iteration == direct.per_iteration);
  CHECK(dist.estimate.value == direct.value);
  for (const auto& m : dist.messages_per_step) CHECK(m.rows == 0);
}

TEST_CASE("distributed_estimate: bitwise equal totals for all worker counts") {
  std::mt19937 rng(13);
  std::vector<std::pair<Graph, TemplateTree>> fixtures;
  fixtures.emplace_back(testutil::triangle(), testutil::path_template(3));
  fixtures.emplace_back(testutil::path_graph(9), testutil::path_template(4));
  fixtures.emplace_back(testutil::erdos_renyi(40, 0.12, rng),
                        testutil::random_tree(5, rng));
  for (const auto& [g, tpl] : fixtures) {
    Estimate single = estimate(g, tpl, 4, 1, 21);
    for (int w : {1, 2, 3, 4, 8}) {
      if (w > static_cast<int>(g.vertex_count())) continue;
      DistributedResult dist = distributed_estimate(g, tpl, w, 4, 21);
      CHECK(dist.estimate.per_iteration == single.per_iteration);
    }
  }
}

TEST_CASE("distributed_estimate: halo traffic matches the shard prediction") {
  SUBCASE("K3, w=3, P3: two halo rows per worker per composite step") {
    Graph g = testutil::triangle();
    DistributedResult r =
        distributed_estimate(g, testutil::path_template(3), 3, 2, 5);
    REQUIRE(r.messages_per_step.size() == 2);  // two composites in P3's plan
    for (const auto& m : r.messages_per_step) CHECK(m.rows == 6);  // 2 each
  }
  SUBCASE("general fixtures: rows equal the summed halo sizes") {
    std::mt19937 rng(14);
    Graph g = testutil::erdos_renyi(35, 0.1, rng);
    TemplateTree tpl = testutil::random_tree(4, rng);
    for (int w : {2, 4, 8}) {
      ShardPlan shards = partition_vertices(g, w);
      DistributedResult r = distributed_estimate(g, tpl, w, 2, 9);
      for (const auto& m : r.messages_per_step)
        CHECK(m.rows == shards.total_halo_rows());
    }
  }
}
