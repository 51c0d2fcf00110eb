#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "subcount/partition.hpp"
#include "subcount/template_tree.hpp"
#include "test_util.hpp"

using namespace subcount;

namespace {

std::string write_temp(const std::string& contents) {
  static int counter = 0;
  auto path = std::filesystem::temp_directory_path() /
              ("subcount_tpl_" + std::to_string(::getpid()) + "_" +
               std::to_string(counter++) + ".el");
  std::ofstream out(path);
  out << contents;
  return path.string();
}

int find_entry(const PartitionPlan& plan, uint32_t mask) {
  for (size_t i = 0; i < plan.subtemplates.size(); ++i)
    if (plan.subtemplates[i].vertex_mask == mask) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("parse_template: paths and stars") {
  auto p3 = write_temp("0 1\n1 2\n");
  TemplateTree t = parse_template(p3);
  CHECK(t.vertex_count() == 3);
  std::filesystem::remove(p3);

  auto star = write_temp("0 1\n0 2\n0 3\n");
  TemplateTree s = parse_template(star);
  CHECK(s.vertex_count() == 4);
  CHECK(s.neighbors(0).size() == 3);
  std::filesystem::remove(star);
}

TEST_CASE("parse_template: rejects cycles and oversized trees") {
  auto cyc = write_temp("0 1\n1 2\n2 0\n");
  CHECK_THROWS_AS(parse_template(cyc), std::invalid_argument);
  std::filesystem::remove(cyc);

  CHECK_THROWS_AS(TemplateTree::from_edges(3, {{0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TemplateTree::from_edges(3, {{0, 1}, {0, 3}}),
                  std::invalid_argument);
  std::vector<std::pair<uint32_t, uint32_t>> big;
  for (uint32_t v = 0; v + 1 < 17; ++v) big.emplace_back(v, v + 1);
  CHECK_THROWS_AS(TemplateTree::from_edges(17, big), std::invalid_argument);
}

TEST_CASE("partition_template: P3 chain") {
  PartitionPlan plan = partition_template(testutil::path_template(3));
  REQUIRE(plan.subtemplates.size() == 5);  // 3 leaves + 2 composites
  const auto& top = plan.subtemplates[plan.top_index];
  CHECK(top.vertex_mask == 0b111);
  CHECK(top.root == 0);
  CHECK(plan.subtemplates[top.active_child].vertex_mask == 0b001);
  const auto& passive = plan.subtemplates[top.passive_child];
  CHECK(passive.vertex_mask == 0b110);
  CHECK(passive.root == 1);
  CHECK(plan.subtemplates[passive.active_child].vertex_mask == 0b010);
  CHECK(plan.subtemplates[passive.passive_child].vertex_mask == 0b100);
}

TEST_CASE("partition_template: single vertex") {
  PartitionPlan plan = partition_template(testutil::path_template(1));
  CHECK(plan.subtemplates.size() == 1);
  CHECK(plan.schedule.size() == 1);
  CHECK(plan.subtemplates[plan.top_index].is_leaf());
}

TEST_CASE("partition_template: star cuts highest-labeled leaf first") {
  PartitionPlan plan = partition_template(testutil::star_template(3));
  REQUIRE(plan.subtemplates.size() == 7);  // four leaves, three composites
  const auto& top = plan.subtemplates[plan.top_index];
  CHECK(top.cut_neighbor == 3);
  int mid = find_entry(plan, 0b0111);
  REQUIRE(mid >= 0);
  CHECK(plan.subtemplates[mid].cut_neighbor == 2);
  int low = find_entry(plan, 0b0011);
  REQUIRE(low >= 0);
  CHECK(plan.subtemplates[low].cut_neighbor == 1);
}

TEST_CASE("partition plans: random trees satisfy all plan invariants") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 50; ++i) {
    uint32_t t = 1 + rng() % 10;
    TemplateTree tpl = testutil::random_tree(t, rng);
    PartitionPlan plan = partition_template(tpl);  // validate() runs inside
    // leaf vertex sets partition V(T)
    uint32_t leaf_union = 0;
    int leaves = 0;
    for (const auto& s : plan.subtemplates) {
      if (s.is_leaf()) {
        CHECK((leaf_union & s.vertex_mask) == 0);
        leaf_union |= s.vertex_mask;
        ++leaves;
      }
    }
    CHECK(leaf_union == (1u << t) - 1);
    CHECK(leaves == static_cast<int>(t));
    // determinism: repeated calls give structurally identical plans
    PartitionPlan again = partition_template(tpl);
    REQUIRE(again.subtemplates.size() == plan.subtemplates.size());
    for (size_t j = 0; j < plan.subtemplates.size(); ++j) {
      CHECK(again.subtemplates[j].vertex_mask ==
            plan.subtemplates[j].vertex_mask);
      CHECK(again.subtemplates[j].root == plan.subtemplates[j].root);
    }
    CHECK(again.schedule == plan.schedule);
  }
}

TEST_CASE("count_automorphisms: named shapes") {
  CHECK(count_automorphisms(testutil::path_template(3)) == 2);
  CHECK(count_automorphisms(testutil::star_template(3)) == 6);
  CHECK(count_automorphisms(testutil::path_template(1)) == 1);
  CHECK(count_automorphisms(testutil::star_template(3)) ==
        testutil::brute_force_automorphisms(testutil::star_template(3)));
}

TEST_CASE("count_automorphisms: matches permutation brute force, t <= 8") {
  std::mt19937 rng(31337);
  for (int i = 0; i < 60; ++i) {
    uint32_t t = 2 + rng() % 7;
    TemplateTree tpl = testutil::random_tree(t, rng);
    CHECK(count_automorphisms(tpl) ==
          testutil::brute_force_automorphisms(tpl));
  }
}
