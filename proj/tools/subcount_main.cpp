// subcount: color-coding tree-template counting engine and benchmark CLI.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subcount/bench.hpp"
#include "subcount/bruteforce.hpp"
#include "subcount/colorcount.hpp"
#include "subcount/graph.hpp"
#include "subcount/partition.hpp"
#include "subcount/partitioned.hpp"
#include "subcount/template_tree.hpp"

namespace {

using namespace subcount;

struct Output {
  std::string format = "text";  // text | json
  std::string path = "-";

  void write(const nlohmann::json& j, const std::string& text) const {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (path != "-") {
      file.open(path);
      if (!file) throw std::runtime_error("cannot write output: " + path);
      out = &file;
    }
    if (format == "json")
      *out << j.dump(2) << '\n';
    else
      *out << text;
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", out.path, "Output path, '-' for stdout");
}

nlohmann::json estimate_json(const Estimate& e) {
  return {{"value", e.value},
          {"stderr", e.stderr_value},
          {"iterations", e.iterations},
          {"seed", e.seed},
          {"per_iteration", e.per_iteration}};
}

int run_cli(int argc, char** argv) {
  CLI::App app{"color-coding tree template counting"};
  app.require_subcommand(1);

  std::string graph_path, template_path;
  uint64_t seed = 0;
  int iterations = 1, threads = 1, workers = 0;
  Output out;

  auto* count = app.add_subcommand("count", "estimate template occurrences");
  count->add_option("--graph", graph_path, "graph edge list")
      ->required()
      ->check(CLI::ExistingFile);
  count->add_option("--template", template_path, "template edge list")
      ->required()
      ->check(CLI::ExistingFile);
  count->add_option("--iterations", iterations, "color-coding iterations")
      ->check(CLI::PositiveNumber);
  count->add_option("--threads", threads)->check(CLI::PositiveNumber);
  count->add_option("--workers", workers, "simulated workers (0 = off)");
  count->add_option("--seed", seed);
  add_output_flags(count, out);

  auto* exact = app.add_subcommand("exact", "brute-force exact count");
  exact->add_option("--graph", graph_path)->required()
      ->check(CLI::ExistingFile);
  exact->add_option("--template", template_path)->required()
      ->check(CLI::ExistingFile);
  add_output_flags(exact, out);

  RmatParams rmat;
  std::string rmat_out;
  auto* rmat_cmd = app.add_subcommand("rmat", "generate an RMAT graph");
  rmat_cmd->add_option("--scale", rmat.scale, "n = 2^scale")
      ->required()
      ->check(CLI::PositiveNumber);
  rmat_cmd->add_option("--edges", rmat.edges, "candidate edges")->required();
  rmat_cmd->add_option("--a", rmat.a);
  rmat_cmd->add_option("--b", rmat.b);
  rmat_cmd->add_option("--c", rmat.c);
  rmat_cmd->add_option("--d", rmat.d);
  rmat_cmd->add_option("--seed", rmat.seed);
  rmat_cmd->add_option("--out", rmat_out, "output edge-list path")->required();

  std::vector<int> thread_list{1};
  int repeat = 3;
  auto* bench = app.add_subcommand("bench", "thread-scaling benchmark");
  bench->add_option("--graph", graph_path)->required()
      ->check(CLI::ExistingFile);
  bench->add_option("--template", template_path)->required()
      ->check(CLI::ExistingFile);
  bench->add_option("--threads", thread_list, "ascending thread counts");
  bench->add_option("--repeat", repeat)->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed);
  out.format = "text";
  bench->add_option("--format", out.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  bench->add_option("--out", out.path, "Output path, '-' for stdout");

  auto* mem = app.add_subcommand("mem", "peak DP table memory estimate");
  mem->add_option("--graph", graph_path)->required()
      ->check(CLI::ExistingFile);
  mem->add_option("--template", template_path)->required()
      ->check(CLI::ExistingFile);
  add_output_flags(mem, out);

  auto* pinfo = app.add_subcommand("partition-info",
                                   "dump the template partition plan");
  pinfo->add_option("--template", template_path)->required()
      ->check(CLI::ExistingFile);
  add_output_flags(pinfo, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad flags and validation failures exit 2
  }

  if (count->parsed()) {
    Graph g = load_edge_list(graph_path).graph;
    TemplateTree tpl = parse_template(template_path);
    Estimate est;
    nlohmann::json extra;
    if (workers > 0) {
      DistributedResult r =
          distributed_estimate(g, tpl, workers, iterations, seed);
      est = r.estimate;
      nlohmann::json steps = nlohmann::json::array();
      for (const auto& m : r.messages_per_step)
        steps.push_back({{"composite", m.plan_index},
                         {"rows", m.rows},
                         {"bytes", m.bytes}});
      extra["workers"] = workers;
      extra["messages_per_step"] = steps;
    } else {
      est = estimate(g, tpl, iterations, threads, seed);
    }
    nlohmann::json j = estimate_json(est);
    for (auto& [key, val] : extra.items()) j[key] = val;
    char text[128];
    std::snprintf(text, sizeof(text), "estimate %.17g stderr %.17g\n",
                  est.value, est.stderr_value);
    out.write(j, text);
  } else if (exact->parsed()) {
    Graph g = load_edge_list(graph_path).graph;
    TemplateTree tpl = parse_template(template_path);
    uint64_t emb = brute_force_embeddings(g, tpl);
    uint64_t sigma = count_automorphisms(tpl);
    double occ = static_cast<double>(emb) / static_cast<double>(sigma);
    nlohmann::json j{{"embeddings", emb},
                     {"automorphisms", sigma},
                     {"occurrences", occ}};
    char text[128];
    std::snprintf(text, sizeof(text), "embeddings=%llu occurrences=%.17g\n",
                  static_cast<unsigned long long>(emb), occ);
    out.write(j, text);
  } else if (rmat_cmd->parsed()) {
    Graph g = rmat_generate(rmat);
    save_edge_list(g, rmat_out);
    std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
  } else if (bench->parsed()) {
    Graph g = load_edge_list(graph_path).graph;
    TemplateTree tpl = parse_template(template_path);
    ScalingReport report = run_scaling(g, tpl, thread_list, repeat, seed);
    emit_report(report, out.format == "text" ? "csv" : out.format, out.path);
  } else if (mem->parsed()) {
    Graph g = load_edge_list(graph_path).graph;
    TemplateTree tpl = parse_template(template_path);
    PartitionPlan plan = partition_template(tpl);
    uint64_t bytes = estimate_peak_memory(g.vertex_count(), plan);
    nlohmann::json j{{"peak_bytes", bytes}};
    out.write(j, "peak_bytes=" + std::to_string(bytes) + "\n");
  } else if (pinfo->parsed()) {
    TemplateTree tpl = parse_template(template_path);
    PartitionPlan plan = partition_template(tpl);
    nlohmann::json subs = nlohmann::json::array();
    std::string text;
    for (size_t i = 0; i < plan.subtemplates.size(); ++i) {
      const auto& s = plan.subtemplates[i];
      subs.push_back({{"vertex_mask", s.vertex_mask},
                      {"root", s.root},
                      {"active_child", s.active_child},
                      {"passive_child", s.passive_child},
                      {"cut_neighbor", s.cut_neighbor}});
      text += "sub " + std::to_string(i) + ": mask=" +
              std::to_string(s.vertex_mask) + " root=" +
              std::to_string(s.root);
      if (!s.is_leaf())
        text += " active=" + std::to_string(s.active_child) + " passive=" +
                std::to_string(s.passive_child) + " cut=(" +
                std::to_string(s.root) + "," +
                std::to_string(s.cut_neighbor) + ")";
      text += "\n";
    }
    nlohmann::json j{{"subtemplates", subs},
                     {"schedule", plan.schedule},
                     {"top_index", plan.top_index}};
    out.write(j, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
