#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subcount/bench.hpp"
#include "subcount/bruteforce.hpp"
#include "subcount/colorcount.hpp"
#include "subcount/graph.hpp"
#include "subcount/partition.hpp"
#include "subcount/partitioned.hpp"
#include "subcount/template_tree.hpp"

namespace py = pybind11;
using namespace subcount;

PYBIND11_MODULE(_subcount, m) {
  m.doc() = "color-coding tree template counting";

  py::class_<Graph>(m, "Graph")
      .def_static("from_edges",
                  [](uint32_t n,
                     std::vector<std::pair<uint32_t, uint32_t>> edges) {
                    return Graph::from_edges(n, std::move(edges));
                  },
                  py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("neighbors",
           [](const Graph& g, uint32_t v) {
             auto nb = g.neighbors(v);
             return std::vector<uint32_t>(nb.begin(), nb.end());
           })
      .def("degree", &Graph::degree)
      .def("validate", &Graph::validate);

  m.def("load_edge_list", [](const std::string& path) {
    LoadResult r = load_edge_list(path);
    return py::make_tuple(std::move(r.graph), r.dropped);
  });
  m.def("save_edge_list", &save_edge_list);

  py::class_<DegreeStats>(m, "DegreeStats")
      .def_readonly("min_degree", &DegreeStats::min_degree)
      .def_readonly("max_degree", &DegreeStats::max_degree)
      .def_readonly("mean_degree", &DegreeStats::mean_degree)
      .def_readonly("isolated", &DegreeStats::isolated);
  m.def("degree_stats", &degree_stats);

  m.def(
      "rmat_generate",
      [](int scale, uint64_t edges, double a, double b, double c, double d,
         uint64_t seed) {
        return rmat_generate({scale, edges, a, b, c, d, seed});
      },
      py::arg("scale"), py::arg("edges"), py::arg("a") = 0.57,
      py::arg("b") = 0.19, py::arg("c") = 0.19, py::arg("d") = 0.05,
      py::arg("seed") = 0);

  py::class_<TemplateTree>(m, "TemplateTree")
      .def_static("from_edges",
                  [](uint32_t t,
                     std::vector<std::pair<uint32_t, uint32_t>> edges) {
                    return TemplateTree::from_edges(t, std::move(edges));
                  },
                  py::arg("t"), py::arg("edges"))
      .def_property_readonly("t", &TemplateTree::vertex_count)
      .def_property_readonly("edges", &TemplateTree::edges);
  m.def("parse_template", &parse_template);
  m.def("count_automorphisms", &count_automorphisms);

  py::class_<Subtemplate>(m, "Subtemplate")
      .def_readonly("vertex_mask", &Subtemplate::vertex_mask)
      .def_readonly("root", &Subtemplate::root)
      .def_readonly("active_child", &Subtemplate::active_child)
      .def_readonly("passive_child", &Subtemplate::passive_child)
      .def_readonly("cut_neighbor", &Subtemplate::cut_neighbor);
  py::class_<PartitionPlan>(m, "PartitionPlan")
      .def_readonly("subtemplates", &PartitionPlan::subtemplates)
      .def_readonly("schedule", &PartitionPlan::schedule)
      .def_readonly("top_index", &PartitionPlan::top_index);
  m.def("partition_template", &partition_template);

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("value", &Estimate::value)
      .def_readonly("per_iteration", &Estimate::per_iteration)
      .def_readonly("stderr", &Estimate::stderr_value)
      .def_readonly("iterations", &Estimate::iterations)
      .def_readonly("seed", &Estimate::seed);

  m.def("estimate", &estimate, py::arg("graph"), py::arg("template"),
        py::arg("iterations") = 1, py::arg("threads") = 1,
        py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>());

  py::class_<StepMessages>(m, "StepMessages")
      .def_readonly("plan_index", &StepMessages::plan_index)
      .def_readonly("rows", &StepMessages::rows)
      .def_readonly("bytes", &StepMessages::bytes);
  py::class_<DistributedResult>(m, "DistributedResult")
      .def_readonly("estimate", &DistributedResult::estimate)
      .def_readonly("messages_per_step",
                    &DistributedResult::messages_per_step);
  m.def("distributed_estimate", &distributed_estimate, py::arg("graph"),
        py::arg("template"), py::arg("workers"), py::arg("iterations") = 1,
        py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>());

  m.def("brute_force_embeddings", &brute_force_embeddings);
  m.def("estimate_peak_memory",
        [](const Graph& g, const TemplateTree& tpl) {
          return estimate_peak_memory(g.vertex_count(),
                                      partition_template(tpl));
        });

  py::class_<ScalingRow>(m, "ScalingRow")
      .def_readonly("threads", &ScalingRow::threads)
      .def_readonly("wall_seconds", &ScalingRow::wall_seconds)
      .def_readonly("speedup", &ScalingRow::speedup)
      .def_readonly("efficiency", &ScalingRow::efficiency)
      .def_readonly("peak_mem_bytes", &ScalingRow::peak_mem_bytes)
      .def_readonly("checksum", &ScalingRow::checksum);
  py::class_<ScalingReport>(m, "ScalingReport")
      .def_readonly("rows", &ScalingReport::rows);
  m.def("run_scaling", &run_scaling, py::arg("graph"), py::arg("template"),
        py::arg("thread_list"), py::arg("repeat") = 3, py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("efficiency_series", &efficiency_series);
}
