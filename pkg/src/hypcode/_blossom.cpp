// Exact maximum weighted matching on small dense graphs, via Boost.Graph.
// Exposed to Python as hypcode._blossom; see hypcode.matching for the
// weight transform that turns this into minimum-weight perfect matching.

#include <pybind11/pybind11.h>
#include <pybind11/numpy.h>
#include <pybind11/stl.h>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/maximum_weighted_matching.hpp>

#include <utility>
#include <vector>

namespace py = pybind11;

using Graph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
    boost::property<boost::edge_weight_t, long long>>;

// Edges given as parallel arrays (u, v, w); returns matched pairs (i, j)
// with i < j.  Unmatched vertices are omitted.
static std::vector<std::pair<int, int>> max_weight_matching(
    int n, py::array_t<int64_t> us, py::array_t<int64_t> vs,
    py::array_t<int64_t> ws) {
  auto u = us.unchecked<1>();
  auto v = vs.unchecked<1>();
  auto w = ws.unchecked<1>();
  if (u.shape(0) != v.shape(0) || u.shape(0) != w.shape(0))
    throw std::invalid_argument("edge arrays must have equal length");

  Graph g(n);
  for (py::ssize_t i = 0; i < u.shape(0); ++i)
    boost::add_edge(u(i), v(i), w(i), g);

  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(n);
  boost::maximum_weighted_matching(g, &mate[0]);

  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    if (mate[a] != boost::graph_traits<Graph>::null_vertex() &&
        a < static_cast<int>(mate[a]))
      out.emplace_back(a, static_cast<int>(mate[a]));
  return out;
}

PYBIND11_MODULE(_blossom, m) {
  m.doc() = "Exact blossom matching (Boost.Graph backend)";
  m.def("max_weight_matching", &max_weight_matching, py::arg("n"),
        py::arg("us"), py::arg("vs"), py::arg("ws"));
}
