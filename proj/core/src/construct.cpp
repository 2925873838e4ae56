#include "aalpha/construct.hpp"

#include <utility>
#include <vector>

namespace aalpha {

Graph central_graph(const Graph& g) {
  const auto n = g.order();
  std::vector<std::pair<std::size_t, std::size_t>> e;
  e.reserve(g.size() + n * (n - 1) / 2);
  for (std::size_t j = 0; j < g.size(); ++j) {
    e.emplace_back(g.edges()[j].u, n + j);
    e.emplace_back(g.edges()[j].v, n + j);
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) e.emplace_back(u, v);
  return Graph(n + g.size(), std::move(e),
               g.label().empty() ? "" : "C(" + g.label() + ")");
}

Graph central_vertex_join(const Graph& g1, const Graph& g2) {
  const Graph c = central_graph(g1);
  const auto n1 = g1.order();
  const auto offset = c.order();
  std::vector<std::pair<std::size_t, std::size_t>> e;
  e.reserve(c.size() + g2.size() + n1 * g2.order());
  for (const auto& x : c.edges()) e.emplace_back(x.u, x.v);
  for (const auto& x : g2.edges()) e.emplace_back(offset + x.u, offset + x.v);
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t w = 0; w < g2.order(); ++w) e.emplace_back(u, offset + w);
  std::string label;
  if (!g1.label().empty() && !g2.label().empty())
    label = g1.label() + " cvj " + g2.label();
  return Graph(offset + g2.order(), std::move(e), std::move(label));
}

}  // namespace aalpha
