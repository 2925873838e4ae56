#pragma once

#include "aalpha/graph.hpp"

namespace aalpha {

// Central graph C(G): every edge of G subdivided once, and every pair of
// vertices that is non-adjacent in G joined. Vertex order: originals
// 0..n-1, then one subdivision vertex per edge in lexicographic edge order.
// n + m vertices, m + n(n-1)/2 edges.
Graph central_graph(const Graph& g);

// Central vertex join of g1 and g2: C(g1) followed by a copy of g2, with
// every original vertex of g1 joined to every vertex of g2. Vertex order:
// g1 originals, g1 subdivisions, g2 vertices.
// n1(1 + n2) + m1 vertices, 2 m1 + n1 (n2 + m2) edges.
Graph central_vertex_join(const Graph& g1, const Graph& g2);

}  // namespace aalpha
