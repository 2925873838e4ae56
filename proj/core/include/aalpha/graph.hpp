#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aalpha/matrix.hpp"

namespace aalpha {

struct Edge {
  std::size_t u;  // u < v
  std::size_t v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph, immutable after construction. Edges are kept in
// lexicographic (u, v) order with u < v; that order fixes the column order
// of the incidence matrix and the vertex order of subdivision vertices.
class Graph {
 public:
  // Normalizes each pair to (min, max), drops duplicates and sorts.
  // Throws ParameterError on a self-loop or an out-of-range endpoint.
  Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> pairs,
        std::string label = {});

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::string& label() const noexcept { return label_; }
  Graph with_label(std::string label) const;

  bool has_edge(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;  // sorted
  std::string label_;
};

enum class Family { complete, complete_bipartite, cycle, path, petersen, shrikhande, rook4x4 };

// Throws ParameterError for unknown names.
Family parse_family(std::string_view name);
std::string_view family_name(Family f);

// Canonical vertex orderings:
//   complete n          0..n-1
//   complete_bipartite  part of size p is 0..p-1, part q is p..p+q-1
//   cycle n             i ~ i+1 (mod n), n >= 3
//   path n              i ~ i+1, n >= 1
//   petersen            outer 5-cycle 0..4, spokes i ~ i+5, inner i+5 ~ (i+2)%5+5
//   shrikhande          Z4 x Z4, vertex 4a+b, differences +-(1,0), +-(0,1), +-(1,1)
//   rook4x4             4x4 grid, vertex 4i+j, same row or column (line graph of K_{4,4})
Graph generate(Family family, const std::vector<long>& params = {});

// Edge-list text: first line n, then one "i j" pair per line. Blank lines
// are ignored. Throws ParseError carrying the offending line number.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

DenseMatrix<int> adjacency_matrix(const Graph& g);
DenseMatrix<int> degree_matrix(const Graph& g);
// n x m, column j is the j-th edge in lexicographic order.
DenseMatrix<int> incidence_matrix(const Graph& g);

Graph complement(const Graph& g);

// r when every vertex has degree r; nullopt otherwise. K_1 is 0-regular.
std::optional<std::size_t> regularity(const Graph& g);
bool is_connected(const Graph& g);

// (p, q) with p <= q when g is K_{p,q} (up to vertex relabelling).
std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g);

// Cheap isomorphism invariant: for each vertex, the number of 4-cliques
// containing it; returned sorted. Distinguishes the Shrikhande graph
// (clique number 3) from the 4x4 rook graph (rows and columns are K_4s).
std::vector<std::size_t> k4_profile(const Graph& g);

}  // namespace aalpha
