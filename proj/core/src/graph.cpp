#include "aalpha/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iterator>
#include <numeric>
#include <queue>
#include <sstream>

namespace aalpha {

Graph::Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> pairs,
             std::string label)
    : n_(n), adj_(n), label_(std::move(label)) {
  if (n == 0) throw ParameterError("graph must have at least one vertex");
  edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n)
      throw ParameterError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                           "} out of range for n=" + std::to_string(n));
    if (a == b) throw ParameterError("self-loop at vertex " + std::to_string(a));
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::with_label(std::string label) const {
  Graph g(*this);
  g.label_ = std::move(label);
  return g;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (std::size_t v = 0; v < n_; ++v) d[v] = adj_[v].size();
  return d;
}

namespace {

constexpr std::pair<Family, std::string_view> kFamilies[] = {
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::cycle, "cycle"},
    {Family::path, "path"},
    {Family::petersen, "petersen"},
    {Family::shrikhande, "shrikhande"},
    {Family::rook4x4, "rook4x4"},
};

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

void expect_params(std::string_view family, const std::vector<long>& params,
                   std::size_t count) {
  if (params.size() != count)
    throw ParameterError(std::string(family) + " expects " + std::to_string(count) +
                         " parameter(s), got " + std::to_string(params.size()));
}

std::size_t positive(std::string_view family, long v, long min) {
  if (v < min)
    throw ParameterError(std::string(family) + " parameter must be >= " +
                         std::to_string(min) + ", got " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

}  // namespace

Family parse_family(std::string_view name) {
  for (auto [f, s] : kFamilies)
    if (s == name) return f;
  throw ParameterError("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  for (auto [g, s] : kFamilies)
    if (g == f) return s;
  return "?";
}

Graph generate(Family family, const std::vector<long>& params) {
  const auto name = family_name(family);
  Pairs e;
  switch (family) {
    case Family::complete: {
      expect_params(name, params, 1);
      const auto n = positive(name, params[0], 1);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
      return Graph(n, std::move(e), "K" + std::to_string(n));
    }
    case Family::complete_bipartite: {
      expect_params(name, params, 2);
      const auto p = positive(name, params[0], 1);
      const auto q = positive(name, params[1], 1);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) e.emplace_back(i, p + j);
      return Graph(p + q, std::move(e), "K" + std::to_string(p) + "," + std::to_string(q));
    }
    case Family::cycle: {
      expect_params(name, params, 1);
      const auto n = positive(name, params[0], 3);
      for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
      return Graph(n, std::move(e), "C" + std::to_string(n));
    }
    case Family::path: {
      expect_params(name, params, 1);
      const auto n = positive(name, params[0], 1);
      for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      return Graph(n, std::move(e), "P" + std::to_string(n));
    }
    case Family::petersen: {
      expect_params(name, params, 0);
      for (std::size_t i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
      }
      return Graph(10, std::move(e), "Petersen");
    }
    case Family::shrikhande: {
      expect_params(name, params, 0);
      const int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
          for (const auto& s : steps) {
            const std::size_t c = (a + s[0]) % 4;
            const std::size_t d = (b + s[1]) % 4;
            e.emplace_back(4 * a + b, 4 * c + d);
          }
      return Graph(16, std::move(e), "Shrikhande");
    }
    case Family::rook4x4: {
      expect_params(name, params, 0);
      for (std::size_t u = 0; u < 16; ++u)
        for (std::size_t v = u + 1; v < 16; ++v)
          if (u / 4 == v / 4 || u % 4 == v % 4) e.emplace_back(u, v);
      return Graph(16, std::move(e), "Rook4x4");
    }
  }
  throw ParameterError("unknown graph family");
}

namespace {

bool parse_index(std::string_view tok, std::size_t& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  Pairs pairs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (!n) {
      std::size_t v = 0;
      if (toks.size() != 1 || !parse_index(toks[0], v))
        throw ParseError(line_no, "expected vertex count");
      if (v == 0) throw ParseError(line_no, "vertex count must be positive");
      n = v;
      continue;
    }
    std::size_t a = 0, b = 0;
    if (toks.size() != 2 || !parse_index(toks[0], a) || !parse_index(toks[1], b))
      throw ParseError(line_no, "expected 'i j' vertex pair");
    if (a >= *n || b >= *n)
      throw ParseError(line_no, "vertex index out of range [0," + std::to_string(*n) + ")");
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    pairs.emplace_back(a, b);
  }
  if (!n) throw ParseError(line_no == 0 ? 1 : line_no, "missing vertex count");
  return Graph(*n, std::move(pairs));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

DenseMatrix<int> adjacency_matrix(const Graph& g) {
  DenseMatrix<int> a(g.order(), g.order());
  for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1;
  return a;
}

DenseMatrix<int> degree_matrix(const Graph& g) {
  DenseMatrix<int> d(g.order(), g.order());
  for (std::size_t v = 0; v < g.order(); ++v) d(v, v) = static_cast<int>(g.degree(v));
  return d;
}

DenseMatrix<int> incidence_matrix(const Graph& g) {
  DenseMatrix<int> r(g.order(), g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    r(g.edges()[j].u, j) = 1;
    r(g.edges()[j].v, j) = 1;
  }
  return r;
}

Graph complement(const Graph& g) {
  Pairs e;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) e.emplace_back(u, v);
  return Graph(g.order(), std::move(e), g.label().empty() ? "" : "co-" + g.label());
}

std::optional<std::size_t> regularity(const Graph& g) {
  const auto r = g.degree(0);
  for (std::size_t v = 1; v < g.order(); ++v)
    if (g.degree(v) != r) return std::nullopt;
  return r;
}

bool is_connected(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    for (auto v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
  }
  return count == g.order();
}

std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  // 2-colour by BFS; K_{p,q} iff bipartite with every cross pair adjacent.
  std::vector<int> side(g.order(), -1);
  std::queue<std::size_t> q;
  side[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    for (auto v : g.neighbors(u)) {
      if (side[v] < 0) {
        side[v] = 1 - side[u];
        q.push(v);
      } else if (side[v] == side[u]) {
        return std::nullopt;
      }
    }
  }
  const auto p = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
  const auto qn = g.order() - p;
  if (g.size() != p * qn) return std::nullopt;
  return std::make_pair(std::min(p, qn), std::max(p, qn));
}

std::vector<std::size_t> k4_profile(const Graph& g) {
  std::vector<std::size_t> count(g.order(), 0);
  for (const auto& e : g.edges()) {
    // common neighbours of u and v above v keep each 4-clique counted once
    std::vector<std::size_t> common;
    std::set_intersection(g.neighbors(e.u).begin(), g.neighbors(e.u).end(),
                          g.neighbors(e.v).begin(), g.neighbors(e.v).end(),
                          std::back_inserter(common));
    for (std::size_t a = 0; a < common.size(); ++a) {
      if (common[a] <= e.v) continue;
      for (std::size_t b = a + 1; b < common.size(); ++b)
        if (g.has_edge(common[a], common[b])) {
          for (auto w : {e.u, e.v, common[a], common[b]}) ++count[w];
        }
    }
  }
  std::sort(count.begin(), count.end());
  return count;
}

}  // namespace aalpha
