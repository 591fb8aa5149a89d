#include "gpcops/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "gpcops/errors.hpp"

namespace gpcops {

void validate(const GpParams& p) {
  if (p.n < 5 || p.k < 1 || 2 * p.k >= p.n) {
    throw PreconditionError("GP(" + std::to_string(p.n) + "," + std::to_string(p.k) +
                            ") requires n >= 5 and 1 <= k < n/2");
  }
}

void validate(const IGraphParams& p) {
  if (p.n < 5 || p.j < 1 || p.k < 1 || 2 * p.j >= p.n || 2 * p.k >= p.n) {
    throw PreconditionError("I(" + std::to_string(p.n) + "," + std::to_string(p.j) + "," +
                            std::to_string(p.k) + ") requires n >= 5 and 0 < j,k < n/2");
  }
}

Graph Graph::from_edges(int n_vertices, std::span<const Edge> edges) {
  if (n_vertices < 0) throw PreconditionError("negative vertex count");
  std::vector<std::vector<Vertex>> adj(n_vertices);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices) {
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range");
    }
    if (u == v) throw PreconditionError("self-loop at " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.offsets_.assign(1, 0);
  g.offsets_.reserve(n_vertices + 1);
  for (Vertex v = 0; v < n_vertices; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw PreconditionError("duplicate edge at vertex " + std::to_string(v));
    }
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    g.offsets_.push_back(static_cast<int>(g.targets_.size()));
  }
  return g;
}

int Graph::min_degree() const {
  int best = size() == 0 ? 0 : kInfinity;
  for (Vertex v = 0; v < size(); ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < size(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<VertexLabel> Graph::label(Vertex v) const {
  if (!params_ || !contains(v)) return std::nullopt;
  int n = params_->n;
  return v < n ? VertexLabel{Rim::A, v} : VertexLabel{Rim::B, v - n};
}

std::string Graph::name() const {
  if (!params_) return "graph(" + std::to_string(size()) + ")";
  const auto& p = *params_;
  if (family_ == Family::kGeneralizedPetersen) {
    return "GP(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")";
  }
  return "I(" + std::to_string(p.n) + "," + std::to_string(p.j) + "," + std::to_string(p.k) + ")";
}

int Graph::component_count() const {
  std::vector<char> seen(size(), 0);
  std::vector<Vertex> stack;
  int count = 0;
  for (Vertex s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return count;
}

namespace {

std::vector<Edge> family_edges(int n, int j, int k) {
  std::vector<Edge> edges;
  edges.reserve(3 * n);
  auto add = [&](Vertex u, Vertex v) {
    Edge e = std::minmax(u, v);
    edges.push_back(e);
  };
  for (int i = 0; i < n; ++i) {
    add(i, (i + j) % n);
    add(i, n + i);
    add(n + i, n + (i + k) % n);
  }
  // (a_i, a_{i+j}) and (a_{i+j}, a_{i+2j}) coincide only when 2j == n, which
  // the parameter domain excludes; still dedupe so from_edges stays strict.
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

Graph build_igraph(const IGraphParams& params) {
  validate(params);
  auto edges = family_edges(params.n, params.j, params.k);
  Graph g = Graph::from_edges(2 * params.n, edges);
  g.family_ = params.j == 1 ? Family::kGeneralizedPetersen : Family::kIGraph;
  g.params_ = params;
  return g;
}

Graph build_gp(const GpParams& params) {
  validate(params);
  return build_igraph({params.n, 1, params.k});
}

Graph build_cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(std::minmax(i, (i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph build_path(int n) {
  if (n < 1) throw PreconditionError("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

bool is_connected_igraph(const IGraphParams& params) {
  validate(params);
  return std::gcd(std::gcd(params.n, params.j), params.k) == 1;
}

std::vector<int> distances(const Graph& g, Vertex source) {
  if (!g.contains(source)) {
    throw PreconditionError("invalid vertex id " + std::to_string(source));
  }
  std::vector<int> dist(g.size(), kInfinity);
  std::vector<Vertex> queue{source};
  queue.reserve(g.size());
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kInfinity) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<int> distance_matrix(const Graph& g) {
  const int n = g.size();
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = distances(g, s);
    std::copy(row.begin(), row.end(), out.begin() + static_cast<std::size_t>(s) * n);
  }
  return out;
}

// BFS from every root; a non-tree edge (u,v) closes a walk of length
// d(u)+d(v)+1 which contains a cycle, and the shortest cycle is found exactly
// from any of its vertices.
int girth(const Graph& g) {
  const int n = g.size();
  int best = kInfinity;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kInfinity);
    queue.assign(1, root);
    dist[root] = 0;
    parent[root] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex v : g.neighbors(u)) {
        if (dist[v] == kInfinity) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best;
}

BoundReport degree_girth_bounds(int min_degree, int girth_value) {
  BoundReport r;
  r.min_degree = min_degree;
  r.girth = girth_value;
  const int delta = min_degree;
  r.aigner_fromme_lb = r.girth >= 5 ? std::max(1, delta) : 1;
  if (delta >= 2 && r.girth != kInfinity) {
    for (int t = 1; 8 * t - 3 <= r.girth; ++t) {
      long long power = 1;
      for (int i = 0; i < t; ++i) power *= (delta - 1);
      r.frankl_lb = static_cast<int>(std::max<long long>(r.frankl_lb, power + 1));
      r.frankl_t = t;
    }
  }
  return r;
}

BoundReport lower_bounds(const Graph& g) {
  if (g.size() == 0) throw PreconditionError("lower_bounds on empty graph");
  BoundReport r = degree_girth_bounds(g.min_degree(), girth(g));
  if (g.family() == Family::kGeneralizedPetersen) {
    r.upper_bound = 4;
  } else if (g.family() == Family::kIGraph && g.connected()) {
    r.upper_bound = 5;
  }
  return r;
}

std::vector<int> subgraph_distance_matrix(const Subgraph& sub) {
  std::vector<Vertex> ids = sub.vertices;
  std::sort(ids.begin(), ids.end());
  auto local = [&](Vertex v) {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v) {
      throw PreconditionError("subgraph edge endpoint " + std::to_string(v) +
                              " not among subgraph vertices");
    }
    return static_cast<Vertex>(it - ids.begin());
  };
  std::vector<Edge> local_edges;
  for (auto [u, v] : sub.edges) local_edges.emplace_back(local(u), local(v));
  Graph h = Graph::from_edges(static_cast<int>(ids.size()), local_edges);
  auto sorted_matrix = distance_matrix(h);
  // Re-index from sorted order back to the caller's vertex order.
  const std::size_t m = sub.vertices.size();
  std::vector<int> out(m * m);
  std::vector<Vertex> pos(m);
  for (std::size_t i = 0; i < m; ++i) pos[i] = local(sub.vertices[i]);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out[i * m + j] = sorted_matrix[pos[i] * m + pos[j]];
  }
  return out;
}

bool is_isometric_subgraph(const Graph& g, const Subgraph& sub) {
  for (Vertex v : sub.vertices) {
    if (!g.contains(v)) throw PreconditionError("subgraph vertex not in graph");
  }
  for (auto [u, v] : sub.edges) {
    if (!g.has_edge(u, v)) {
      throw PreconditionError("subgraph edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") not in graph");
    }
  }
  auto inner = subgraph_distance_matrix(sub);
  const std::size_t m = sub.vertices.size();
  for (std::size_t i = 0; i < m; ++i) {
    auto outer = distances(g, sub.vertices[i]);
    for (std::size_t j = 0; j < m; ++j) {
      if (inner[i * m + j] != outer[sub.vertices[j]]) return false;
    }
  }
  return true;
}

bool is_tree(const Subgraph& sub) {
  if (sub.vertices.empty()) return false;
  if (sub.edges.size() + 1 != sub.vertices.size()) return false;
  auto d = subgraph_distance_matrix(sub);
  return std::none_of(d.begin(), d.begin() + static_cast<long>(sub.vertices.size()),
                      [](int x) { return x == kInfinity; });
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph sub;
  sub.vertices.assign(vertices.begin(), vertices.end());
  std::vector<Vertex> sorted = sub.vertices;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex u : sorted) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && std::binary_search(sorted.begin(), sorted.end(), v)) {
        sub.edges.emplace_back(u, v);
      }
    }
  }
  return sub;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long n_vertices = -1;
  long n_edges = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    if (n_vertices < 0) {
      std::string tag;
      if (!(ss >> tag) || tag != "p") fail("expected header 'p <n_vertices> <n_edges>'");
      if (!(ss >> n_vertices >> n_edges) || n_vertices < 0 || n_edges < 0) {
        fail("malformed header counts");
      }
      continue;
    }
    long u = 0;
    long v = 0;
    if (!(ss >> u >> v)) fail("expected 'u v'");
    std::string rest;
    if (ss >> rest) fail("trailing token '" + rest + "'");
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices) fail("vertex id out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n_vertices < 0) throw ParseError("missing header line");
  if (static_cast<long>(edges.size()) != n_edges) {
    throw ParseError("header declares " + std::to_string(n_edges) + " edges, found " +
                     std::to_string(edges.size()));
  }
  try {
    return Graph::from_edges(static_cast<int>(n_vertices), edges);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace gpcops
