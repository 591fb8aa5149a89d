#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gpcops {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Marks unreachable distances and the girth of a forest. Compares greater than
// every finite value, so threshold tests like `girth >= 5` need no special case.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

enum class Rim : std::uint8_t { A, B };

struct VertexLabel {
  Rim rim;
  long index;
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

struct GpParams {
  int n;
  int k;
  friend bool operator==(const GpParams&, const GpParams&) = default;
};

// Outer rim steps by j, inner rim by k. I(n,1,k) == GP(n,k).
struct IGraphParams {
  int n;
  int j;
  int k;
  friend bool operator==(const IGraphParams&, const IGraphParams&) = default;
};

void validate(const GpParams& p);
void validate(const IGraphParams& p);

enum class Family : std::uint8_t { kGeneric, kGeneralizedPetersen, kIGraph };

// Immutable undirected simple graph with contiguous ids, stored as sorted CSR
// adjacency. Family graphs use the id scheme a_i -> i, b_i -> n + i.
class Graph {
 public:
  Graph() = default;

  // Throws PreconditionError on self-loops, duplicate edges or bad ids.
  static Graph from_edges(int n_vertices, std::span<const Edge> edges);

  int size() const { return static_cast<int>(offsets_.size()) - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int min_degree() const;
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < size(); }
  // Sorted edge list with u < v.
  std::vector<Edge> edges() const;

  Family family() const { return family_; }
  // Family parameters; j == 1 for generalized Petersen graphs.
  const std::optional<IGraphParams>& family_params() const { return params_; }
  std::optional<VertexLabel> label(Vertex v) const;
  std::string name() const;

  // Number of connected components (BFS).
  int component_count() const;
  bool connected() const { return size() > 0 && component_count() == 1; }

 private:
  friend Graph build_gp(const GpParams&);
  friend Graph build_igraph(const IGraphParams&);

  std::vector<int> offsets_{0};
  std::vector<Vertex> targets_;
  Family family_ = Family::kGeneric;
  std::optional<IGraphParams> params_;
};

Graph build_gp(const GpParams& params);
Graph build_igraph(const IGraphParams& params);
Graph build_cycle(int n);
Graph build_path(int n);

// Boben-Pisanski-Zitnik: I(n,j,k) is connected iff gcd(n,j,k) == 1.
bool is_connected_igraph(const IGraphParams& params);

// Id of a_i / b_i in a family graph on n rim positions; index is reduced mod n.
inline Vertex rim_vertex(Rim rim, long index, int n) {
  long r = index % n;
  if (r < 0) r += n;
  return static_cast<Vertex>(rim == Rim::A ? r : n + r);
}

std::vector<int> distances(const Graph& g, Vertex source);
// All-pairs hop counts, row-major size()*size().
std::vector<int> distance_matrix(const Graph& g);
int girth(const Graph& g);

struct BoundReport {
  int min_degree = 0;
  int girth = kInfinity;
  int aigner_fromme_lb = 1;
  int frankl_lb = 1;
  int frankl_t = 0;  // 0 when Frankl's hypothesis fails for every t
  std::optional<int> upper_bound;
};

// Aigner-Fromme and Frankl bounds from minimum degree and girth alone.
BoundReport degree_girth_bounds(int min_degree, int girth);
BoundReport lower_bounds(const Graph& g);

struct Subgraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

// Distances measured inside the subgraph, indexed by position in `vertices`.
std::vector<int> subgraph_distance_matrix(const Subgraph& sub);

bool is_isometric_subgraph(const Graph& g, const Subgraph& sub);
bool is_tree(const Subgraph& sub);
// Subgraph induced by a vertex set.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Edge-list text format: "p <n_vertices> <n_edges>" then "u v" lines,
// '#' lines ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace gpcops
