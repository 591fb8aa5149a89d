#include <algorithm>

#include "gpcops/errors.hpp"
#include "gpcops/strategies.hpp"

namespace gpcops {

TreeGuard::TreeGuard(const Graph& g, Subgraph tree, Vertex start)
    : g_(&g), tree_(std::move(tree)), pos_(g.size(), -1), cop_(start) {
  if (!is_tree(tree_)) throw PreconditionError("guarded subgraph is not a tree");
  if (!is_isometric_subgraph(g, tree_)) throw PreconditionError("guarded tree is not isometric");
  for (std::size_t i = 0; i < tree_.vertices.size(); ++i) pos_[tree_.vertices[i]] = static_cast<int>(i);
  if (!g.contains(start) || pos_[start] < 0) throw PreconditionError("guard must start on the tree");
  tdist_ = subgraph_distance_matrix(tree_);
}

void TreeGuard::reset(Vertex cop, bool established) {
  if (!g_->contains(cop) || pos_[cop] < 0) throw PreconditionError("guard must stay on the tree");
  cop_ = cop;
  established_ = established;
}

std::vector<Vertex> TreeGuard::violators(std::span<const int> robber_dist) const {
  std::vector<Vertex> out;
  const int c = tree_pos(cop_);
  for (std::size_t i = 0; i < tree_.vertices.size(); ++i) {
    const Vertex v = tree_.vertices[i];
    if (tree_dist(c, static_cast<int>(i)) > robber_dist[v]) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GuardStatus TreeGuard::status(Vertex robber) const { return status(distances(*g_, robber)); }

GuardStatus TreeGuard::status(std::span<const int> robber_dist) const {
  GuardStatus s;
  s.cop = cop_;
  s.deficient_set = violators(robber_dist);
  s.gc_holds = s.deficient_set.empty();
  s.established = established_;
  return s;
}

GuardStatus TreeGuard::respond(Vertex robber) { return respond(distances(*g_, robber)); }

GuardStatus TreeGuard::respond(std::span<const int> robber_dist) {
  const auto bad = violators(robber_dist);
  std::vector<Vertex> component;
  if (!bad.empty()) {
    // Step to the tree neighbor toward the first violator; every violator
    // lies in the same component of T - {cop}.
    const int c = tree_pos(cop_);
    const int target = tree_pos(bad.front());
    int next = -1;
    for (Vertex u : g_->neighbors(cop_)) {
      const int p = tree_pos(u);
      if (p < 0 || tree_dist(c, p) != 1) continue;
      if (tree_dist(p, target) == tree_dist(c, target) - 1) {
        next = p;
        break;
      }
    }
    if (next < 0) throw PreconditionError("guard lost its tree");
    for (std::size_t i = 0; i < tree_.vertices.size(); ++i) {
      if (tree_dist(next, static_cast<int>(i)) < tree_dist(c, static_cast<int>(i))) {
        component.push_back(tree_.vertices[i]);
      }
    }
    std::sort(component.begin(), component.end());
    cop_ = tree_.vertices[next];
  }
  GuardStatus s = status(robber_dist);
  if (s.gc_holds) established_ = true;
  s.established = established_;
  s.component = std::move(component);
  return s;
}

}  // namespace gpcops
