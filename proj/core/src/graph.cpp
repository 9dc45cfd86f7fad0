#include "endorsim/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "endorsim/error.hpp"

namespace endorsim {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph Graph::complete(std::size_t vertex_count) {
  Graph g(vertex_count);
  for (Vertex u = 0; u < vertex_count; ++u) {
    for (Vertex v = u + 1; v < vertex_count; ++v) {
      g.add_edge(u, v);
    }
  }
  return g;
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  return static_cast<Vertex>(adjacency_.size() - 1);
}

void Graph::check_vertex(Vertex u) const {
  if (!contains(u)) {
    throw UnknownVertexError("unknown vertex " + std::to_string(u) + " (graph has " +
                             std::to_string(adjacency_.size()) + " vertices)");
  }
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw SelfLoopError("self-loop at vertex " + std::to_string(u));
  }
  if (u > v) std::swap(u, v);
  if (!edge_keys_.insert(key(u, v)).second) return false;
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  edges_.push_back({u, v});
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return edge_keys_.contains(key(u, v));
}

std::span<const Vertex> Graph::neighbors(Vertex u) const {
  check_vertex(u);
  return adjacency_[u];
}

std::size_t Graph::degree(Vertex u) const {
  check_vertex(u);
  return adjacency_[u].size();
}

std::vector<Edge> Graph::sorted_edges() const {
  std::vector<Edge> out(edges_.begin(), edges_.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (const Edge& e : a.edges_) {
    if (!b.has_edge(e.u, e.v)) return false;
  }
  return true;
}

}  // namespace endorsim
