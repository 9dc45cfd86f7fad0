#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

namespace endorsim {

using Vertex = std::uint32_t;

// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over dense vertex ids 0..n-1.
///
/// Adjacency lists keep insertion order so that uniform neighbor draws are
/// O(1); an edge list supports uniform edge draws and degree-proportional
/// sampling (pick an edge, then an endpoint). Vertices are never removed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  static Graph complete(std::size_t vertex_count);

  Vertex add_vertex();

  /// Inserts {u, v}. Returns false when the edge was already present.
  /// Throws SelfLoopError for u == v and UnknownVertexError for ids out of range.
  bool add_edge(Vertex u, Vertex v);

  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex u) const noexcept { return u < adjacency_.size(); }

  std::span<const Vertex> neighbors(Vertex u) const;
  std::size_t degree(Vertex u) const;

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Insertion-ordered edge list.
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Edges sorted lexicographically; the canonical form used for equality and encoding.
  std::vector<Edge> sorted_edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(Vertex u) const;
  static std::uint64_t key(Vertex u, Vertex v) noexcept {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

}  // namespace endorsim
