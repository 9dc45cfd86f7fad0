#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "endorsim/graph.hpp"

namespace endorsim {

using Skill = std::uint32_t;

// Directed endorsement: `from` endorses `to`.
struct Arc {
  Vertex from;
  Vertex to;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// One endorsement digraph per skill over a shared, immutable base graph.
///
/// Every arc is an orientation of a base edge. A skill's digraph holds no
/// duplicate arcs, but (u, v) and (v, u) may coexist. Per-vertex in-degrees
/// are tracked so "endorsed for skill i" (positive in-degree) is O(1).
class EndorsementSet {
 public:
  EndorsementSet(std::shared_ptr<const Graph> base, std::size_t skill_count);

  const Graph& base() const noexcept { return *base_; }
  const std::shared_ptr<const Graph>& base_ptr() const noexcept { return base_; }
  std::size_t skill_count() const noexcept { return skills_.size(); }

  /// Returns false if the arc was already present. Throws ValidationError when
  /// {from, to} is not a base edge, and SelfLoopError for from == to.
  bool add_arc(Skill skill, Vertex from, Vertex to);
  bool remove_arc(Skill skill, Vertex from, Vertex to);
  bool has_arc(Skill skill, Vertex from, Vertex to) const;

  // Unordered; removal swaps the last arc into the freed slot.
  std::span<const Arc> arcs(Skill skill) const;
  std::size_t arc_count(Skill skill) const { return arcs(skill).size(); }
  std::size_t total_arcs() const noexcept;

  std::uint32_t in_degree(Skill skill, Vertex v) const;
  bool endorsed(Skill skill, Vertex v) const { return in_degree(skill, v) > 0; }

  std::vector<Arc> sorted_arcs(Skill skill) const;

  friend bool operator==(const EndorsementSet& a, const EndorsementSet& b);

 private:
  struct Digraph {
    std::vector<Arc> arcs;
    std::unordered_map<std::uint64_t, std::size_t> slot;
    std::vector<std::uint32_t> in_degree;
  };

  const Digraph& digraph(Skill skill) const;
  Digraph& digraph(Skill skill);
  static std::uint64_t key(Vertex from, Vertex to) noexcept {
    return (static_cast<std::uint64_t>(from) << 32) | to;
  }

  std::shared_ptr<const Graph> base_;
  std::vector<Digraph> skills_;
};

}  // namespace endorsim
