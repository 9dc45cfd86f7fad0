#include "endorsim/endorsement_set.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "endorsim/error.hpp"

namespace endorsim {

EndorsementSet::EndorsementSet(std::shared_ptr<const Graph> base, std::size_t skill_count)
    : base_(std::move(base)) {
  if (!base_) throw ValidationError("endorsement set requires a base graph");
  skills_.resize(skill_count);
  for (auto& d : skills_) d.in_degree.assign(base_->vertex_count(), 0);
}

const EndorsementSet::Digraph& EndorsementSet::digraph(Skill skill) const {
  if (skill >= skills_.size()) {
    throw ValidationError("skill index " + std::to_string(skill) + " out of range (" +
                          std::to_string(skills_.size()) + " skills)");
  }
  return skills_[skill];
}

EndorsementSet::Digraph& EndorsementSet::digraph(Skill skill) {
  return const_cast<Digraph&>(std::as_const(*this).digraph(skill));
}

bool EndorsementSet::add_arc(Skill skill, Vertex from, Vertex to) {
  Digraph& d = digraph(skill);
  if (from == to) throw SelfLoopError("self-arc at vertex " + std::to_string(from));
  if (!base_->contains(from) || !base_->contains(to) || !base_->has_edge(from, to)) {
    throw ValidationError("arc " + std::to_string(from) + "->" + std::to_string(to) +
                          " is not an edge of the base graph");
  }
  auto [it, inserted] = d.slot.try_emplace(key(from, to), d.arcs.size());
  if (!inserted) return false;
  d.arcs.push_back({from, to});
  ++d.in_degree[to];
  return true;
}

bool EndorsementSet::remove_arc(Skill skill, Vertex from, Vertex to) {
  Digraph& d = digraph(skill);
  auto it = d.slot.find(key(from, to));
  if (it == d.slot.end()) return false;
  const std::size_t hole = it->second;
  d.slot.erase(it);
  if (hole + 1 != d.arcs.size()) {
    d.arcs[hole] = d.arcs.back();
    d.slot[key(d.arcs[hole].from, d.arcs[hole].to)] = hole;
  }
  d.arcs.pop_back();
  --d.in_degree[to];
  return true;
}

bool EndorsementSet::has_arc(Skill skill, Vertex from, Vertex to) const {
  return digraph(skill).slot.contains(key(from, to));
}

std::span<const Arc> EndorsementSet::arcs(Skill skill) const { return digraph(skill).arcs; }

std::size_t EndorsementSet::total_arcs() const noexcept {
  std::size_t n = 0;
  for (const auto& d : skills_) n += d.arcs.size();
  return n;
}

std::uint32_t EndorsementSet::in_degree(Skill skill, Vertex v) const {
  const Digraph& d = digraph(skill);
  if (v >= d.in_degree.size()) throw UnknownVertexError("unknown vertex " + std::to_string(v));
  return d.in_degree[v];
}

std::vector<Arc> EndorsementSet::sorted_arcs(Skill skill) const {
  const auto& a = digraph(skill).arcs;
  std::vector<Arc> out(a.begin(), a.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const EndorsementSet& a, const EndorsementSet& b) {
  if (a.skill_count() != b.skill_count()) return false;
  if (a.base_ != b.base_ && !(*a.base_ == *b.base_)) return false;
  for (Skill s = 0; s < a.skill_count(); ++s) {
    if (a.arc_count(s) != b.arc_count(s)) return false;
    for (const Arc& arc : a.arcs(s)) {
      if (!b.has_arc(s, arc.from, arc.to)) return false;
    }
  }
  return true;
}

}  // namespace endorsim
