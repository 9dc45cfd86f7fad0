#include "endorsim/sampling.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "endorsim/error.hpp"
#include "endorsim/random.hpp"

namespace endorsim {

Sample bfs_sample(const Graph& g, const EndorsementSet* endorsements, const SampleSpec& spec) {
  if (g.vertex_count() == 0) throw ValidationError("cannot sample an empty graph");
  if (spec.target_size == 0) throw ValidationError("sample size must be at least 1");
  if (endorsements && !(endorsements->base() == g)) {
    throw ValidationError("endorsement set does not annotate the sampled graph");
  }

  Rng rng(spec.seed);
  Vertex seed_vertex = 0;
  if (spec.seed_vertex) {
    seed_vertex = *spec.seed_vertex;
    if (!g.contains(seed_vertex)) throw UnknownVertexError("unknown seed vertex " + std::to_string(seed_vertex));
  } else {
    seed_vertex = static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, g.vertex_count() - 1)(rng));
  }

  constexpr Vertex kUnvisited = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> label(g.vertex_count(), kUnvisited);
  std::vector<Vertex> order{seed_vertex};
  label[seed_vertex] = 0;

  std::vector<Vertex> level{seed_vertex};
  std::vector<Vertex> next;
  while (order.size() < spec.target_size && !level.empty()) {
    next.clear();
    for (Vertex u : level) {
      for (Vertex w : g.neighbors(u)) {
        if (label[w] == kUnvisited) next.push_back(w);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::shuffle(next.begin(), next.end(), rng);
    std::size_t taken = 0;
    for (; taken < next.size() && order.size() < spec.target_size; ++taken) {
      label[next[taken]] = static_cast<Vertex>(order.size());
      order.push_back(next[taken]);
    }
    next.resize(taken);
    level.swap(next);
  }

  auto sub = std::make_shared<Graph>(order.size());
  for (Vertex u : order) {
    for (Vertex w : g.neighbors(u)) {
      if (label[w] != kUnvisited && u < w) sub->add_edge(label[u], label[w]);
    }
  }

  Sample out{sub, std::nullopt, order};
  if (endorsements) {
    EndorsementSet restricted(sub, endorsements->skill_count());
    for (Skill s = 0; s < endorsements->skill_count(); ++s) {
      for (const Arc& a : endorsements->arcs(s)) {
        if (label[a.from] != kUnvisited && label[a.to] != kUnvisited) {
          restricted.add_arc(s, label[a.from], label[a.to]);
        }
      }
    }
    out.endorsements = std::move(restricted);
  }
  return out;
}

PatternMatrix estimate_pattern(const Sample& sample) {
  if (!sample.endorsements) return PatternMatrix{};
  return compute_pattern_matrix(*sample.endorsements);
}

}  // namespace endorsim
