#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "endorsim/endorsement_set.hpp"
#include "endorsim/graph.hpp"
#include "endorsim/pattern.hpp"

namespace endorsim {

struct SampleSpec {
  std::optional<Vertex> seed_vertex;  // nullopt: drawn uniformly
  std::size_t target_size = 1;
  std::uint64_t seed = 0;
};

struct Sample {
  std::shared_ptr<const Graph> graph;
  std::optional<EndorsementSet> endorsements;
  std::vector<Vertex> original_ids;  // sampled vertex k was original_ids[k]
};

/// Breadth-first sample from the seed vertex. Each level is gathered in
/// vertex-id order and then shuffled, and vertices are taken in that order
/// until target_size is reached or the seed's component is exhausted.
/// Returns the induced subgraph relabeled in visit order (seed = 0), with
/// endorsement arcs restricted to sampled pairs.
Sample bfs_sample(const Graph& g, const EndorsementSet* endorsements, const SampleSpec& spec);

/// Pattern matrix of a sample: an estimate of the population's pattern, with
/// no accuracy guarantee.
PatternMatrix estimate_pattern(const Sample& sample);

}  // namespace endorsim
