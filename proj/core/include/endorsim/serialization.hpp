#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "endorsim/endorsement_set.hpp"
#include "endorsim/graph.hpp"

namespace endorsim {

/// A base graph with optional endorsement digraphs.
///
/// Text container (UTF-8, LF line endings, ids zero-based):
///
///     #nodes N
///     #edges M
///     #skills K
///     e u v        M lines, u < v, sorted
///     a k u v      arc u -> v in skill k, sorted by (k, u, v)
///
/// Encoding is canonical: equal structures encode to identical bytes.
/// A dataset with K = 0 carries no endorsement set.
struct Dataset {
  std::shared_ptr<const Graph> graph;
  std::optional<EndorsementSet> endorsements;
};

std::string encode(const Graph& graph, const EndorsementSet* endorsements = nullptr);
void encode(std::ostream& out, const Graph& graph, const EndorsementSet* endorsements = nullptr);

// Throws ParseError (with line number) on malformed input, including arcs
// that are not base edges.
Dataset decode(std::string_view text);
Dataset decode(std::istream& in);

Dataset read_dataset(const std::filesystem::path& path);
void write_dataset(const std::filesystem::path& path, const Graph& graph,
                   const EndorsementSet* endorsements = nullptr);

}  // namespace endorsim
