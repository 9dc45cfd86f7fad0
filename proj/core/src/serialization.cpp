#include "endorsim/serialization.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <vector>

#include "endorsim/error.hpp"
#include "endorsim/io.hpp"

namespace endorsim {

void encode(std::ostream& out, const Graph& graph, const EndorsementSet* endorsements) {
  if (endorsements && &endorsements->base() != &graph && !(endorsements->base() == graph)) {
    throw ValidationError("endorsement set does not annotate the given graph");
  }
  const std::size_t skills = endorsements ? endorsements->skill_count() : 0;
  out << "#nodes " << graph.vertex_count() << '\n';
  out << "#edges " << graph.edge_count() << '\n';
  out << "#skills " << skills << '\n';
  for (const Edge& e : graph.sorted_edges()) {
    out << "e " << e.u << ' ' << e.v << '\n';
  }
  for (Skill k = 0; k < skills; ++k) {
    for (const Arc& a : endorsements->sorted_arcs(k)) {
      out << "a " << k << ' ' << a.from << ' ' << a.to << '\n';
    }
  }
}

std::string encode(const Graph& graph, const EndorsementSet* endorsements) {
  std::ostringstream out;
  encode(out, graph, endorsements);
  return std::move(out).str();
}

namespace {

class LineParser {
 public:
  explicit LineParser(std::string_view text) : text_(text) {}

  bool next() {
    if (pos_ >= text_.size()) return false;
    const std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) {
      line_ = text_.substr(pos_);
      pos_ = text_.size();
    } else {
      line_ = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
    }
    ++number_;
    if (line_.find('\r') != std::string_view::npos) fail("carriage return (expected LF line endings)");
    return true;
  }

  std::string_view line() const { return line_; }
  std::size_t number() const { return number_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(number_, what); }

  // Splits the current line on single spaces and parses every field after the tag.
  std::vector<std::uint64_t> fields(std::string_view tag, std::size_t count) const {
    if (!line_.starts_with(tag)) fail("expected '" + std::string(tag) + "'");
    std::string_view rest = line_.substr(tag.size());
    std::vector<std::uint64_t> values;
    while (!rest.empty()) {
      if (rest.front() != ' ') fail("expected a single space separator");
      rest.remove_prefix(1);
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
      if (ec != std::errc() || ptr == rest.data()) fail("expected a nonnegative integer");
      rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
      values.push_back(value);
    }
    if (values.size() != count) {
      fail("expected " + std::to_string(count) + " fields after '" + std::string(tag) + "'");
    }
    return values;
  }

 private:
  std::string_view text_;
  std::string_view line_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

std::uint64_t header(LineParser& p, std::string_view tag) {
  if (!p.next()) p.fail("missing '" + std::string(tag) + "' header");
  return p.fields(tag, 1)[0];
}

}  // namespace

Dataset decode(std::string_view text) {
  LineParser p(text);
  const auto nodes = header(p, "#nodes");
  const auto edges = header(p, "#edges");
  const auto skills = header(p, "#skills");
  if (nodes > 0xffffffffull) p.fail("vertex count exceeds 32-bit ids");

  auto graph = std::make_shared<Graph>(static_cast<std::size_t>(nodes));
  std::size_t edges_read = 0;
  std::optional<EndorsementSet> endorsements;

  while (p.next()) {
    if (p.line().empty()) continue;
    if (p.line().starts_with("e ")) {
      if (endorsements) p.fail("edge line after arc lines");
      const auto f = p.fields("e", 2);
      if (f[0] >= nodes || f[1] >= nodes) p.fail("edge endpoint out of range");
      if (f[0] == f[1]) p.fail("self-loop edge");
      if (!graph->add_edge(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]))) {
        p.fail("duplicate edge");
      }
      ++edges_read;
    } else if (p.line().starts_with("a ")) {
      const auto f = p.fields("a", 3);
      if (!endorsements) {
        if (edges_read != edges) p.fail("edge count does not match #edges header");
        endorsements.emplace(graph, static_cast<std::size_t>(skills));
      }
      if (f[0] >= skills) p.fail("skill index out of range");
      if (f[1] >= nodes || f[2] >= nodes) p.fail("arc endpoint out of range");
      if (f[1] == f[2]) p.fail("self-arc");
      const auto from = static_cast<Vertex>(f[1]);
      const auto to = static_cast<Vertex>(f[2]);
      if (!graph->has_edge(from, to)) p.fail("arc is not an edge of the base graph");
      if (!endorsements->add_arc(static_cast<Skill>(f[0]), from, to)) p.fail("duplicate arc");
    } else {
      p.fail("unrecognized line");
    }
  }
  if (edges_read != edges) throw ParseError(p.number(), "edge count does not match #edges header");
  if (!endorsements && skills > 0) endorsements.emplace(graph, static_cast<std::size_t>(skills));
  return Dataset{std::move(graph), std::move(endorsements)};
}

Dataset decode(std::istream& in) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  return decode(std::string_view(text));
}

Dataset read_dataset(const std::filesystem::path& path) {
  return decode(std::string_view(read_text_file(path)));
}

void write_dataset(const std::filesystem::path& path, const Graph& graph,
                   const EndorsementSet* endorsements) {
  write_text_file_atomic(path, encode(graph, endorsements));
}

}  // namespace endorsim
